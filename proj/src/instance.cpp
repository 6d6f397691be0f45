#include "srmatch/instance.hpp"

#include <algorithm>
#include <set>

namespace srm {

Matching::Matching(std::vector<Pair> p) : pairs(std::move(p)) {
    for (auto& e : pairs) e = make_pair_sorted(e.first, e.second);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

bool Matching::contains(Pair e) const {
    return std::binary_search(pairs.begin(), pairs.end(), make_pair_sorted(e.first, e.second));
}

void Matching::add(Agent a, Agent b) {
    auto e = make_pair_sorted(a, b);
    auto it = std::lower_bound(pairs.begin(), pairs.end(), e);
    if (it == pairs.end() || *it != e) pairs.insert(it, e);
}

std::vector<Agent> Matching::partner_map(int n) const {
    std::vector<Agent> partner(n + 1, 0);
    for (auto [u, v] : pairs) {
        if (u >= 1 && u <= n) partner[u] = v;
        if (v >= 1 && v <= n) partner[v] = u;
    }
    return partner;
}

Instance::Instance(int n, std::vector<PrefList> prefs, int degree_bound) : n_(n) {
    tiers_.assign(n_ + 1, {});
    for (int i = 0; i < n_ && i < static_cast<int>(prefs.size()); ++i)
        tiers_[i + 1] = std::move(prefs[i]);

    flat_.assign(n_ + 1, {});
    tier_id_.assign(n_ + 1, {});
    int maxlen = 0;
    for (Agent a = 1; a <= n_; ++a) {
        int t = 0;
        for (auto& tier : tiers_[a]) {
            std::sort(tier.begin(), tier.end());
            if (tier.size() > 1) strict_ = false;
            for (Agent b : tier) {
                flat_[a].push_back(b);
                tier_id_[a].push_back(t);
            }
            ++t;
        }
        maxlen = std::max(maxlen, static_cast<int>(flat_[a].size()));
    }
    degree_bound_ = degree_bound > 0 ? degree_bound : std::max(1, maxlen);
}

int Instance::tier_index(Agent a, Agent b) const {
    if (a < 1 || a > n_) return -1;
    const auto& lst = flat_[a];
    for (std::size_t k = 0; k < lst.size(); ++k)
        if (lst[k] == b) return tier_id_[a][k];
    return -1;
}

int Instance::max_list_length() const {
    int m = 0;
    for (Agent a = 1; a <= n_; ++a) m = std::max(m, list_length(a));
    return m;
}

std::vector<Pair> Instance::edges() const {
    std::vector<Pair> es;
    for (Agent a = 1; a <= n_; ++a)
        for (Agent b : flat_[a])
            if (a < b) es.emplace_back(a, b);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

long long Instance::edge_count() const {
    long long total = 0;
    for (Agent a = 1; a <= n_; ++a) total += list_length(a);
    return total / 2;
}

std::vector<Violation> validate(const Instance& inst) {
    std::vector<Violation> out;
    auto flag = [&](std::string code, std::vector<Agent> agents, std::string msg) {
        out.push_back({std::move(code), std::move(agents), std::move(msg)});
    };

    if (inst.degree_bound() < 1)
        flag("bad-degree-bound", {}, "degree bound must be at least 1");

    for (Agent a = 1; a <= inst.n_agents(); ++a) {
        std::set<Agent> seen;
        for (const auto& tier : inst.tiers(a)) {
            if (tier.empty())
                flag("empty-tier", {a}, "agent " + std::to_string(a) + " has an empty tier");
            for (Agent b : tier) {
                if (b < 1 || b > inst.n_agents()) {
                    flag("id-range", {a, b},
                         "agent " + std::to_string(a) + " lists out-of-range id " + std::to_string(b));
                    continue;
                }
                if (b == a)
                    flag("self-loop", {a}, "agent " + std::to_string(a) + " lists itself");
                if (!seen.insert(b).second)
                    flag("duplicate", {a, b},
                         "agent " + std::to_string(a) + " lists agent " + std::to_string(b) + " twice");
            }
        }
        if (inst.list_length(a) > inst.degree_bound())
            flag("list-too-long", {a},
                 "agent " + std::to_string(a) + " has list length " +
                     std::to_string(inst.list_length(a)) + " > degree bound " +
                     std::to_string(inst.degree_bound()));
        for (Agent b : inst.list(a)) {
            if (b < 1 || b > inst.n_agents() || b == a) continue;
            if (!inst.acceptable(b, a))
                flag("asymmetric", {a, b},
                     "agent " + std::to_string(a) + " lists agent " + std::to_string(b) +
                         " but not vice versa");
        }
    }
    return out;
}

}  // namespace srm
