#include "srmatch/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "srmatch/rng.hpp"

namespace srm {

namespace {

// Lines of text with their 1-based numbers, comments and blanks dropped.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        out.emplace_back(no, line.substr(first, last - first + 1));
    }
    return out;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header");

    std::istringstream hdr(lines[0].second);
    std::string kind, ntok, extra;
    hdr >> kind >> ntok;
    if ((kind != "sri" && kind != "srti") || ntok.empty() || (hdr >> extra))
        throw ParseError(lines[0].first, "header must be 'sri <n>' or 'srti <n>'");
    int n = parse_int(ntok, lines[0].first);
    if (n < 0) throw ParseError(lines[0].first, "agent count must be non-negative");

    std::vector<PrefList> prefs(n);
    std::vector<char> seen(n + 1, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [lineno, body] = lines[i];
        std::size_t colon = body.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "missing ':' after agent id");
        int agent = parse_int(body.substr(0, colon), lineno);
        if (agent < 1 || agent > n)
            throw ParseError(lineno, "agent id " + std::to_string(agent) + " out of range");
        if (seen[agent])
            throw ParseError(lineno, "duplicate line for agent " + std::to_string(agent));
        seen[agent] = 1;

        PrefList tiers;
        std::istringstream rest(body.substr(colon + 1));
        std::string tok;
        bool in_tie = false;
        Tier tie;
        while (rest >> tok) {
            while (!tok.empty() && tok.front() == '(') {
                if (in_tie) throw ParseError(lineno, "nested '('");
                in_tie = true;
                tok.erase(tok.begin());
            }
            int closes = 0;
            while (!tok.empty() && tok.back() == ')') {
                ++closes;
                tok.pop_back();
            }
            if (closes > 1 || (closes == 1 && !in_tie)) throw ParseError(lineno, "unmatched ')'");
            if (!tok.empty()) {
                int id = parse_int(tok, lineno);
                if (in_tie)
                    tie.push_back(id);
                else
                    tiers.push_back({id});
            }
            if (closes == 1) {
                if (tie.empty()) throw ParseError(lineno, "empty tie");
                tiers.push_back(tie);
                tie.clear();
                in_tie = false;
            }
        }
        if (in_tie) throw ParseError(lineno, "unterminated tie");
        prefs[agent - 1] = std::move(tiers);
    }
    for (int a = 1; a <= n; ++a)
        if (!seen[a]) throw ParseError(static_cast<int>(lines.size()) + 1,
                                       "missing line for agent " + std::to_string(a));
    return Instance(n, std::move(prefs));
}

std::string render_instance(const Instance& inst) {
    std::ostringstream out;
    out << (inst.strict() ? "sri " : "srti ") << inst.n_agents() << "\n";
    for (Agent a = 1; a <= inst.n_agents(); ++a) {
        out << a << ":";
        for (const auto& tier : inst.tiers(a)) {
            if (tier.size() == 1) {
                out << " " << tier[0];
            } else {
                out << " (";
                for (std::size_t k = 0; k < tier.size(); ++k)
                    out << (k ? " " : "") << tier[k];
                out << ")";
            }
        }
        out << "\n";
    }
    return out.str();
}

CubicGraph parse_graph(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing 'p <n> <m>' header");
    std::istringstream hdr(lines[0].second);
    std::string p, ntok, mtok, extra;
    hdr >> p >> ntok >> mtok;
    if (p != "p" || mtok.empty() || (hdr >> extra))
        throw ParseError(lines[0].first, "header must be 'p <n> <m>'");
    CubicGraph g;
    g.n = parse_int(ntok, lines[0].first);
    int m = parse_int(mtok, lines[0].first);
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError(lines[0].first,
                         "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(lines.size() - 1));
    for (int j = 1; j <= m; ++j) {
        auto [lineno, body] = lines[j];
        std::istringstream es(body);
        std::string utok, vtok;
        es >> utok >> vtok;
        if (vtok.empty() || (es >> extra)) throw ParseError(lineno, "expected 'u v'");
        int u = parse_int(utok, lineno);
        int v = parse_int(vtok, lineno);
        if (u < 1 || u > g.n || v < 1 || v > g.n || u == v)
            throw ParseError(lineno, "bad edge endpoints");
        g.edges.push_back(make_pair_sorted(u, v));
    }
    require_cubic(g);
    return g;
}

CnfFormula parse_dimacs(const std::string& text, bool relaxed) {
    auto lines = content_lines(text);
    CnfFormula f;
    int declared_clauses = -1;
    std::vector<int> current;
    int header_line = 0;
    std::vector<std::array<int, 3>>& clauses = f.clauses;
    for (auto& [lineno, body] : lines) {
        if (body[0] == 'c' && (body.size() == 1 || body[1] == ' ')) continue;
        std::istringstream in(body);
        std::string tok;
        in >> tok;
        if (tok == "p") {
            std::string cnf, ntok, mtok, extra;
            in >> cnf >> ntok >> mtok;
            if (cnf != "cnf" || mtok.empty() || (in >> extra))
                throw ParseError(lineno, "header must be 'p cnf <vars> <clauses>'");
            f.nvars = parse_int(ntok, lineno);
            declared_clauses = parse_int(mtok, lineno);
            header_line = lineno;
            continue;
        }
        if (declared_clauses < 0) throw ParseError(lineno, "clause before 'p cnf' header");
        in.clear();
        in.seekg(0);
        int lit;
        while (in >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw MalformedFormula("clause at line " + std::to_string(lineno) +
                                           " has " + std::to_string(current.size()) +
                                           " literals; exactly 3 required");
                clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                int v = std::abs(lit);
                if (v < 1 || v > f.nvars)
                    throw ParseError(lineno, "literal " + std::to_string(lit) + " out of range");
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) throw ParseError(header_line, "last clause not terminated by 0");
    if (declared_clauses < 0) throw ParseError(1, "missing 'p cnf' header");
    if (f.nclauses() != declared_clauses)
        throw ParseError(header_line, "declared " + std::to_string(declared_clauses) +
                                          " clauses, found " + std::to_string(f.nclauses()));
    require_valid_formula(f, relaxed);
    return f;
}

Instance random_instance(int n, int d, double tie_prob, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> degree(n + 1, 0);
    std::set<Pair> chosen;

    // Sampled insertion keeps generation O(m) so very large degree-2
    // instances stay cheap. Density varies with the seed.
    double density = 0.4 + 0.5 * rng.unit();
    long long target = std::max<long long>(1, static_cast<long long>(density * n * d / 2.0));
    long long attempts = 8 * target + 64;
    for (long long t = 0; t < attempts && static_cast<long long>(chosen.size()) < target; ++t) {
        Agent u = static_cast<Agent>(rng.below(n)) + 1;
        Agent v = static_cast<Agent>(rng.below(n)) + 1;
        if (u == v || degree[u] >= d || degree[v] >= d) continue;
        if (!chosen.insert(make_pair_sorted(u, v)).second) continue;
        ++degree[u];
        ++degree[v];
    }

    std::vector<std::vector<Agent>> nbr(n + 1);
    for (auto [u, v] : chosen) {
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }

    std::vector<PrefList> prefs(n);
    for (Agent a = 1; a <= n; ++a) {
        rng.shuffle(nbr[a]);
        PrefList tiers;
        for (std::size_t k = 0; k < nbr[a].size(); ++k) {
            if (k > 0 && rng.chance(tie_prob))
                tiers.back().push_back(nbr[a][k]);
            else
                tiers.push_back({nbr[a][k]});
        }
        prefs[a - 1] = std::move(tiers);
    }
    return Instance(n, std::move(prefs), d);
}

}  // namespace srm
