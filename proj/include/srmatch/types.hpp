#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srm {

/// Agents are dense 1-based integers in [1..n].
using Agent = int;

/// An unordered edge/pair, stored normalized with first < second.
using Pair = std::pair<Agent, Agent>;

inline Pair make_pair_sorted(Agent a, Agent b) {
    return a < b ? Pair{a, b} : Pair{b, a};
}

/// A set of disjoint pairs over an instance. Pairs are normalized (u < v)
/// and kept sorted, so Matching values compare lexicographically.
struct Matching {
    std::vector<Pair> pairs;

    Matching() = default;
    explicit Matching(std::vector<Pair> p);

    bool empty() const { return pairs.empty(); }
    std::size_t size() const { return pairs.size(); }

    bool contains(Pair e) const;
    void add(Agent a, Agent b);

    /// Partner lookup table: result[a] == 0 means unmatched. Size n+1.
    std::vector<Agent> partner_map(int n) const;

    bool operator==(const Matching&) const = default;
    auto operator<=>(const Matching&) const = default;
};

// ---------------------------------------------------------------------------
// Error types. Names follow the library's operation contracts.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TiesPresent : Error {
    TiesPresent() : Error("operation requires a strict instance, but ties are present") {}
};

struct NotAcceptable : Error {
    NotAcceptable(Agent i, Agent j)
        : Error("agent " + std::to_string(j) + " is not acceptable to agent " + std::to_string(i)) {}
};

struct InvalidMatching : Error {
    using Error::Error;
};

struct Unsolvable : Error {
    Unsolvable() : Error("instance admits no stable matching") {}
};

struct CapExceeded : Error {
    std::uint64_t partial_count;
    explicit CapExceeded(std::uint64_t count)
        : Error("enumeration cap exceeded after " + std::to_string(count) + " stable matchings"),
          partial_count(count) {}
};

struct DegreeTooHigh : Error {
    using Error::Error;
};

struct SizeGuardExceeded : Error {
    using Error::Error;
};

struct ContractViolation : Error {
    using Error::Error;
};

struct NotCubic : Error {
    using Error::Error;
};

struct NotACover : Error {
    using Error::Error;
};

struct NotStable : Error {
    NotStable() : Error("matching is not stable in the reduced instance") {}
};

struct MalformedFormula : Error {
    using Error::Error;
};

struct OccurrenceBound : Error {
    int var;
    bool negated;
    int count;
    OccurrenceBound(int v, bool neg, int c)
        : Error("variable " + std::to_string(v) + " occurs " + std::to_string(c) +
                " times in " + (neg ? "negated" : "unnegated") + " form (limit 2)"),
          var(v), negated(neg), count(c) {}
};

struct NotSatisfying : Error {
    using Error::Error;
};

struct MalformedMatching : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int ln, const std::string& reason)
        : Error("line " + std::to_string(ln) + ": " + reason), line(ln) {}
};

struct Internal : Error {
    using Error::Error;
};

}  // namespace srm
