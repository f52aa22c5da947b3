#ifndef VCSP_MJN_HPP
#define VCSP_MJN_HPP

#include "vcsp/graph.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcsp {

/// A closure member whose effective domain is exactly {(a, a'), (b, a'), (c, b')}
/// with {a', b'} looped, which puts c in mu({a, b, c}).
struct MuWitness {
    std::size_t member = 0;
    /// (a', b').
    Node pair;
};

struct MuEntry {
    Label label = 0;
    MuWitness witness;
};

/// mu maps each 3-label set to at most one of its labels. Sets with fewer than three
/// distinct labels map to nothing.
struct MuMap {
    int domain_size = 2;
    /// Keyed by the sorted label set.
    std::map<std::array<Label, 3>, MuEntry> entries;

    std::optional<Label> at(Label a, Label b, Label c) const;
};

/// Two labels of one 3-set both qualified. This can only happen when a soft edge at a
/// looped node was missed; `composed` is min_compose(first^T, second), whose effective
/// domain exhibits that edge.
class MuConflict : public std::runtime_error {
public:
    MuConflict(std::array<Label, 3> set, MuEntry first, MuEntry second, CostFunction composed);

    const std::array<Label, 3>& set() const noexcept { return set_; }
    const MuEntry& first() const noexcept { return first_; }
    const MuEntry& second() const noexcept { return second_; }
    const CostFunction& composed() const noexcept { return composed_; }

private:
    std::array<Label, 3> set_;
    MuEntry first_, second_;
    CostFunction composed_;
};

/// Scans closure members in index order. `m_set` is the loop-free pair set; pairs
/// outside it count as looped. Throws MuConflict.
MuMap compute_mu(const BinaryClosure& closure, const PairSet& m_set);
MuMap compute_mu(const BinaryClosure& closure, const PairGraph& g);

/// If mu({a, b, c}) = {c} then {a, c} and {b, c} must be looped. Returns violations.
std::vector<std::string> check_mu(const MuMap& mu, const PairSet& m_set);

/// The triple built from mu and an STP, case by case:
///  {{x, x, y}} with {x, y} looped -> (x, x, y) in the argument order;
///  mu = {a} -> (b meet c, b join c, a);  mu = {b} -> (a meet c, a join c, b);
///  otherwise (a meet b, a join b, c).
OpTriple construct_mjn(const MuMap& mu, const OpPair& stp, const PairSet& m_set);
OpTriple construct_mjn(const MuMap& mu, const OpPair& stp, const PairGraph& g);

/// The triple is a multimorphism of the language and an MJN on the looped pairs.
MmReport verify_mjn(const OpTriple& triple, const Language& lang, const PairSet& m_set);
MmReport verify_mjn(const OpTriple& triple, const Language& lang, const PairGraph& g);

} // namespace vcsp

#endif // VCSP_MJN_HPP
