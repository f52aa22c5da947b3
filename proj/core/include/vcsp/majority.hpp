#ifndef VCSP_MAJORITY_HPP
#define VCSP_MAJORITY_HPP

#include "vcsp/ops.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vcsp {

// A majority operation is fixed on every tuple with at most two distinct labels; the
// only freedom is its value on the all-distinct triples (a, b, c). Those triples are the
// search variables below.

enum class MajorityStrategy {
    /// Every value in D for every free triple, lexicographic order, full assignments
    /// checked one by one. |D| <= 3 only.
    Exhaustive,
    /// Conservative values only ({a, b, c} for the triple (a, b, c)), most constrained
    /// triple first, pruning on the first effective-domain violation. |D| <= 4.
    Backtracking,
};

std::string_view to_string(MajorityStrategy s);
MajorityStrategy majority_strategy_from_string(std::string_view s);

/// A pruned subtree: the free triples `variables[0 .. prefix.size())` take the values
/// in `prefix`, and then the component-wise majority of (x, y, z), all in dom f, leaves dom f.
struct RefutationStep {
    std::vector<Label> prefix;
    std::size_t function = 0;
    Tuple x, y, z;
};

/// Complete refutation tree in depth-first order. Replaying it needs no search.
struct MajorityRefutation {
    int domain_size = 2;
    bool conservative = false;
    std::vector<std::array<Label, 3>> variables;
    std::vector<RefutationStep> steps;
};

struct MajoritySearchResult {
    std::optional<TernaryOp> majority;
    /// True when the search space was fully explored (a found majority, or a complete refutation).
    bool complete = false;
    MajorityRefutation refutation;
    std::uint64_t nodes = 0;
};

/// Searches for a majority polymorphism of Feas(lang). Throws CapabilityError when the
/// domain is too large for the strategy. A result with no majority and `complete` set is
/// a refutation certificate; `node_limit` bounds the work otherwise.
MajoritySearchResult search_majority(const Language& lang, MajorityStrategy strategy,
                                     std::uint64_t node_limit = 20'000'000);

/// Re-validates every step and checks the steps cover the whole search tree.
bool replay_refutation(const Language& lang, const MajorityRefutation& refutation, std::string* why = nullptr);

} // namespace vcsp

#endif // VCSP_MAJORITY_HPP
