#ifndef VCSP_SOLVER_HPP
#define VCSP_SOLVER_HPP

#include "vcsp/ops.hpp"

#include <vector>

namespace vcsp {

inline constexpr std::size_t kMaxEnumeration = 10'000'000;

struct Solution {
    Assignment assignment;
    Cost cost;
    bool optimal = true;
    bool feasible = true;
};

/// Exhaustive minimum with the lexicographically least optimal assignment. `jobs` > 1
/// splits the enumeration into contiguous blocks; the result does not depend on it.
/// Throws CapabilityError when |D|^num_vars exceeds `cap`.
Solution brute_force_solve(const Instance& instance, const Language& lang, unsigned jobs = 1,
                           std::size_t cap = kMaxEnumeration);

struct FuseResult {
    std::vector<Assignment> fused;
    Cost input_total;
    Cost fused_total;
    /// fused_total <= input_total, or some input was infeasible.
    bool improved_or_equal = true;
};

/// Applies the operations component-wise to the given assignments. The operations are
/// first verified as a multimorphism of the language; StructuralError if they are not.
FuseResult fuse_improve(const Instance& instance, const Language& lang, const OpPair& ops,
                        const Assignment& x, const Assignment& y);
FuseResult fuse_improve(const Instance& instance, const Language& lang, const OpTriple& ops,
                        const Assignment& x, const Assignment& y, const Assignment& z);

} // namespace vcsp

#endif // VCSP_SOLVER_HPP
