#ifndef VCSP_CLASSIFY_HPP
#define VCSP_CLASSIFY_HPP

#include "vcsp/majority.hpp"
#include "vcsp/mjn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vcsp {

struct ClassifyBudgets {
    ClosureBudget closure;
    /// Unset: exhaustive for |D| <= 3, backtracking otherwise.
    std::optional<MajorityStrategy> strategy;
    std::uint64_t majority_nodes = 20'000'000;
    int max_domain = 4;
    /// Largest number of candidate loop-free pair sets tried for the STP/MJN certificate.
    std::size_t max_candidate_sets = 4096;
};

enum class VerdictKind { Tractable, NPHard, Unknown };
enum class HardnessReason { SoftSelfLoop, NoMajority };

std::string_view to_string(VerdictKind k);
std::string_view to_string(HardnessReason r);

/// An STP on m_set and an MJN on its complement, both verified against the language.
struct TractableCertificate {
    PairSet m_set;
    OpPair stp;
    OpTriple triple;
    MuMap mu;
};

struct SoftLoopWitness {
    Node node;
    std::size_t member = 0;
    /// Normalized closure table; edge_witness(table, node, node) is soft.
    CostFunction table;
    /// Gadget over the language plus unaries whose output is the table up to unary shifts.
    /// Absent when the gadget would exceed the evaluation cap.
    std::optional<Gadget> gadget;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<HardnessReason> reason;
    std::optional<TractableCertificate> tractable;
    std::optional<SoftLoopWitness> soft_loop;
    std::optional<MajorityRefutation> refutation;
    /// Unknown: the stage that could not finish.
    std::string stage;
    ClassifyBudgets budgets;
    MajorityStrategy strategy = MajorityStrategy::Exhaustive;
    std::size_t closure_members = 0;
    int closure_rounds = 0;
    bool closure_saturated = false;
    /// Deterministic step-by-step log.
    std::vector<std::string> trace;
};

/// Conservative languages only (CapabilityError otherwise, or past max_domain):
///  1. budgeted binary closure and pair graph;
///  2. a soft self-loop -> NP-hard;
///  3. no majority polymorphism (complete refutation) -> NP-hard;
///  4. STP search on the loop-free pairs, then on smaller symmetric subsets;
///  5. mu, MJN construction and verification -> tractable;
///  anything unfinished -> unknown, with the stage recorded.
Verdict classify(const Language& lang, const ClassifyBudgets& budgets = {});

} // namespace vcsp

#endif // VCSP_CLASSIFY_HPP
