#ifndef VCSP_OPS_HPP
#define VCSP_OPS_HPP

#include "vcsp/language.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vcsp {

/// Operation D^arity -> D stored row-major.
class Operation {
public:
    Operation() = default;
    Operation(int domain_size, int arity, std::vector<Label> table);

    template <class Fn>
    static Operation tabulate(int domain_size, int arity, Fn&& fn) {
        std::vector<Label> table;
        Tuple t(static_cast<std::size_t>(arity), 0);
        std::size_t n = 1;
        for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(domain_size);
        table.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            table.push_back(fn(static_cast<const Tuple&>(t)));
            for (int k = arity - 1; k >= 0; --k) {
                if (++t[static_cast<std::size_t>(k)] < domain_size) break;
                t[static_cast<std::size_t>(k)] = 0;
            }
        }
        return Operation(domain_size, arity, std::move(table));
    }

    int domain_size() const noexcept { return domain_size_; }
    int arity() const noexcept { return arity_; }
    const std::vector<Label>& table() const noexcept { return table_; }

    Label operator()(Label a, Label b) const { return table_[static_cast<std::size_t>(a * domain_size_ + b)]; }
    Label operator()(Label a, Label b, Label c) const {
        return table_[static_cast<std::size_t>((a * domain_size_ + b) * domain_size_ + c)];
    }
    Label apply(std::span<const Label> args) const;

    friend bool operator==(const Operation&, const Operation&) = default;

private:
    int domain_size_ = 2;
    int arity_ = 2;
    std::vector<Label> table_;
};

/// Binary operation (a meet or join candidate).
using BinaryOp = Operation;
/// Ternary operation (a majority or minority candidate).
using TernaryOp = Operation;

struct OpPair {
    BinaryOp meet;
    BinaryOp join;
    friend bool operator==(const OpPair&, const OpPair&) = default;
};

struct OpTriple {
    TernaryOp mj1;
    TernaryOp mj2;
    TernaryOp mn3;
    friend bool operator==(const OpTriple&, const OpTriple&) = default;
};

namespace ops {
BinaryOp min(int d);
BinaryOp max(int d);
BinaryOp first(int d);
BinaryOp second(int d);
/// Boolean-style majority: the repeated label on two-valued tuples, the first argument elsewhere.
TernaryOp majority(int d);
/// x + y + z mod d; a minority operation when d = 2.
TernaryOp parity(int d);
Operation projection(int d, int arity, int coordinate);
} // namespace ops

struct OpProperties {
    bool conservative = false;
    bool commutative = false; // binary operations only
    bool majority = false;    // ternary operations only
    bool minority = false;    // ternary operations only
    bool idempotent = false;
    friend bool operator==(const OpProperties&, const OpProperties&) = default;
};

OpProperties op_properties(const Operation& op);

/// Unordered label pair stored as (min, max).
using LabelPair = std::pair<Label, Label>;
using PairSet = std::set<LabelPair>;

LabelPair canonical_pair(Label a, Label b);
bool contains_pair(const PairSet& s, Label a, Label b);
PairSet all_pairs(int domain_size);
PairSet complement(const PairSet& s, int domain_size);

struct Violation {
    enum class Source { Function, UnaryProbe, Structure };
    Source source = Source::Function;
    std::optional<std::size_t> function;
    std::vector<Tuple> inputs;
    std::vector<Tuple> outputs;
    std::optional<Cost> lhs;
    std::optional<Cost> rhs;
    std::string detail;
};

struct MmReport {
    bool holds = true;
    std::optional<Violation> violation;
    std::vector<std::string> notes;

    static MmReport fail(Violation v) {
        MmReport r;
        r.holds = false;
        r.violation = std::move(v);
        return r;
    }
};

std::string describe(const Violation& v);

/// f(x meet y) + f(x join y) <= f(x) + f(y) for all x, y in dom f, every f,
/// followed by the language's implicit unaries.
MmReport check_multimorphism(const OpPair& pair, const Language& lang);
/// Ternary analogue over all dom-f triples.
MmReport check_multimorphism(const OpTriple& triple, const Language& lang);
/// Single operation as a polymorphism: images of dom-f tuples stay in dom f.
MmReport check_polymorphism(const Operation& op, const Language& lang);

/// Same checks on one function, without implicit unaries.
MmReport check_multimorphism(const OpPair& pair, const CostFunction& f);
MmReport check_multimorphism(const OpTriple& triple, const CostFunction& f);

/// Pair: conservative on all pairs a != b and commutative on pairs in `m_set`.
MmReport check_structure(const OpPair& pair, const PairSet& m_set);
/// Triple: conservative everywhere, majority/majority/minority on two-valued tuples
/// whose label pair lies outside `m_set`.
MmReport check_structure(const OpTriple& triple, const PairSet& m_set);

/// Tournament candidate #mask on `m_set`: bit i of mask set means the meet of the
/// i-th pair (in set order) is its larger label. Pairs outside m_set use first/second.
OpPair stp_candidate(int domain_size, const PairSet& m_set, std::uint64_t mask);

/// First candidate, in mask order, passing check_multimorphism on `lang`.
/// Throws CapabilityError when |m_set| > 20.
std::optional<OpPair> search_stp(const Language& lang, const PairSet& m_set);

} // namespace vcsp

#endif // VCSP_OPS_HPP
