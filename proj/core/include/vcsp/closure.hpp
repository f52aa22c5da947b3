#ifndef VCSP_CLOSURE_HPP
#define VCSP_CLOSURE_HPP

#include "vcsp/express.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vcsp {

struct ClosureBudget {
    /// Rounds of combination after the seed round.
    int rounds = 3;
    /// Maximum number of members kept.
    std::size_t size = 512;
    /// Members with an entry whose numerator or denominator exceeds 2^bits are dropped.
    int magnitude_bits = 32;
};

/// How a closure member was derived from earlier members.
struct Provenance {
    enum class Kind { Seed, Zero, Sum, Compose, Transpose, Restrict };
    Kind kind = Kind::Zero;

    // Seed: coordinates of `function` feeding x and y (-1 leaves that side free), and a
    // label-set mask for every other coordinate in increasing order (full mask = minimize).
    std::size_t function = 0;
    int x_coordinate = -1;
    int y_coordinate = -1;
    std::vector<std::uint32_t> pin_masks;

    // Sum / Compose / Transpose / Restrict operands.
    std::size_t left = 0;
    std::size_t right = 0;
    // Restrict: 0 restricts x, 1 restricts y, to the labels in `mask`.
    int side = 0;
    std::uint32_t mask = 0;
};

std::string_view to_string(Provenance::Kind k);

struct ClosureMember {
    /// Normalized table: every row and column with a finite entry has minimum 0.
    CostFunction table;
    Provenance provenance;
    /// The audit gadget expresses table(x, y) + row_offset[x] + col_offset[y] on dom.
    std::vector<Rational> row_offset;
    std::vector<Rational> col_offset;
    /// The audit gadget uses crisp unaries (only valid under general unaries, or for the graph).
    bool uses_crisp = false;
    /// The audit gadget uses finite-valued unaries (valid in any conservative language).
    bool uses_finite_unary = false;
    int round = 0;
    std::size_t gadget_vars = 2;
};

/// A finite, budgeted under-approximation of the binary part of the expressive power.
struct BinaryClosure {
    int domain_size = 2;
    ClosureBudget budget;
    std::vector<ClosureMember> members;
    int rounds_completed = 0;
    /// One full round added nothing and nothing was dropped.
    bool saturated = false;
    bool budget_exhausted = false;
    bool dropped_oversized = false;

    std::optional<std::size_t> find(const CostFunction& table) const;
};

/// Subtracts finite row minima, then finite column minima. `row`/`col` receive the shifts.
CostFunction normalize(const CostFunction& f, std::vector<Rational>* row = nullptr, std::vector<Rational>* col = nullptr);

/// Seeds with every pin-projection of the language's functions (pins range over all
/// non-empty label subsets) plus the zero table, then repeatedly adds sums, compositions,
/// transposes and crisp restrictions, normalizing and deduplicating as it goes.
BinaryClosure binary_closure(const Language& lang, const ClosureBudget& budget = {});

/// Reconstructs the gadget behind a member. Throws CapabilityError past `max_vars`.
Gadget audit_gadget(const BinaryClosure& closure, std::size_t member, const Language& lang, std::size_t max_vars = 64);

/// Evaluates the audit gadget and compares it with the member and its recorded offsets.
bool audit_member(const BinaryClosure& closure, std::size_t member, const Language& lang, std::string* why = nullptr);

} // namespace vcsp

#endif // VCSP_CLOSURE_HPP
