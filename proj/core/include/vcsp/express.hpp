#ifndef VCSP_EXPRESS_HPP
#define VCSP_EXPRESS_HPP

#include "vcsp/language.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace vcsp {

/// Largest |D|^(exposed + auxiliary) a gadget evaluation may enumerate.
inline constexpr std::size_t kMaxGadgetEvaluations = 10'000'000;

/// An instance whose exposed variables define a cost function by minimizing out the rest.
/// The gadget carries its own language: the functions it was built from plus any unaries
/// it uses.
struct Gadget {
    Language language;
    Instance instance;
    std::vector<int> exposed;

    /// Variables not in `exposed`, ascending.
    std::vector<int> auxiliary() const;
    void validate() const;
};

/// f(x) = min over auxiliary assignments of the gadget's cost, exactly.
CostFunction express_gadget(const Gadget& g);
CostFunction express_gadget(const Instance& instance, const Language& lang, const std::vector<int>& exposed);

/// h(x', x'') = min_x f(x', x) + g(x, x'').
CostFunction min_compose(const CostFunction& f, const CostFunction& g);
/// Pointwise sum of two functions of equal arity.
CostFunction pointwise_sum(const CostFunction& f, const CostFunction& g);

namespace pin {
struct Minimize {};
struct Fixed {
    Label label;
};
/// Adds `penalty` whenever the coordinate takes `label`, then minimizes it out.
struct Penalty {
    Label label;
    Rational penalty;
};
/// Restricts the coordinate to the label set `mask`, then minimizes it out.
struct Subset {
    std::uint32_t mask;
};
} // namespace pin
using Pin = std::variant<pin::Minimize, pin::Fixed, pin::Penalty, pin::Subset>;

/// Binary function of coordinates (keep_first, keep_second) of f, with every other
/// coordinate handled by its pin (given in increasing coordinate order).
CostFunction pin_project(const CostFunction& f, int keep_first, int keep_second, const std::vector<Pin>& pins);

} // namespace vcsp

#endif // VCSP_EXPRESS_HPP
