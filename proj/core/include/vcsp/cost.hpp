#ifndef VCSP_COST_HPP
#define VCSP_COST_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vcsp {

/// Signed exact rational with 64-bit numerator and denominator, always in lowest
/// terms with a positive denominator. Results that do not fit throw OverflowError.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_negative() const noexcept { return num_ < 0; }

    /// Largest absolute value among numerator and denominator.
    std::uint64_t magnitude() const noexcept;

    /// Greatest integer not exceeding the value.
    std::int64_t floor() const noexcept;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "7", "-3", "7/2".
    std::string to_string() const;
    /// Accepts "p", "-p", "p/q". Throws ParseError on anything else (decimals included).
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Extended non-negative cost: a finite non-negative rational or +infinity.
/// Addition is total and infinity absorbs.
class Cost {
public:
    constexpr Cost() = default;
    Cost(std::int64_t v) : Cost(Rational(v)) {} // NOLINT(google-explicit-constructor)
    Cost(const Rational& v);                   // NOLINT(google-explicit-constructor)

    static Cost infinity() noexcept {
        Cost c;
        c.infinite_ = true;
        return c;
    }

    bool is_finite() const noexcept { return !infinite_; }
    bool is_infinite() const noexcept { return infinite_; }
    bool is_zero() const noexcept { return !infinite_ && value_.is_zero(); }

    /// Throws StructuralError when infinite.
    const Rational& value() const;

    friend Cost operator+(const Cost& a, const Cost& b);
    Cost& operator+=(const Cost& o) { return *this = *this + o; }

    friend bool operator==(const Cost& a, const Cost& b) noexcept;
    friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) noexcept;

    /// Exact rendering: "inf", "3", "7/2".
    std::string to_string() const;
    /// Accepts "inf", "p", "p/q" with p >= 0.
    static Cost parse(std::string_view text);

private:
    bool infinite_ = false;
    Rational value_;
};

} // namespace vcsp

#endif // VCSP_COST_HPP
