#include "vcsp/cost.hpp"

#include "vcsp/error.hpp"

#include <charconv>
#include <limits>

namespace vcsp {

namespace {

__extension__ typedef __int128 wide;

wide wide_gcd(wide a, wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() + 1 && v <= std::numeric_limits<std::int64_t>::max();
}

Rational make(wide num, wide den) {
    if (den == 0) throw StructuralError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits(num) || !fits(den)) throw OverflowError("rational overflow beyond 64-bit numerator/denominator");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError("", "not an exact rational: '" + std::string(whole) + "'");
    return v;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw StructuralError("rational with zero denominator");
    if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
        throw OverflowError("rational overflow beyond 64-bit numerator/denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t a = num < 0 ? -num : num, b = den;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    num_ = num;
    den_ = den;
}

std::uint64_t Rational::magnitude() const noexcept {
    std::uint64_t n = num_ < 0 ? static_cast<std::uint64_t>(-num_) : static_cast<std::uint64_t>(num_);
    return n > static_cast<std::uint64_t>(den_) ? n : static_cast<std::uint64_t>(den_);
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t r = 0;
        if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<std::int64_t>::min())
            return Rational(r);
        throw OverflowError("rational overflow beyond 64-bit numerator/denominator");
    }
    if (a.den_ == b.den_) return make(static_cast<wide>(a.num_) + b.num_, a.den_);
    return make(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                static_cast<wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw StructuralError("division by zero");
    return make(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    wide l = static_cast<wide>(a.num_) * b.den_;
    wide r = static_cast<wide>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den <= 0) throw ParseError("", "rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(num, den);
}

Cost::Cost(const Rational& v) : value_(v) {
    if (v.is_negative()) throw StructuralError("negative cost " + v.to_string());
}

const Rational& Cost::value() const {
    if (infinite_) throw StructuralError("value() of infinite cost");
    return value_;
}

Cost operator+(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return Cost::infinity();
    Cost c;
    c.value_ = a.value_ + b.value_;
    return c;
}

bool operator==(const Cost& a, const Cost& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
}

std::string Cost::to_string() const { return infinite_ ? "inf" : value_.to_string(); }

Cost Cost::parse(std::string_view text) {
    if (text == "inf") return infinity();
    Rational r = Rational::parse(text);
    if (r.is_negative()) throw ParseError("", "costs must be non-negative: '" + std::string(text) + "'");
    return Cost(r);
}

} // namespace vcsp
