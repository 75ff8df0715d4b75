#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "continuum/errors.hpp"

namespace continuum {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(Integer numerator) : num_(std::move(numerator)) {} // NOLINT: implicit from integers
    Rational(long long numerator) : num_(numerator) {}            // NOLINT
    Rational(Integer numerator, Integer denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool in_unit_interval() const { return num_ >= 0 && num_ <= den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Integer lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_ = 0;
    Integer den_ = 1;
};

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    std::string out = q.numerator().str();
    if (q.denominator() != 1) out += "/" + q.denominator().str();
    return out;
}

namespace detail {

inline std::size_t parse_digits(std::string_view text, std::size_t pos, Integer& out) {
    const std::size_t start = pos;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        out = out * 10 + (text[pos] - '0');
        ++pos;
    }
    if (pos == start) throw ParseError("expected a digit", pos);
    return pos;
}

} // namespace detail

/// Parses "p/q" or "p" with an optional leading '-'. No whitespace.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    Integer num, den = 1;
    pos = detail::parse_digits(text, pos, num);
    if (pos < text.size() && text[pos] == '/') {
        const std::size_t den_pos = pos + 1;
        pos = detail::parse_digits(text, den_pos, den);
        if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    if (pos != text.size()) throw ParseError("unexpected character", pos);
    return Rational(negative ? Integer(-num) : num, den);
}

/// A dual-representation point (2nu+1) / 2^mu strictly inside (0, 1).
class Dyadic {
public:
    /// Throws std::invalid_argument unless `numerator` is odd and below 2^exponent.
    Dyadic(Integer numerator, unsigned exponent) : num_(std::move(numerator)), mu_(exponent) {
        if (mu_ == 0 || num_ < 1 || (num_ & 1) == 0 || num_ >= (Integer(1) << mu_))
            throw std::invalid_argument("not a dyadic point of (0,1): " + num_.str() + "/2^" +
                                        std::to_string(mu_));
    }

    const Integer& numerator() const noexcept { return num_; }
    unsigned exponent() const noexcept { return mu_; }
    /// nu in numerator = 2nu + 1.
    Integer nu() const { return num_ >> 1; }
    Rational value() const { return Rational(num_, Integer(1) << mu_); }

    friend bool operator==(const Dyadic&, const Dyadic&) = default;

private:
    Integer num_;
    unsigned mu_;
};

/// Position of `d` in the enumeration ordered by exponent, then numerator
/// (0-based): 2^(mu-1) - 1 + (numerator - 1) / 2.
inline Integer index_of(const Dyadic& d) {
    return (Integer(1) << (d.exponent() - 1)) - 1 + d.nu();
}

/// Inverse of index_of.
inline Dyadic dyadic_at(const Integer& index) {
    if (index < 0) throw std::invalid_argument("negative dyadic index");
    const Integer shifted = index + 1;
    const unsigned mu = static_cast<unsigned>(boost::multiprecision::msb(shifted)) + 1;
    const Integer offset = index - ((Integer(1) << (mu - 1)) - 1);
    return Dyadic(2 * offset + 1, mu);
}

/// The first `count` dyadic points: 1/2, 1/4, 3/4, 1/8, 3/8, ...
inline std::vector<Dyadic> enumerate_duals(std::uint64_t count) {
    std::vector<Dyadic> out;
    out.reserve(static_cast<std::size_t>(count));
    for (unsigned mu = 1; out.size() < count; ++mu) {
        const Integer limit = Integer(1) << mu;
        for (Integer num = 1; num < limit && out.size() < count; num += 2) out.emplace_back(num, mu);
    }
    return out;
}

struct DualDyadic {
    Dyadic point;
    friend bool operator==(const DualDyadic&, const DualDyadic&) = default;
};
struct Endpoint {
    int value; ///< 0 or 1
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};
struct OtherRational {
    friend bool operator==(const OtherRational&, const OtherRational&) = default;
};

using PointClass = std::variant<DualDyadic, Endpoint, OtherRational>;

inline void require_unit_interval(const Rational& q) {
    if (!q.in_unit_interval()) throw OutOfRange(to_string(q) + " is outside [0,1]");
}

inline bool is_power_of_two(const Integer& n) { return n > 0 && (n & (n - 1)) == 0; }

/// Throws OutOfRange if q is outside [0, 1].
inline PointClass classify(const Rational& q) {
    require_unit_interval(q);
    if (q.numerator() == 0) return Endpoint{0};
    if (q.numerator() == q.denominator()) return Endpoint{1};
    if (is_power_of_two(q.denominator())) {
        const auto mu = static_cast<unsigned>(boost::multiprecision::msb(q.denominator()));
        return DualDyadic{Dyadic(q.numerator(), mu)};
    }
    return OtherRational{};
}

inline std::string to_string(const PointClass& c) {
    struct {
        std::string operator()(const DualDyadic& d) const {
            return "DualDyadic(nu=" + d.point.nu().str() + ", mu=" + std::to_string(d.point.exponent()) + ")";
        }
        std::string operator()(const Endpoint& e) const { return "Endpoint(" + std::to_string(e.value) + ")"; }
        std::string operator()(const OtherRational&) const { return "OtherRational"; }
    } visitor;
    return std::visit(visitor, c);
}

} // namespace continuum
