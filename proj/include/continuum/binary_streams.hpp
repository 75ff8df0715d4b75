#pragma once

// Eventually-periodic binary streams: the finitely representable part of the
// set of all infinite 0/1 strings, which is exactly the set of binary
// expansions of rationals in [0, 1]. Text form is `preamble(period)`.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "continuum/dyadic.hpp"
#include "continuum/errors.hpp"

namespace continuum {

using Bits = std::vector<bool>;

/// preamble followed by period repeated forever. Bit 0 is the first digit after
/// the binary point, i.e. it carries weight 1/2.
class BinaryStream {
public:
    /// Throws std::invalid_argument on an empty period.
    BinaryStream(Bits preamble, Bits period) : preamble_(std::move(preamble)), period_(std::move(period)) {
        if (period_.empty()) throw std::invalid_argument("stream period must be nonempty");
    }

    const Bits& preamble() const noexcept { return preamble_; }
    const Bits& period() const noexcept { return period_; }
    /// Length of the finite description, |preamble| + |period|.
    std::size_t description_size() const noexcept { return preamble_.size() + period_.size(); }

    bool bit(std::uint64_t i) const {
        if (i < preamble_.size()) return preamble_[i];
        return period_[(i - preamble_.size()) % period_.size()];
    }

    friend bool operator==(const BinaryStream&, const BinaryStream&) = default;

private:
    Bits preamble_;
    Bits period_;
};

/// Parses `bits "(" bits ")"`, bits in {0,1}*, period nonempty, no whitespace.
inline BinaryStream parse_stream(std::string_view text) {
    Bits preamble, period;
    std::size_t pos = 0;
    for (; pos < text.size() && text[pos] != '('; ++pos) {
        if (text[pos] != '0' && text[pos] != '1') throw ParseError("expected '0', '1' or '('", pos);
        preamble.push_back(text[pos] == '1');
    }
    if (pos == text.size()) throw ParseError("missing '('", pos);
    for (++pos; pos < text.size() && text[pos] != ')'; ++pos) {
        if (text[pos] != '0' && text[pos] != '1') throw ParseError("expected '0', '1' or ')'", pos);
        period.push_back(text[pos] == '1');
    }
    if (pos == text.size()) throw ParseError("missing ')'", pos);
    if (period.empty()) throw ParseError("empty period", pos);
    if (pos + 1 != text.size()) throw ParseError("trailing characters after ')'", pos + 1);
    return BinaryStream(std::move(preamble), std::move(period));
}

inline std::string format_stream(const BinaryStream& e) {
    std::string out;
    out.reserve(e.description_size() + 2);
    for (bool b : e.preamble()) out += b ? '1' : '0';
    out += '(';
    for (bool b : e.period()) out += b ? '1' : '0';
    out += ')';
    return out;
}

namespace detail {

inline Bits primitive_root(const Bits& block) {
    const std::size_t n = block.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) repeats = block[i] == block[i - d];
        if (repeats) return Bits(block.begin(), block.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return block;
}

inline Integer to_integer(const Bits& bits) {
    Integer out = 0;
    for (bool b : bits) {
        out <<= 1;
        if (b) out |= 1;
    }
    return out;
}

} // namespace detail

/// Unique representative: primitive period, and a preamble that cannot be
/// shortened by rotating its last bit into the period.
inline BinaryStream canonicalize(const BinaryStream& e) {
    Bits period = detail::primitive_root(e.period());
    Bits preamble = e.preamble();
    while (!preamble.empty() && preamble.back() == period.back()) {
        preamble.pop_back();
        // rotate right by one
        bool last = period.back();
        period.pop_back();
        period.insert(period.begin(), last);
    }
    return BinaryStream(std::move(preamble), std::move(period));
}

/// Exact value sum_{i>=1} bit(i-1) / 2^i
///   = int(preamble) / 2^L + int(period) / (2^L (2^P - 1)).
inline Rational value(const BinaryStream& e) {
    const auto L = e.preamble().size();
    const auto P = e.period().size();
    const Integer scale = Integer(1) << L;
    const Integer cycle = (Integer(1) << P) - 1;
    return Rational(detail::to_integer(e.preamble()) * cycle + detail::to_integer(e.period()), scale * cycle);
}

enum class StreamClass { InBX, InBS };

inline std::string_view to_string(StreamClass c) { return c == StreamClass::InBX ? "InBX" : "InBS"; }

/// InBS exactly for the trailing-1 representation of a dyadic point below 1:
/// eventually all 1s with at least one 0. Everything else, "(1)" and "(0)"
/// included, is InBX.
inline StreamClass classify_stream(const BinaryStream& e) {
    const BinaryStream c = canonicalize(e);
    const bool all_ones_tail = c.period().size() == 1 && c.period()[0];
    return all_ones_tail && !c.preamble().empty() ? StreamClass::InBS : StreamClass::InBX;
}

/// The other representation of a dyadic point ("1(0)" <-> "0(1)"), or nothing
/// when value(e) has a single representation.
inline std::optional<BinaryStream> dual_of(const BinaryStream& e) {
    BinaryStream c = canonicalize(e);
    if (c.period().size() != 1 || c.preamble().empty()) return std::nullopt;
    // canonical preamble ends with the complement of the period bit
    const bool tail = c.period()[0];
    Bits preamble = c.preamble();
    preamble.back() = tail;
    return BinaryStream(std::move(preamble), Bits{!tail});
}

/// All binary expansions of q: one stream, or for dyadic points of (0, 1) the
/// trailing-0 form followed by the trailing-1 form. Throws OutOfRange outside [0, 1].
inline std::vector<BinaryStream> expansions_of(const Rational& q) {
    require_unit_interval(q);
    if (q.numerator() == q.denominator()) return {BinaryStream({}, {true})};

    // Long division in base 2, stopping when a remainder repeats.
    const Integer& den = q.denominator();
    Integer remainder = q.numerator();
    std::map<Integer, std::size_t> first_seen;
    Bits digits;
    while (true) {
        auto [it, fresh] = first_seen.emplace(remainder, digits.size());
        if (!fresh) {
            const auto start = static_cast<std::ptrdiff_t>(it->second);
            BinaryStream first(Bits(digits.begin(), digits.begin() + start),
                               Bits(digits.begin() + start, digits.end()));
            first = canonicalize(first);
            if (auto second = dual_of(first)) return {first, *second};
            return {first};
        }
        remainder <<= 1;
        const bool digit = remainder >= den;
        if (digit) remainder -= den;
        digits.push_back(digit);
    }
}

} // namespace continuum

template <>
struct std::hash<continuum::BinaryStream> {
    std::size_t operator()(const continuum::BinaryStream& e) const {
        return std::hash<std::string>{}(continuum::format_stream(e));
    }
};
