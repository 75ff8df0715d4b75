#pragma once

// Explicit bijection between B_X (all streams except the trailing-1 duplicates)
// and B (all streams), by a Hilbert-hotel shift along a fixed countable T:
//
//   T   = { t_k }  trailing-0 forms of the dyadic points d_k
//   B_S = { s_k }  trailing-1 forms of the same points
//
//   forward:  t_{2k} -> s_k,  t_{2k+1} -> t_k,  identity on B_X \ T
//   inverse:  s_k -> t_{2k},  t_k -> t_{2k+1},  identity elsewhere
//
// Indices are 0-based; d_k follows enumerate_duals order.

#include <optional>

#include "continuum/binary_streams.hpp"
#include "continuum/dyadic.hpp"
#include "continuum/errors.hpp"

namespace continuum {

/// Which countable subset of B_X plays T. Only one choice exists today.
struct MapConfig {
    enum class TChoice { TrailingZeroDyadics };
    TChoice t_choice = TChoice::TrailingZeroDyadics;
    unsigned index_base = 0;
};

namespace detail {

inline Bits numerator_bits(const Dyadic& d) {
    Bits bits(d.exponent());
    for (unsigned i = 0; i < d.exponent(); ++i)
        bits[d.exponent() - 1 - i] = boost::multiprecision::bit_test(d.numerator(), i);
    return bits;
}

// Dyadic point with the given canonical preamble and constant tail, if any.
inline std::optional<Integer> dyadic_index(const BinaryStream& canonical, bool tail) {
    if (canonical.period().size() != 1 || canonical.period()[0] != tail || canonical.preamble().empty())
        return std::nullopt;
    Bits digits = canonical.preamble();
    if (tail) digits.back() = true; // s-form w0(1) denotes the same point as w1(0)
    return index_of(Dyadic(to_integer(digits), static_cast<unsigned>(digits.size())));
}

} // namespace detail

/// t_k: the trailing-0 representation of d_k. Always InBX and canonical.
inline BinaryStream t_enumerate(const Integer& k) {
    return BinaryStream(detail::numerator_bits(dyadic_at(k)), Bits{false});
}

/// s_k: the trailing-1 representation of d_k. Always InBS and canonical.
inline BinaryStream s_enumerate(const Integer& k) {
    Bits preamble = detail::numerator_bits(dyadic_at(k));
    preamble.back() = false;
    return BinaryStream(std::move(preamble), Bits{true});
}

/// k with canonicalize(e) == t_k, if e is in T.
inline std::optional<Integer> t_index(const BinaryStream& e) {
    return detail::dyadic_index(canonicalize(e), false);
}

/// k with canonicalize(e) == s_k, if e is in B_S.
inline std::optional<Integer> s_index(const BinaryStream& e) {
    return detail::dyadic_index(canonicalize(e), true);
}

/// B_X -> B. Throws DomainViolation on a B_S stream. Output is canonical.
inline BinaryStream forward(const BinaryStream& e) {
    BinaryStream c = canonicalize(e);
    if (classify_stream(c) == StreamClass::InBS)
        throw DomainViolation(format_stream(e) + " lies in B_S, outside the domain of the forward map");
    if (auto k = t_index(c)) {
        if ((*k & 1) == 0) return s_enumerate(*k >> 1);
        return t_enumerate(*k >> 1);
    }
    return c;
}

/// B -> B_X, the inverse of forward. Total; output is canonical and never InBS.
inline BinaryStream inverse(const BinaryStream& e) {
    BinaryStream c = canonicalize(e);
    if (auto k = s_index(c)) return t_enumerate(2 * *k);
    if (auto k = t_index(c)) return t_enumerate(2 * *k + 1);
    return c;
}

} // namespace continuum
