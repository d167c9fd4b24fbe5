#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "rnskit/errors.hpp"

namespace rnskit {

/// Exact arbitrary-precision integer. Public library values are always
/// non-negative; signed intermediates are confined to operation internals.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Reduce v into the canonical representative in [0, m). Works for
/// negative v; m must be positive.
inline BigInt canonical_mod(const BigInt& v, const BigInt& m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return r;
}

struct ExtGcdResult {
    BigInt g; ///< gcd(a, b)
    BigInt u; ///< Bezout coefficient of a
    BigInt v; ///< Bezout coefficient of b, a*u + b*v = g
};

/// Extended Euclidean algorithm on non-negative inputs.
inline ExtGcdResult ext_gcd(const BigInt& a, const BigInt& b) {
    if (a < 0 || b < 0)
        throw PreconditionError("ext_gcd requires non-negative inputs");
    if (a == 0 && b == 0)
        throw DegenerateInputError("ext_gcd(0, 0) is undefined");
    BigInt r0 = a, r1 = b;
    BigInt u0 = 1, u1 = 0;
    BigInt v0 = 0, v1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        u0 -= q * u1; std::swap(u0, u1);
        v0 -= q * v1; std::swap(v0, v1);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

inline BigInt gcd_of(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Multiplicative inverse of a modulo m, canonical in [0, m). Requires
/// m >= 2 and gcd(a, m) = 1; the moduli need not be prime.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 2)
        throw PreconditionError("mod_inverse requires modulus >= 2, got " + to_string(m));
    const BigInt red = canonical_mod(a, m);
    ExtGcdResult e = ext_gcd(red, m);
    if (e.g != 1)
        throw NotInvertibleError(to_string(a) + " is not invertible modulo " + to_string(m) +
                                 " (gcd " + to_string(e.g) + ")");
    return canonical_mod(e.u, m);
}

/// Evaluates both sides of the inverse-splitting identity
///
///   a*|1/(ac)|_b  ==  | |1/c|_{ab} - b*|1/(bc)|_a |_{ab}
///
/// for pairwise-coprime a, b >= 2 and c >= 1, and reports whether they
/// agree modulo ab. The identity is a theorem, so a false return means
/// an arithmetic bug, not a property of the inputs.
inline bool check_inverse_identity(const BigInt& a, const BigInt& b, const BigInt& c) {
    if (a < 2 || b < 2 || c < 1)
        throw PreconditionError("check_inverse_identity requires a, b >= 2 and c >= 1");
    const auto coprime = [](const BigInt& x, const BigInt& y) { return gcd_of(x, y) == 1; };
    if (!coprime(a, b) || !coprime(a, c) || !coprime(b, c))
        throw PreconditionError("check_inverse_identity requires pairwise-coprime inputs: gcd of (" +
                                to_string(a) + ", " + to_string(b) + ", " + to_string(c) +
                                ") is not 1 for some pair");
    const BigInt ab = a * b;
    const BigInt lhs = a * mod_inverse(a * c, b);
    const BigInt rhs = canonical_mod(mod_inverse(c, ab) - b * mod_inverse(b * c, a), ab);
    return canonical_mod(lhs, ab) == rhs;
}

} // namespace rnskit
