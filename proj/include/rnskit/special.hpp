#pragma once

#include <array>

#include "rnskit/converters.hpp"

namespace rnskit {

/// The three-moduli set P_1 = 2^n, P_2 = 2^n + 1, P_3 = 2^n - 1 with
/// dynamic range M = 2^n * (2^{2n} - 1). Pairwise coprime for every n;
/// n >= 2 keeps the closed-form constants non-degenerate.
struct SpecialTriple {
    unsigned n;
    ModuliSetPtr set;
};

inline SpecialTriple make_special_triple(unsigned n) {
    if (n < 2)
        throw UnsupportedParameterError("special triple requires n >= 2, got " + std::to_string(n));
    const BigInt pow_n = BigInt(1) << n;
    return SpecialTriple{n, build_moduli_set({pow_n, pow_n + 1, pow_n - 1})};
}

/// Closed-form MRS digit vectors of the three s_i*|1/s_i|_{P_i}
/// constants:
///   (1, 1, 2^n - 2), (0, 2^n, 2^{n-1} - 1), (0, 0, 2^{n-1}).
/// They equal the generic precomputation over {2^n, 2^n+1, 2^n-1}.
inline std::array<MrsValue, 3> special_constants(unsigned n) {
    SpecialTriple triple = make_special_triple(n);
    const BigInt pow_n = BigInt(1) << n;
    const BigInt pow_n1 = BigInt(1) << (n - 1);
    return {
        MrsValue{triple.set, {1, 1, pow_n - 2}},
        MrsValue{triple.set, {0, pow_n, pow_n1 - 1}},
        MrsValue{triple.set, {0, 0, pow_n1}},
    };
}

/// Closed-form converter for the special triple. Operand order follows
/// the source formula rather than the moduli order:
///   x1 = X mod (2^n - 1), x2 = X mod 2^n, x3 = X mod (2^n + 1),
///   X  = x2 + 2^n * |(x2 - x3) + (x1 - 2*x2 + x3) * 2^{n-1} * (2^n + 1)|_{2^{2n} - 1}.
/// The signed inner value is reduced to its canonical representative
/// before the final scaling.
inline BigInt special_convert(unsigned n, const BigInt& x1, const BigInt& x2, const BigInt& x3) {
    if (n < 2)
        throw UnsupportedParameterError("special converter requires n >= 2, got " + std::to_string(n));
    const BigInt pow_n = BigInt(1) << n;
    if (x1 < 0 || x1 >= pow_n - 1)
        throw OutOfRangeError("x1 = " + to_string(x1) + " outside [0, " + to_string(pow_n - 1) + ")");
    if (x2 < 0 || x2 >= pow_n)
        throw OutOfRangeError("x2 = " + to_string(x2) + " outside [0, " + to_string(pow_n) + ")");
    if (x3 < 0 || x3 >= pow_n + 1)
        throw OutOfRangeError("x3 = " + to_string(x3) + " outside [0, " + to_string(pow_n + 1) + ")");
    const BigInt inner = (x2 - x3) + (x1 - 2 * x2 + x3) * (BigInt(1) << (n - 1)) * (pow_n + 1);
    const BigInt reduced = canonical_mod(inner, (BigInt(1) << (2 * n)) - 1);
    return x2 + pow_n * reduced;
}

} // namespace rnskit
