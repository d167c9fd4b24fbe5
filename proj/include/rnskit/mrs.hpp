#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rnskit/rns.hpp"

namespace rnskit {

/// Canonical mixed-radix value: X = d_1 + d_2*P_1 + d_3*P_1*P_2 + ...
/// with 0 <= d_i < P_i. Obtained only via int_to_mrs, szabo_tanaka or
/// normalize, which establish the digit bounds.
struct MrsValue {
    ModuliSetPtr set;
    std::vector<BigInt> digits;

    friend bool operator==(const MrsValue& a, const MrsValue& b) {
        return same_set(a.set, b.set) && a.digits == b.digits;
    }
};

/// Mixed-radix digit vector before carry propagation: digits share the
/// MRS weights but may exceed their radix bounds (e.g. 20 at weight
/// P_1*P_2). Distinct from MrsValue so the canonical invariant stays
/// meaningful in signatures.
struct LooseMrsValue {
    ModuliSetPtr set;
    std::vector<BigInt> digits;
};

inline LooseMrsValue as_loose(const MrsValue& v) { return LooseMrsValue{v.set, v.digits}; }

namespace detail {

inline BigInt positional_value(const ModuliSet& set, const std::vector<BigInt>& digits) {
    BigInt acc = digits[0];
    for (std::size_t i = 1; i < digits.size(); ++i)
        acc += digits[i] * set.partial_products()[i - 1];
    return acc;
}

} // namespace detail

/// Positional expansion of a canonical value; always < M.
inline BigInt mrs_to_int(const MrsValue& v) { return detail::positional_value(*v.set, v.digits); }

/// Positional expansion of a loose vector. The raw integer is returned
/// without reduction and may be >= M.
inline BigInt mrs_to_int(const LooseMrsValue& v) { return detail::positional_value(*v.set, v.digits); }

/// Canonical digits of X by successive division by P_1..P_{n-1}.
/// Requires 0 <= X < M.
inline MrsValue int_to_mrs(const BigInt& value, ModuliSetPtr set) {
    if (value < 0 || value >= set->dynamic_range())
        throw OutOfRangeError("value " + to_string(value) + " outside [0, " +
                              to_string(set->dynamic_range()) + ")");
    const std::size_t n = set->size();
    std::vector<BigInt> digits(n);
    BigInt rest = value;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        digits[i] = rest % set->modulus(i);
        rest = (rest - digits[i]) / set->modulus(i);
    }
    digits[n - 1] = std::move(rest);
    return MrsValue{std::move(set), std::move(digits)};
}

/// Sequential residue-to-mixed-radix digit extraction. The first digit is
/// x_1 unchanged; each later digit falls out after subtracting the digits
/// found so far and multiplying the remaining residues by |1/P_i|_{P_j}.
inline MrsValue szabo_tanaka(const RnsValue& x) {
    const ModuliSet& set = *x.set;
    const std::size_t n = set.size();
    std::vector<BigInt> work = x.residues;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            work[j] = canonical_mod((work[j] - work[i]) * set.base_inverse(i, j), set.modulus(j));
    }
    return MrsValue{x.set, std::move(work)};
}

namespace detail {

inline LooseMrsValue add_digitwise(const ModuliSetPtr& sa, const std::vector<BigInt>& a,
                                   const ModuliSetPtr& sb, const std::vector<BigInt>& b) {
    if (!same_set(sa, sb))
        throw SetMismatchError("mixed-radix operands are bound to different moduli sets");
    std::vector<BigInt> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return LooseMrsValue{sa, std::move(out)};
}

} // namespace detail

/// Digit-wise sum with no carrying; modulo-M semantics are realized later
/// by normalize, which drops the overflow of weight M.
inline LooseMrsValue mrs_add_mod(const LooseMrsValue& a, const LooseMrsValue& b) {
    return detail::add_digitwise(a.set, a.digits, b.set, b.digits);
}
inline LooseMrsValue mrs_add_mod(const LooseMrsValue& a, const MrsValue& b) {
    return detail::add_digitwise(a.set, a.digits, b.set, b.digits);
}
inline LooseMrsValue mrs_add_mod(const MrsValue& a, const LooseMrsValue& b) {
    return detail::add_digitwise(a.set, a.digits, b.set, b.digits);
}
inline LooseMrsValue mrs_add_mod(const MrsValue& a, const MrsValue& b) {
    return detail::add_digitwise(a.set, a.digits, b.set, b.digits);
}

/// Digit-wise product c * d_i with no carrying.
inline LooseMrsValue mrs_scale(const BigInt& c, const MrsValue& v) {
    if (c < 0)
        throw PreconditionError("mrs_scale requires a non-negative scalar");
    std::vector<BigInt> out(v.digits.size());
    for (std::size_t i = 0; i < v.digits.size(); ++i)
        out[i] = c * v.digits[i];
    return LooseMrsValue{v.set, std::move(out)};
}

/// Left-to-right carry propagation: the digit of weight P_1...P_i is
/// rewritten u + v*P_{i+1} with 0 <= u < P_{i+1}; u stays, v joins the
/// next digit. The final overflow q has weight M and is discarded, so
/// mrs_to_int(normalize(v)) = mrs_to_int(v) mod M. A single pass with
/// exact division handles carries of any magnitude.
inline MrsValue normalize(const LooseMrsValue& v) {
    const ModuliSet& set = *v.set;
    const std::size_t n = set.size();
    std::vector<BigInt> digits(n);
    BigInt carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt d = v.digits[i] + carry;
        if (d < 0)
            throw PreconditionError("normalize requires non-negative loose digits");
        carry = d / set.modulus(i);
        digits[i] = d - carry * set.modulus(i);
    }
    return MrsValue{v.set, std::move(digits)};
}

} // namespace rnskit
