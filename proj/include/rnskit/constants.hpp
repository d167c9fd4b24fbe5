#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "rnskit/mrs.hpp"

namespace rnskit {

/// Every constant the converters read, derived from one moduli set:
///
///   s[i]     = M / P_{i+1}
///   s_inv[i] = |1/s[i]|_{P_{i+1}}
///   k[i]     = |1 / (P_1...P_{i+1})|_{P_{i+2}...P_n}   (n-1 entries)
///   a[0]     = |1 - k_1*P_1|_M,
///   a[i]     = |k_i - k_{i+1}*P_{i+1}|_{P_{i+1}...P_n} for 1 <= i <= n-2,
///   a[n-1]   = |k_{n-1}|_{P_n}
///
/// plus the mixed-radix digit tables of the s_i and s_i*|1/s_i|_{P_i}
/// constants. For n = 1 the k list is empty and a degenerates to (1),
/// reading the defining products as empty (= 1).
struct ConverterConstants {
    std::vector<BigInt> s;
    std::vector<BigInt> s_inv;
    std::vector<BigInt> k;
    std::vector<BigInt> a;
    std::vector<MrsValue> mrs_of_s;
    std::vector<MrsValue> mrs_of_s_sinv;
};

namespace detail {

inline ConverterConstants compute_constants(const ModuliSetPtr& set) {
    const std::size_t n = set->size();
    const BigInt& m = set->dynamic_range();
    ConverterConstants c;
    c.s.reserve(n);
    c.s_inv.reserve(n);
    c.mrs_of_s.reserve(n);
    c.mrs_of_s_sinv.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt si = m / set->modulus(i);
        BigInt si_inv = mod_inverse(si, set->modulus(i));
        c.mrs_of_s.push_back(int_to_mrs(si, set));
        c.mrs_of_s_sinv.push_back(int_to_mrs(si * si_inv, set));
        c.s.push_back(std::move(si));
        c.s_inv.push_back(std::move(si_inv));
    }
    // k[i] = |1 / pp_{i+1}|_{M / pp_{i+1}} with pp the partial products.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const BigInt& head = set->partial_products()[i];
        c.k.push_back(mod_inverse(head, m / head));
    }
    if (n == 1) {
        c.a.push_back(1);
    } else {
        c.a.reserve(n);
        c.a.push_back(canonical_mod(1 - c.k[0] * set->modulus(0), m));
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const BigInt tail = m / set->partial_products()[i]; // P_{i+2}...P_n in 1-based terms
            c.a.push_back(canonical_mod(c.k[i - 1] - c.k[i] * set->modulus(i), set->modulus(i) * tail));
        }
        c.a.push_back(canonical_mod(c.k[n - 2], set->modulus(n - 1)));
    }
    return c;
}

} // namespace detail

inline const ConverterConstants& precompute_constants(const ModuliSetPtr& set) {
    std::call_once(set->constants_once_, [&] {
        set->constants_ = std::make_shared<const ConverterConstants>(detail::compute_constants(set));
    });
    return *set->constants_;
}

} // namespace rnskit
