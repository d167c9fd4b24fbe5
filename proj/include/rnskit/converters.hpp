#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rnskit/constants.hpp"

namespace rnskit {

/// The seven residue-to-binary conversion paths.
enum class ConverterKind {
    CrtClassic,
    CrtSecondForm,
    Mrc,
    Huang,
    HkFirstForm,
    HkSecondForm,
    NewCrt1,
};

inline constexpr std::array<ConverterKind, 7> kAllConverterKinds = {
    ConverterKind::CrtClassic,   ConverterKind::CrtSecondForm, ConverterKind::Mrc,
    ConverterKind::Huang,        ConverterKind::HkFirstForm,   ConverterKind::HkSecondForm,
    ConverterKind::NewCrt1,
};

inline constexpr std::string_view converter_name(ConverterKind kind) {
    switch (kind) {
        case ConverterKind::CrtClassic:    return "crt-classic";
        case ConverterKind::CrtSecondForm: return "crt-second-form";
        case ConverterKind::Mrc:           return "mrc";
        case ConverterKind::Huang:         return "huang";
        case ConverterKind::HkFirstForm:   return "hk-first-form";
        case ConverterKind::HkSecondForm:  return "hk-second-form";
        case ConverterKind::NewCrt1:       return "new-crt1";
    }
    return "unknown";
}

inline std::optional<ConverterKind> parse_converter_name(std::string_view name) {
    for (ConverterKind kind : kAllConverterKinds)
        if (converter_name(kind) == name) return kind;
    return std::nullopt;
}

/// Classic reconstruction X = | sum_i s_i * |x_i / s_i|_{P_i} |_M, with
/// exact integer accumulation and a single final reduction.
inline BigInt crt_classic(const RnsValue& x) {
    const ConverterConstants& c = precompute_constants(x.set);
    BigInt acc = 0;
    for (std::size_t i = 0; i < x.residues.size(); ++i)
        acc += c.s[i] * canonical_mod(x.residues[i] * c.s_inv[i], x.set->modulus(i));
    return acc % x.set->dynamic_range();
}

/// Second-form reconstruction X = | sum_i s_i * |1/s_i|_{P_i} * x_i |_M.
inline BigInt crt_second_form(const RnsValue& x) {
    const ConverterConstants& c = precompute_constants(x.set);
    BigInt acc = 0;
    for (std::size_t i = 0; i < x.residues.size(); ++i)
        acc += c.s[i] * c.s_inv[i] * x.residues[i];
    return acc % x.set->dynamic_range();
}

/// Sequential conversion through the mixed-radix digits.
inline BigInt mrc_convert(const RnsValue& x) { return mrs_to_int(szabo_tanaka(x)); }

/// Lookup tables for the table-driven converter. One table per (row i,
/// digit position j) with i <= j, each mapping a residue value x in
/// [0, P_i) to MRS digit j of the integer whose residue vector is x at
/// position i and 0 elsewhere. The (1,1) pair is the identity and is not
/// stored, leaving n(n+1)/2 - 1 tables.
class HuangTables {
public:
    static constexpr std::uint64_t kDefaultEntryCap = std::uint64_t(1) << 20;

    using Key = std::pair<std::size_t, std::size_t>; // 0-based (row, digit)

    HuangTables(ModuliSetPtr set, std::map<Key, std::vector<BigInt>> tables)
        : set_(std::move(set)), tables_(std::move(tables)) {}

    const ModuliSetPtr& set() const { return set_; }
    std::size_t nontrivial_count() const { return tables_.size(); }

    /// MRS digit j of the decomposed row i evaluated at residue value x.
    /// Digits left of the row index are structurally zero; (0,0) passes
    /// the residue through.
    BigInt digit(std::size_t row, std::size_t pos, const BigInt& x) const {
        if (pos < row) return 0;
        if (row == 0 && pos == 0) return x;
        return tables_.at(Key{row, pos})[x.convert_to<std::size_t>()];
    }

private:
    ModuliSetPtr set_;
    std::map<Key, std::vector<BigInt>> tables_;
};

/// Materializes the digit tables, refusing when the total entry count
/// would exceed entry_cap. Table size grows with the moduli themselves,
/// which is the table method's documented weakness.
inline HuangTables build_huang_tables(const ModuliSetPtr& set,
                                      std::uint64_t entry_cap = HuangTables::kDefaultEntryCap) {
    const std::size_t n = set->size();
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i)
        total += BigInt(n - i) * set->modulus(i);
    total -= set->modulus(0); // (1,1) is the identity, never stored
    if (total > entry_cap)
        throw TableTooLargeError("huang tables need " + to_string(total) +
                                 " entries, cap is " + std::to_string(entry_cap));

    const ConverterConstants& c = precompute_constants(set);
    std::map<HuangTables::Key, std::vector<BigInt>> tables;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = set->modulus(i).convert_to<std::size_t>();
        std::vector<std::vector<BigInt>> columns(n - i);
        for (auto& col : columns) col.resize(p);
        for (std::size_t x = 0; x < p; ++x) {
            // Row value s_i * |x / s_i|_{P_i}: residue x at position i, 0 elsewhere.
            BigInt row_value = c.s[i] * canonical_mod(BigInt(x) * c.s_inv[i], set->modulus(i));
            MrsValue digits = int_to_mrs(row_value, set);
            for (std::size_t j = i; j < n; ++j)
                columns[j - i][x] = std::move(digits.digits[j]);
        }
        for (std::size_t j = i; j < n; ++j) {
            if (i == 0 && j == 0) continue;
            tables.emplace(HuangTables::Key{i, j}, std::move(columns[j - i]));
        }
    }
    return HuangTables(set, std::move(tables));
}

/// Table-driven conversion: look up the n decomposed rows, add them
/// digit-wise and propagate carries once; the overflow of weight M
/// vanishes modulo M.
inline BigInt huang_convert(const RnsValue& x, const HuangTables& t) {
    if (!same_set(x.set, t.set()))
        throw SetMismatchError("huang tables were built for a different moduli set");
    const std::size_t n = x.set->size();
    std::vector<BigInt> acc(n, BigInt(0));
    LooseMrsValue sum{x.set, std::move(acc)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigInt> row(n, BigInt(0));
        for (std::size_t j = i; j < n; ++j)
            row[j] = t.digit(i, j, x.residues[i]);
        sum = mrs_add_mod(sum, LooseMrsValue{x.set, std::move(row)});
    }
    return mrs_to_int(normalize(sum));
}

namespace detail {

inline void require_constants_match(const RnsValue& x, const ConverterConstants& c) {
    if (c.mrs_of_s.empty() || !same_set(x.set, c.mrs_of_s[0].set))
        throw SetMismatchError("constants were precomputed for a different moduli set");
}

} // namespace detail

/// Computes t_i = |x_i * |1/s_i|_{P_i}|_{P_i} with n modular
/// multiplications, then accumulates t_i times the MRS digits of s_i.
inline BigInt hk_convert_first_form(const RnsValue& x, const ConverterConstants& c) {
    detail::require_constants_match(x, c);
    const std::size_t n = x.set->size();
    LooseMrsValue sum{x.set, std::vector<BigInt>(n, BigInt(0))};
    for (std::size_t i = 0; i < n; ++i) {
        BigInt ti = canonical_mod(x.residues[i] * c.s_inv[i], x.set->modulus(i));
        sum = mrs_add_mod(sum, mrs_scale(ti, c.mrs_of_s[i]));
    }
    return mrs_to_int(normalize(sum));
}

/// Accumulates x_i times the MRS digits of s_i*|1/s_i|_{P_i} directly,
/// saving the per-residue modular multiplication at the price of larger
/// carries.
inline BigInt hk_convert_second_form(const RnsValue& x, const ConverterConstants& c) {
    detail::require_constants_match(x, c);
    const std::size_t n = x.set->size();
    LooseMrsValue sum{x.set, std::vector<BigInt>(n, BigInt(0))};
    for (std::size_t i = 0; i < n; ++i)
        sum = mrs_add_mod(sum, mrs_scale(x.residues[i], c.mrs_of_s_sinv[i]));
    return mrs_to_int(normalize(sum));
}

/// Difference-based reconstruction
///   X = | x_1 + k_1(x_2-x_1)P_1 + ... + k_{n-1}(x_n-x_{n-1})P_1...P_{n-1} |_M
/// with signed intermediates and one final canonical reduction.
inline BigInt new_crt1_convert(const RnsValue& x, const ConverterConstants& c) {
    detail::require_constants_match(x, c);
    const std::size_t n = x.set->size();
    BigInt acc = x.residues[0];
    for (std::size_t i = 0; i + 1 < n; ++i)
        acc += c.k[i] * (x.residues[i + 1] - x.residues[i]) * x.set->partial_products()[i];
    return canonical_mod(acc, x.set->dynamic_range());
}

/// Equivalent evaluation through the a-constants:
///   X = | a_0 x_1 + sum_{i>=1} a_i x_{i+1} P_1...P_i |_M.
/// Agrees with new_crt1_convert because the a_i recombine into the
/// s_i*|1/s_i|_{P_i} constants.
inline BigInt new_crt1_convert_via_a(const RnsValue& x, const ConverterConstants& c) {
    detail::require_constants_match(x, c);
    const std::size_t n = x.set->size();
    BigInt acc = c.a[0] * x.residues[0];
    for (std::size_t i = 1; i < n; ++i)
        acc += c.a[i] * x.residues[i] * x.set->partial_products()[i - 1];
    return acc % x.set->dynamic_range();
}

/// Operation counts for one conversion plus the precomputed storage each
/// method carries, as closed forms in the moduli count n.
struct CostReport {
    ConverterKind method;
    std::uint64_t table_count = 0;           // materialized lookup tables
    std::uint64_t modular_mult_count = 0;    // multiplications reduced by a small modulus
    std::uint64_t digit_mult_count = 0;      // multiplications by stored digit/full-width constants
    std::uint64_t stored_constant_count = 0; // numbers (or digits) kept precomputed
};

inline CostReport cost_report(ConverterKind kind, std::uint64_t n) {
    if (n == 0)
        throw DegenerateInputError("cost_report requires n >= 1");
    const std::uint64_t tri = n * (n + 1) / 2;
    CostReport r;
    r.method = kind;
    switch (kind) {
        case ConverterKind::CrtClassic:
            r.modular_mult_count = n;       // |x_i / s_i|_{P_i}
            r.digit_mult_count = n;         // full-width products with the s_i
            r.stored_constant_count = 2 * n; // s_i and |1/s_i|_{P_i}
            break;
        case ConverterKind::CrtSecondForm:
            r.modular_mult_count = n;
            r.digit_mult_count = n;
            r.stored_constant_count = n;    // merged s_i*|1/s_i|_{P_i}
            break;
        case ConverterKind::Mrc:
            r.modular_mult_count = n * (n - 1) / 2;
            r.stored_constant_count = n * (n - 1) / 2; // pairwise |1/P_i|_{P_j}
            break;
        case ConverterKind::Huang:
            r.table_count = tri - 1;        // (1,1) is the identity
            break;
        case ConverterKind::HkFirstForm:
            r.modular_mult_count = n;
            r.digit_mult_count = tri - 1;   // s_n = (0,...,0,1) needs no product
            r.stored_constant_count = tri;
            break;
        case ConverterKind::HkSecondForm:
            r.digit_mult_count = tri;       // no structurally trivial digit remains
            r.stored_constant_count = tri;
            break;
        case ConverterKind::NewCrt1:
            r.modular_mult_count = n - 1;   // by the k_i
            r.digit_mult_count = n - 1;     // by the partial products
            r.stored_constant_count = 2 * (n - 1);
            break;
    }
    return r;
}

/// Dispatch by kind. Huang needs its tables; passing tables == nullptr
/// for that kind is a caller error.
inline BigInt run_converter(ConverterKind kind, const RnsValue& x, const ConverterConstants& c,
                            const HuangTables* tables = nullptr) {
    switch (kind) {
        case ConverterKind::CrtClassic:    return crt_classic(x);
        case ConverterKind::CrtSecondForm: return crt_second_form(x);
        case ConverterKind::Mrc:           return mrc_convert(x);
        case ConverterKind::Huang:
            if (!tables)
                throw PreconditionError("huang conversion requires prebuilt tables");
            return huang_convert(x, *tables);
        case ConverterKind::HkFirstForm:   return hk_convert_first_form(x, c);
        case ConverterKind::HkSecondForm:  return hk_convert_second_form(x, c);
        case ConverterKind::NewCrt1:       return new_crt1_convert(x, c);
    }
    throw PreconditionError("unknown converter kind");
}

} // namespace rnskit
