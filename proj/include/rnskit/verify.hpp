#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rnskit/special.hpp"

namespace rnskit {

/// Uniform draw from [0, bound) by masked rejection sampling. Depends
/// only on the mt19937_64 stream, so results are reproducible across
/// platforms for a fixed seed.
inline BigInt random_below(std::mt19937_64& rng, const BigInt& bound) {
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << top_bits) - 1);
    for (;;) {
        BigInt draw = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t limb = rng();
            if (w + 1 == words) limb &= top_mask;
            draw |= BigInt(limb) << (64 * w);
        }
        if (draw < bound) return draw;
    }
}

struct VerifyOptions {
    bool exhaustive = false;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    std::uint64_t huang_entry_cap = HuangTables::kDefaultEntryCap;
};

struct Mismatch {
    BigInt value; ///< the X whose round trip failed
    std::vector<std::pair<ConverterKind, BigInt>> outputs;
};

struct VerifyReport {
    BigInt checked = 0;
    std::uint64_t mismatch_count = 0;
    std::vector<Mismatch> mismatches; ///< first few offenders, for reporting
    bool huang_skipped = false;       ///< tables exceeded the entry cap

    bool ok() const { return mismatch_count == 0; }
};

namespace detail {

inline constexpr std::size_t kMaxRecordedMismatches = 16;

inline void check_one(const BigInt& value, const ModuliSetPtr& set, const ConverterConstants& c,
                      const HuangTables* tables, VerifyReport& report) {
    const RnsValue x = to_rns(value, set);
    std::vector<std::pair<ConverterKind, BigInt>> outputs;
    bool bad = false;
    for (ConverterKind kind : kAllConverterKinds) {
        if (kind == ConverterKind::Huang && !tables) continue;
        BigInt out = run_converter(kind, x, c, tables);
        if (out != value) bad = true;
        outputs.emplace_back(kind, std::move(out));
    }
    report.checked += 1;
    if (bad) {
        report.mismatch_count += 1;
        if (report.mismatches.size() < kMaxRecordedMismatches)
            report.mismatches.push_back(Mismatch{value, std::move(outputs)});
    }
}

} // namespace detail

/// Runs every converter over the requested range of X and reports any
/// value whose round trip through any path differs from X. When the
/// lookup tables exceed the entry cap the table path is skipped and the
/// skip recorded.
inline VerifyReport verify_converters(const ModuliSetPtr& set, const VerifyOptions& opt = {}) {
    const ConverterConstants& c = precompute_constants(set);
    VerifyReport report;
    std::optional<HuangTables> tables;
    try {
        tables.emplace(build_huang_tables(set, opt.huang_entry_cap));
    } catch (const TableTooLargeError&) {
        report.huang_skipped = true;
    }
    const HuangTables* table_ptr = tables ? &*tables : nullptr;
    if (opt.exhaustive) {
        for (BigInt value = 0; value < set->dynamic_range(); ++value)
            detail::check_one(value, set, c, table_ptr, report);
    } else {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t i = 0; i < opt.samples; ++i)
            detail::check_one(random_below(rng, set->dynamic_range()), set, c, table_ptr, report);
    }
    return report;
}

/// Exhaustive sweep for the special triple: every generic path plus the
/// closed-form converter must reproduce each X in [0, 2^n*(2^{2n}-1)).
/// The closed-form operands are permuted per its contract: x1 is the
/// residue modulo 2^n - 1, x2 modulo 2^n, x3 modulo 2^n + 1.
inline VerifyReport verify_special(unsigned n) {
    const SpecialTriple triple = make_special_triple(n);
    const ConverterConstants& c = precompute_constants(triple.set);
    const HuangTables tables = build_huang_tables(triple.set);
    VerifyReport report;
    for (BigInt value = 0; value < triple.set->dynamic_range(); ++value) {
        detail::check_one(value, triple.set, c, &tables, report);
        const RnsValue x = to_rns(value, triple.set);
        BigInt out = special_convert(n, x.residues[2], x.residues[0], x.residues[1]);
        if (out != value) {
            report.mismatch_count += 1;
            if (report.mismatches.size() < detail::kMaxRecordedMismatches)
                report.mismatches.push_back(
                    Mismatch{value, {{ConverterKind::CrtClassic, std::move(out)}}});
        }
    }
    return report;
}

} // namespace rnskit
