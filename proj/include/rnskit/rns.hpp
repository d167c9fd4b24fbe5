#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "rnskit/numtheory.hpp"

namespace rnskit {

class ModuliSet;
struct ConverterConstants;
using ModuliSetPtr = std::shared_ptr<const ModuliSet>;

/// Conversion constants derived from a moduli set. Computed once per set
/// on first use and cached immutably; see constants.hpp.
const ConverterConstants& precompute_constants(const ModuliSetPtr& set);

/// An ordered list of pairwise-coprime moduli P_1..P_n together with the
/// dynamic range M = P_1*...*P_n and derived constants. Order is
/// significant (mixed-radix weights depend on it) and preserved as given.
/// Immutable after construction; share via ModuliSetPtr.
class ModuliSet {
public:
    /// Validates and builds. Prefer build_moduli_set, which wraps the
    /// result in a shared_ptr.
    explicit ModuliSet(std::vector<BigInt> moduli) : moduli_(std::move(moduli)) {
        if (moduli_.empty())
            throw DegenerateInputError("moduli list must not be empty");
        for (const BigInt& p : moduli_) {
            if (p < 2)
                throw InvalidModulusError("modulus " + to_string(p) + " is invalid; every modulus must be >= 2");
        }
        const std::size_t n = moduli_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                BigInt g = gcd_of(moduli_[i], moduli_[j]);
                if (g != 1)
                    throw NotCoprimeError("moduli " + to_string(moduli_[i]) + " and " +
                                          to_string(moduli_[j]) + " share factor " + to_string(g));
            }
        }
        partial_products_.reserve(n);
        BigInt prod = 1;
        for (const BigInt& p : moduli_) {
            prod *= p;
            partial_products_.push_back(prod);
        }
        dynamic_range_ = prod;
        // |1/P_i|_{P_j} for i < j, used by mixed-radix digit extraction.
        base_inverses_.assign(n * n, BigInt(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                base_inverses_[i * n + j] = mod_inverse(moduli_[i], moduli_[j]);
    }

    ModuliSet(const ModuliSet&) = delete;
    ModuliSet& operator=(const ModuliSet&) = delete;

    std::size_t size() const { return moduli_.size(); }
    const std::vector<BigInt>& moduli() const { return moduli_; }
    const BigInt& modulus(std::size_t i) const { return moduli_[i]; }
    /// M = product of all moduli.
    const BigInt& dynamic_range() const { return dynamic_range_; }
    /// partial_products()[i] = P_1 * ... * P_{i+1}; last entry equals M.
    const std::vector<BigInt>& partial_products() const { return partial_products_; }
    /// |1/P_i|_{P_j}, defined for i < j (0-based).
    const BigInt& base_inverse(std::size_t i, std::size_t j) const {
        return base_inverses_[i * moduli_.size() + j];
    }

private:
    friend const ConverterConstants& precompute_constants(const ModuliSetPtr& set);

    std::vector<BigInt> moduli_;
    BigInt dynamic_range_;
    std::vector<BigInt> partial_products_;
    std::vector<BigInt> base_inverses_;

    mutable std::once_flag constants_once_;
    mutable std::shared_ptr<const ConverterConstants> constants_;
};

inline ModuliSetPtr build_moduli_set(std::vector<BigInt> moduli) {
    return std::make_shared<const ModuliSet>(std::move(moduli));
}

/// True when a and b denote the same residue system: the identical set
/// object, or equal moduli lists.
inline bool same_set(const ModuliSetPtr& a, const ModuliSetPtr& b) {
    return a == b || (a && b && a->moduli() == b->moduli());
}

/// Residue vector (x_1..x_n) bound to a moduli set; 0 <= x_i < P_i.
struct RnsValue {
    ModuliSetPtr set;
    std::vector<BigInt> residues;

    friend bool operator==(const RnsValue& a, const RnsValue& b) {
        return same_set(a.set, b.set) && a.residues == b.residues;
    }
};

/// Wraps externally supplied residues after range-checking them.
inline RnsValue make_rns_value(ModuliSetPtr set, std::vector<BigInt> residues) {
    if (residues.size() != set->size())
        throw OutOfRangeError("expected " + std::to_string(set->size()) + " residues, got " +
                              std::to_string(residues.size()));
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (residues[i] < 0 || residues[i] >= set->modulus(i))
            throw OutOfRangeError("residue " + to_string(residues[i]) + " out of range for modulus " +
                                  to_string(set->modulus(i)));
    }
    return RnsValue{std::move(set), std::move(residues)};
}

/// Forward conversion: x_i = X mod P_i. Requires 0 <= X < M.
inline RnsValue to_rns(const BigInt& value, ModuliSetPtr set) {
    if (value < 0 || value >= set->dynamic_range())
        throw OutOfRangeError("value " + to_string(value) + " outside [0, " +
                              to_string(set->dynamic_range()) + ")");
    std::vector<BigInt> residues;
    residues.reserve(set->size());
    for (const BigInt& p : set->moduli())
        residues.push_back(value % p);
    return RnsValue{std::move(set), std::move(residues)};
}

enum class RnsOp { Add, Sub, Mul };

/// Residue-wise arithmetic: result_i = (x_i <op> y_i) mod P_i, performed
/// independently per channel. Subtraction wraps to the canonical
/// non-negative representative.
inline RnsValue rns_combine(const RnsValue& a, const RnsValue& b, RnsOp op) {
    if (!same_set(a.set, b.set))
        throw SetMismatchError("rns_combine operands are bound to different moduli sets");
    const ModuliSet& set = *a.set;
    std::vector<BigInt> out;
    out.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        const BigInt& p = set.modulus(i);
        switch (op) {
            case RnsOp::Add: out.push_back(canonical_mod(a.residues[i] + b.residues[i], p)); break;
            case RnsOp::Sub: out.push_back(canonical_mod(a.residues[i] - b.residues[i], p)); break;
            case RnsOp::Mul: out.push_back(canonical_mod(a.residues[i] * b.residues[i], p)); break;
        }
    }
    return RnsValue{a.set, std::move(out)};
}

} // namespace rnskit
