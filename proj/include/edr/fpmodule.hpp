#pragma once

/**
 * @file fpmodule.hpp
 * @brief Finitely presented modules with cached invariant-factor data.
 *
 * A module is a generator count k plus a k x c relation matrix (columns are
 * relations). The invariant chain, the change-of-coordinates witness and its
 * inverse are computed eagerly at construction, so every subsequent read is
 * pure and concurrency-safe. Elements are stored as coordinate lifts in R^k
 * and compared modulo the relation span through the Smith witness.
 */

#include <span>

#include "edr/smith.hpp"

namespace edr {

class FpModule;

class ModuleElement {
public:
    const std::vector<Element>& lift() const { return coords_; }
    const FpModule& module() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement scaled(const Element& r) const;

    bool operator==(const ModuleElement& o) const;  // modulo the relation span
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }
    bool is_zero_element() const;

    std::string str() const;

private:
    friend class FpModule;
    ModuleElement(std::shared_ptr<const FpModule> module, std::vector<Element> coords)
        : module_(std::move(module)), coords_(std::move(coords)) {}

    std::shared_ptr<const FpModule> module_;
    std::vector<Element> coords_;
};

struct TorsionRank {
    int value = 0;
    /// True when the owner has zero divisors outside product components and
    /// the count is read from the chain's nonzero-annihilator factors rather
    /// than from a genuine torsion submodule.
    bool chain_convention = false;
};

class FpModule : public std::enable_shared_from_this<FpModule> {
public:
    static std::shared_ptr<const FpModule> create(RingPtr ring, int generators, Matrix relations);

    const RingPtr& ring() const { return ring_; }
    int generators() const { return generators_; }
    const Matrix& relations() const { return relations_; }

    /// Invariant chain a_1 >= ... >= a_mu as ideals (generators ascend by
    /// divisibility, unit factors dropped, zero generators = free rank).
    const std::vector<PrincipalIdeal>& invariant_chain() const { return chain_; }
    int mu() const { return int(chain_.size()); }
    int free_rank() const;

    /// Change of coordinates P in GL_k carrying the relation span onto the
    /// diagonal diag(full factor list); P * relations * Q = diag with Q =
    /// relation_column_witness().
    const Matrix& coord_change() const { return to_dec_; }
    const Matrix& coord_change_inv() const { return from_dec_; }
    const Matrix& relation_column_witness() const { return col_witness_; }
    /// All k invariant factors in chain order, units included.
    const std::vector<Element>& full_factor_list() const { return factors_; }

    ModuleElement element(std::vector<Element> coords) const;
    ModuleElement element_from_integers(const std::vector<long>& coords) const;
    ModuleElement zero_element() const;
    /// Original presentation basis vector e_i (0-based).
    ModuleElement basis_element(int i) const;
    /// Decomposed basis element generating the i-th chain factor (0-based,
    /// i < mu).
    ModuleElement decomposed_basis(int i) const;

    /// Canonical coordinates in the decomposed presentation: entry i is the
    /// canonical residue modulo chain generator i. Length mu.
    std::vector<Element> decomposed_coords(const ModuleElement& e) const;
    ModuleElement from_decomposed(const std::vector<Element>& dec) const;

    bool elements_equal(const ModuleElement& a, const ModuleElement& b) const;

    std::string describe() const;

private:
    FpModule() = default;

    RingPtr ring_;
    int generators_ = 0;
    Matrix relations_{nullptr, 0, 0};
    std::vector<Element> factors_;  // length k, ascending, canonical
    int unit_count_ = 0;            // unit factors occupy the front
    std::vector<PrincipalIdeal> chain_;
    Matrix to_dec_{nullptr, 0, 0};       // B in chain order
    Matrix from_dec_{nullptr, 0, 0};     // its inverse
    Matrix col_witness_{nullptr, 0, 0};  // C in chain order
};

using FpModulePtr = std::shared_ptr<const FpModule>;

int mu(const FpModule& m);

/// Fitt_i(M): product of the first mu - i chain generators; unit ideal for
/// i >= mu. Cross-checked against the minor ideals of the raw presentation
/// whenever the minor enumeration is feasible.
PrincipalIdeal fitting_ideal(const FpModule& m, int i);

/// Same value computed only from the presentation minors (the oracle route).
PrincipalIdeal fitting_ideal_from_minors(const FpModule& m, int i);

/// True iff the listed elements generate M ([lifts | relations] has all
/// invariant factors units).
bool is_generating(const FpModule& m, std::span<const ModuleElement> elements);

/// mu' = mu(tau(M)); componentwise max over products, chain-annihilator
/// convention (flagged) over residue backends.
TorsionRank torsion_mu(const FpModule& m);

/// Presentation of M / a M (appends a * identity relation columns).
FpModulePtr quotient_by_ideal(const FpModule& m, const PrincipalIdeal& a);
/// Reinterpret an element of M in a quotient presentation of M.
ModuleElement push_forward(const FpModulePtr& quotient, const ModuleElement& e);

/// Component modules of a module over a product ring.
std::vector<FpModulePtr> split_module(const FpModule& m);

}  // namespace edr
