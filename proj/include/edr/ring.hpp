#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic over the supported elementary divisor ring backends.
 *
 * Four backends share one element interface:
 *   - Integers            (arbitrary precision)
 *   - Residue(N)          (Z/N, N >= 2, canonical representatives in [0, N))
 *   - PolyOverPrimeField  (F_p[x], coefficients in [0, p), trimmed)
 *   - Product             (a flat, finite product of the above)
 *
 * Every element is stored in canonical form, so payload equality is ring
 * equality. All operations are pure; values are immutable after construction
 * and safe to share across threads.
 */

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace edr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Two operands belong to different rings.
struct OwnerMismatch : Error {
    using Error::Error;
};
/// Operation outside its domain (non-unit inverse, non-exact division, ...).
struct DomainError : Error {
    using Error::Error;
};
/// An exhaustive computation would exceed the configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

enum class RingKind { Integers, Residue, PolyOverPrimeField, Product };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Element {
public:
    using Poly = std::vector<mpz_class>;  // ascending degree, no zero leading coeff
    using Tuple = std::vector<Element>;   // one entry per product factor
    using Payload = std::variant<mpz_class, Poly, Tuple>;

    const RingPtr& owner() const { return owner_; }
    const Payload& payload() const { return payload_; }

    const mpz_class& as_integer() const { return std::get<mpz_class>(payload_); }
    const Poly& as_poly() const { return std::get<Poly>(payload_); }
    const Tuple& as_tuple() const { return std::get<Tuple>(payload_); }

    bool is_zero() const;
    bool is_one() const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Human-readable form ("-3", "2+x^2", "(1, 4)").
    std::string str() const;

private:
    friend class Ring;
    Element(RingPtr owner, Payload payload)
        : owner_(std::move(owner)), payload_(std::move(payload)) {}

    RingPtr owner_;
    Payload payload_;
};

class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr integers();
    static RingPtr residue(const mpz_class& modulus);             // modulus >= 2
    static RingPtr poly_over_prime_field(const mpz_class& p);     // p prime
    static RingPtr product(std::vector<RingPtr> factors);         // flat, nonempty

    RingKind kind() const { return kind_; }
    bool is_product() const { return kind_ == RingKind::Product; }
    const mpz_class& residue_modulus() const;
    const mpz_class& coefficient_prime() const;
    const std::vector<RingPtr>& factors() const;

    bool is_finite() const;
    mpz_class cardinality() const;  // throws DomainError on infinite rings

    bool same_as(const Ring& other) const;
    std::string describe() const;

    Element zero() const;
    Element one() const;
    /// Canonical image of an integer (identity on Z, reduction elsewhere).
    Element from_integer(const mpz_class& n) const;
    Element from_integer(long n) const { return from_integer(mpz_class(n)); }
    /// PolyOverPrimeField only; coefficients ascending by degree.
    Element from_coefficients(std::vector<mpz_class> coeffs) const;
    /// Product only; one element per factor.
    Element from_components(std::vector<Element> components) const;
    /// Canonicalize a raw payload into an element of this ring.
    Element make(Element::Payload payload) const;

private:
    Ring() = default;
    RingKind kind_ = RingKind::Integers;
    mpz_class modulus_;                // Residue
    mpz_class prime_;                  // PolyOverPrimeField
    std::vector<RingPtr> factors_;     // Product
};

void require_same_owner(const Element& a, const Element& b);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator-(const Element& a);

struct BezoutTriple {
    Element g, u, v;  // u*a + v*b = g, g the canonical associate generator of (a, b)
};

/// Extended gcd on a non-Product backend. Products must be split first.
BezoutTriple gcd_bezout(const Element& a, const Element& b);

bool is_unit(const Element& a);
Element invert_unit(const Element& a);

/// Ring-level divisibility: a | b.
bool divides(const Element& a, const Element& b);
/// Exact quotient a / b with b | a; in rings with zero divisors the smallest
/// canonical solution is returned, so the result is deterministic.
Element exact_div(const Element& a, const Element& b);

std::vector<Element> split_components(const Element& a);
Element join_components(const RingPtr& product_ring, std::vector<Element> parts);

/// All elements of a finite ring, in a fixed enumeration order.
std::vector<Element> all_elements(const RingPtr& ring);
/// The unit group, enumerable on every backend (Z -> {1, -1}, F_p[x] -> F_p^*).
std::vector<Element> unit_group(const RingPtr& ring);

/// Canonical associate: nonnegative on Z, canonical divisor of N on Residue,
/// monic (or zero) on PolyOverPrimeField, componentwise on products.
Element canonical_associate(const Element& a);

struct AssociateDecomposition {
    Element associate;  // canonical_associate(a)
    Element unit;       // a = unit * associate
};
AssociateDecomposition associate_decompose(const Element& a);

/// Canonical representative of a modulo the principal ideal (g).
Element mod_ideal(const Element& a, const Element& g);
/// Inverse of a in R/(g); g = 0 falls back to invert_unit.
Element invert_mod(const Element& a, const Element& g);
bool is_unit_mod(const Element& a, const Element& g);
/// Canonical representatives of R/(g); requires the quotient to be finite.
std::vector<Element> residue_elements(const RingPtr& ring, const Element& g);
/// Units of R/(g) as canonical representatives; finite on every backend.
std::vector<Element> units_mod(const RingPtr& ring, const Element& g);

/// Euclidean division on canonical representatives (non-Product, b != 0):
/// a = q*b + r with rep_size(r) < rep_size(b).
struct DivMod {
    Element q, r;
};
DivMod divmod(const Element& a, const Element& b);

/// Pivot size key: |a| on Z, representative on Residue, degree+1 on polys.
/// Zero maps to 0. Used for deterministic smallest-pivot selection.
mpz_class rep_size(const Element& a);

/// Representative-level divisibility (the relation the Smith reduction
/// enforces on its diagonal; implies ring divisibility).
bool rep_divides(const Element& a, const Element& b);

class PrincipalIdeal {
public:
    explicit PrincipalIdeal(const Element& gen);

    const Element& generator() const { return gen_; }
    const RingPtr& owner() const { return gen_.owner(); }
    bool is_zero() const { return gen_.is_zero(); }
    bool is_unit_ideal() const { return gen_.is_one(); }
    bool contains(const Element& x) const { return divides(gen_, x); }

    bool operator==(const PrincipalIdeal& o) const;
    bool operator!=(const PrincipalIdeal& o) const { return !(*this == o); }

    friend PrincipalIdeal operator*(const PrincipalIdeal& a, const PrincipalIdeal& b);

    std::string str() const;

private:
    Element gen_;  // canonical associate form
};

}  // namespace edr
