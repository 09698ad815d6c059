#include "edr/ring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace edr {

namespace {

// ---- mpz helpers ----

mpz_class nonneg_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());  // result in [0, |m|)
    return r;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// g = u*a + v*b with g >= 0
void gcdext_z(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& u, mpz_class& v) {
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// ---- polynomial helpers over F_p (coeff vectors ascending, trimmed) ----

using Poly = Element::Poly;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_reduce(Poly f, const mpz_class& p) {
    for (auto& c : f) c = nonneg_mod(c, p);
    poly_trim(f);
    return f;
}

Poly poly_add(const Poly& a, const Poly& b, const mpz_class& p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_reduce(std::move(r), p);
}

Poly poly_neg(const Poly& a, const mpz_class& p) {
    Poly r = a;
    for (auto& c : r) c = nonneg_mod(-c, p);
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b, const mpz_class& p) {
    return poly_add(a, poly_neg(b, p), p);
}

Poly poly_mul(const Poly& a, const Poly& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_reduce(std::move(r), p);
}

mpz_class inv_mod_z(const mpz_class& a, const mpz_class& m) {
    mpz_class g, u, v;
    gcdext_z(a, m, g, u, v);
    if (g != 1) throw DomainError("element has no inverse modulo " + m.get_str());
    return nonneg_mod(u, m);
}

// classical long division; b != 0, coefficients form a field
void poly_divmod(const Poly& a, const Poly& b, const mpz_class& p, Poly& q, Poly& r) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const mpz_class lead_inv = inv_mod_z(b.back(), p);
    while (r.size() >= b.size()) {
        const size_t shift = r.size() - b.size();
        mpz_class c = nonneg_mod(r.back() * lead_inv, p);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = nonneg_mod(r[shift + i] - c * b[i], p);
        poly_trim(r);  // the top term always vanishes, so r shrinks every pass
    }
    poly_trim(q);
}

std::string poly_str(const Poly& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0)
            os << f[i].get_str();
        else {
            if (f[i] != 1) os << f[i].get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool payload_equal(const Element::Payload& a, const Element::Payload& b);

bool tuple_equal(const Element::Tuple& a, const Element::Tuple& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!payload_equal(a[i].payload(), b[i].payload())) return false;
    return true;
}

bool payload_equal(const Element::Payload& a, const Element::Payload& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<mpz_class>(a))
        return std::get<mpz_class>(a) == std::get<mpz_class>(b);
    if (std::holds_alternative<Poly>(a)) return std::get<Poly>(a) == std::get<Poly>(b);
    return tuple_equal(std::get<Element::Tuple>(a), std::get<Element::Tuple>(b));
}

}  // namespace

// ---- Element ----

bool Element::is_zero() const {
    switch (owner_->kind()) {
        case RingKind::Integers:
        case RingKind::Residue:
            return as_integer() == 0;
        case RingKind::PolyOverPrimeField:
            return as_poly().empty();
        case RingKind::Product:
            for (const auto& c : as_tuple())
                if (!c.is_zero()) return false;
            return true;
    }
    return false;
}

bool Element::is_one() const {
    switch (owner_->kind()) {
        case RingKind::Integers:
        case RingKind::Residue:
            return as_integer() == 1;
        case RingKind::PolyOverPrimeField:
            return as_poly().size() == 1 && as_poly()[0] == 1;
        case RingKind::Product:
            for (const auto& c : as_tuple())
                if (!c.is_one()) return false;
            return true;
    }
    return false;
}

bool Element::operator==(const Element& o) const {
    require_same_owner(*this, o);
    return payload_equal(payload_, o.payload_);
}

std::string Element::str() const {
    switch (owner_->kind()) {
        case RingKind::Integers:
        case RingKind::Residue:
            return as_integer().get_str();
        case RingKind::PolyOverPrimeField:
            return poly_str(as_poly());
        case RingKind::Product: {
            std::string s = "(";
            const auto& t = as_tuple();
            for (size_t i = 0; i < t.size(); ++i) {
                if (i) s += ", ";
                s += t[i].str();
            }
            return s + ")";
        }
    }
    return "?";
}

// ---- Ring construction ----

RingPtr Ring::integers() {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::Integers;
    return r;
}

RingPtr Ring::residue(const mpz_class& modulus) {
    if (modulus < 2) throw DomainError("residue modulus must be >= 2");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::Residue;
    r->modulus_ = modulus;
    return r;
}

RingPtr Ring::poly_over_prime_field(const mpz_class& p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw DomainError("coefficient modulus " + p.get_str() + " is not prime");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::PolyOverPrimeField;
    r->prime_ = p;
    return r;
}

RingPtr Ring::product(std::vector<RingPtr> factors) {
    if (factors.empty()) throw DomainError("product ring needs at least one factor");
    for (const auto& f : factors)
        if (f->is_product()) throw DomainError("product factors must not be nested products");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::Product;
    r->factors_ = std::move(factors);
    return r;
}

const mpz_class& Ring::residue_modulus() const {
    if (kind_ != RingKind::Residue) throw DomainError("not a residue ring");
    return modulus_;
}

const mpz_class& Ring::coefficient_prime() const {
    if (kind_ != RingKind::PolyOverPrimeField) throw DomainError("not a polynomial ring");
    return prime_;
}

const std::vector<RingPtr>& Ring::factors() const {
    if (kind_ != RingKind::Product) throw DomainError("not a product ring");
    return factors_;
}

bool Ring::is_finite() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::PolyOverPrimeField:
            return false;
        case RingKind::Residue:
            return true;
        case RingKind::Product:
            for (const auto& f : factors_)
                if (!f->is_finite()) return false;
            return true;
    }
    return false;
}

mpz_class Ring::cardinality() const {
    if (!is_finite()) throw DomainError("ring is infinite");
    if (kind_ == RingKind::Residue) return modulus_;
    mpz_class n = 1;
    for (const auto& f : factors_) n *= f->cardinality();
    return n;
}

bool Ring::same_as(const Ring& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case RingKind::Integers:
            return true;
        case RingKind::Residue:
            return modulus_ == other.modulus_;
        case RingKind::PolyOverPrimeField:
            return prime_ == other.prime_;
        case RingKind::Product: {
            if (factors_.size() != other.factors_.size()) return false;
            for (size_t i = 0; i < factors_.size(); ++i)
                if (!factors_[i]->same_as(*other.factors_[i])) return false;
            return true;
        }
    }
    return false;
}

std::string Ring::describe() const {
    switch (kind_) {
        case RingKind::Integers:
            return "Z";
        case RingKind::Residue:
            return "Z/" + modulus_.get_str();
        case RingKind::PolyOverPrimeField:
            return "F_" + prime_.get_str() + "[x]";
        case RingKind::Product: {
            std::string s;
            for (size_t i = 0; i < factors_.size(); ++i) {
                if (i) s += " x ";
                s += factors_[i]->describe();
            }
            return s;
        }
    }
    return "?";
}

Element Ring::make(Element::Payload payload) const {
    switch (kind_) {
        case RingKind::Integers:
            return Element(shared_from_this(), std::move(payload));
        case RingKind::Residue: {
            auto v = nonneg_mod(std::get<mpz_class>(payload), modulus_);
            return Element(shared_from_this(), std::move(v));
        }
        case RingKind::PolyOverPrimeField: {
            auto f = poly_reduce(std::get<Poly>(std::move(payload)), prime_);
            return Element(shared_from_this(), std::move(f));
        }
        case RingKind::Product: {
            auto t = std::get<Element::Tuple>(std::move(payload));
            if (t.size() != factors_.size())
                throw DomainError("component count does not match product arity");
            for (size_t i = 0; i < t.size(); ++i) {
                if (!t[i].owner()->same_as(*factors_[i]))
                    throw OwnerMismatch("component belongs to the wrong factor ring");
            }
            return Element(shared_from_this(), std::move(t));
        }
    }
    throw DomainError("unreachable");
}

Element Ring::zero() const { return from_integer(mpz_class(0)); }
Element Ring::one() const { return from_integer(mpz_class(1)); }

Element Ring::from_integer(const mpz_class& n) const {
    switch (kind_) {
        case RingKind::Integers:
            return Element(shared_from_this(), n);
        case RingKind::Residue:
            return Element(shared_from_this(), nonneg_mod(n, modulus_));
        case RingKind::PolyOverPrimeField: {
            Poly f{nonneg_mod(n, prime_)};
            poly_trim(f);
            return Element(shared_from_this(), std::move(f));
        }
        case RingKind::Product: {
            Element::Tuple t;
            t.reserve(factors_.size());
            for (const auto& f : factors_) t.push_back(f->from_integer(n));
            return Element(shared_from_this(), std::move(t));
        }
    }
    throw DomainError("unreachable");
}

Element Ring::from_coefficients(std::vector<mpz_class> coeffs) const {
    if (kind_ != RingKind::PolyOverPrimeField)
        throw DomainError("coefficient constructor requires a polynomial ring");
    return Element(shared_from_this(), poly_reduce(std::move(coeffs), prime_));
}

Element Ring::from_components(std::vector<Element> components) const {
    if (kind_ != RingKind::Product)
        throw DomainError("component constructor requires a product ring");
    return make(Element::Payload(std::move(components)));
}

// ---- arithmetic ----

void require_same_owner(const Element& a, const Element& b) {
    if (a.owner().get() == b.owner().get()) return;
    if (!a.owner() || !b.owner() || !a.owner()->same_as(*b.owner()))
        throw OwnerMismatch("elements of different rings");
}

namespace {

template <typename ZOp, typename POp, typename TOp>
Element binary_op(const Element& a, const Element& b, ZOp zop, POp pop, TOp top) {
    require_same_owner(a, b);
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers:
        case RingKind::Residue:
            return R->make(zop(a.as_integer(), b.as_integer()));
        case RingKind::PolyOverPrimeField:
            return R->make(pop(a.as_poly(), b.as_poly(), R->coefficient_prime()));
        case RingKind::Product: {
            Element::Tuple t;
            t.reserve(a.as_tuple().size());
            for (size_t i = 0; i < a.as_tuple().size(); ++i)
                t.push_back(top(a.as_tuple()[i], b.as_tuple()[i]));
            return R->make(std::move(t));
        }
    }
    throw DomainError("unreachable");
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
    return binary_op(
        a, b, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x + y); }, poly_add,
        [](const Element& x, const Element& y) { return x + y; });
}

Element operator-(const Element& a, const Element& b) {
    return binary_op(
        a, b, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); }, poly_sub,
        [](const Element& x, const Element& y) { return x - y; });
}

Element operator*(const Element& a, const Element& b) {
    return binary_op(
        a, b, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x * y); }, poly_mul,
        [](const Element& x, const Element& y) { return x * y; });
}

Element operator-(const Element& a) { return a.owner()->zero() - a; }

// ---- gcd / units / divisibility ----

BezoutTriple gcd_bezout(const Element& a, const Element& b) {
    require_same_owner(a, b);
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers: {
            mpz_class g, u, v;
            gcdext_z(a.as_integer(), b.as_integer(), g, u, v);
            return {R->make(g), R->make(u), R->make(v)};
        }
        case RingKind::Residue: {
            // gcd over Z of the representatives, then push down: the ideal
            // (a, b) of Z/N is generated by gcd(a, b, N).
            const mpz_class& N = R->residue_modulus();
            mpz_class g0, u0, v0;
            gcdext_z(a.as_integer(), b.as_integer(), g0, u0, v0);
            mpz_class g, s, t;
            gcdext_z(g0, N, g, s, t);  // g = s*g0 + t*N, the canonical divisor
            return {R->make(g), R->make(s * u0), R->make(s * v0)};
        }
        case RingKind::PolyOverPrimeField: {
            const mpz_class& p = R->coefficient_prime();
            // extended Euclid on polynomials
            Poly r0 = a.as_poly(), r1 = b.as_poly();
            Poly u0{1}, u1{}, v0{}, v1{1};
            poly_trim(u0);
            u0 = Poly{mpz_class(1)};
            while (!r1.empty()) {
                Poly q, rem;
                poly_divmod(r0, r1, p, q, rem);
                Poly nu = poly_sub(u0, poly_mul(q, u1, p), p);
                Poly nv = poly_sub(v0, poly_mul(q, v1, p), p);
                r0 = std::move(r1);
                r1 = std::move(rem);
                u0 = std::move(u1);
                u1 = std::move(nu);
                v0 = std::move(v1);
                v1 = std::move(nv);
            }
            if (r0.empty()) return {R->zero(), R->zero(), R->zero()};
            // normalize to monic
            const mpz_class c = inv_mod_z(r0.back(), p);
            Poly cp{c};
            return {R->make(poly_mul(r0, cp, p)), R->make(poly_mul(u0, cp, p)),
                    R->make(poly_mul(v0, cp, p))};
        }
        case RingKind::Product:
            throw DomainError("gcd_bezout over a product ring: split components first");
    }
    throw DomainError("unreachable");
}

bool is_unit(const Element& a) {
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers:
            return a.as_integer() == 1 || a.as_integer() == -1;
        case RingKind::Residue:
            return gcd_z(a.as_integer(), R->residue_modulus()) == 1;
        case RingKind::PolyOverPrimeField:
            return a.as_poly().size() == 1;
        case RingKind::Product:
            for (const auto& c : a.as_tuple())
                if (!is_unit(c)) return false;
            return true;
    }
    return false;
}

Element invert_unit(const Element& a) {
    const auto& R = a.owner();
    if (!is_unit(a)) throw DomainError("invert_unit on a non-unit");
    switch (R->kind()) {
        case RingKind::Integers:
            return a;  // 1 and -1 are self-inverse
        case RingKind::Residue:
            return R->make(inv_mod_z(a.as_integer(), R->residue_modulus()));
        case RingKind::PolyOverPrimeField:
            return R->make(Poly{inv_mod_z(a.as_poly()[0], R->coefficient_prime())});
        case RingKind::Product: {
            Element::Tuple t;
            for (const auto& c : a.as_tuple()) t.push_back(invert_unit(c));
            return R->make(std::move(t));
        }
    }
    throw DomainError("unreachable");
}

bool divides(const Element& a, const Element& b) {
    require_same_owner(a, b);
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers:
            if (a.as_integer() == 0) return b.as_integer() == 0;
            return mpz_divisible_p(b.as_integer().get_mpz_t(), a.as_integer().get_mpz_t()) != 0;
        case RingKind::Residue: {
            // (a) = (gcd(a, N)) as an ideal of Z/N
            const mpz_class g = gcd_z(a.as_integer(), R->residue_modulus());
            return mpz_divisible_p(b.as_integer().get_mpz_t(), g.get_mpz_t()) != 0;
        }
        case RingKind::PolyOverPrimeField: {
            if (a.is_zero()) return b.is_zero();
            Poly q, r;
            poly_divmod(b.as_poly(), a.as_poly(), R->coefficient_prime(), q, r);
            return r.empty();
        }
        case RingKind::Product:
            for (size_t i = 0; i < a.as_tuple().size(); ++i)
                if (!divides(a.as_tuple()[i], b.as_tuple()[i])) return false;
            return true;
    }
    return false;
}

Element exact_div(const Element& a, const Element& b) {
    require_same_owner(a, b);
    const auto& R = a.owner();
    if (!divides(b, a)) throw DomainError("exact_div: divisor does not divide numerator");
    switch (R->kind()) {
        case RingKind::Integers: {
            if (b.as_integer() == 0) return R->zero();  // then a = 0 as well
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), a.as_integer().get_mpz_t(), b.as_integer().get_mpz_t());
            return R->make(q);
        }
        case RingKind::Residue: {
            // q*b = a (mod N); solutions are q0 + k*(N/g), pick the smallest.
            const mpz_class& N = R->residue_modulus();
            const mpz_class g = gcd_z(b.as_integer(), N);
            if (g == N) return R->zero();  // b = 0 in Z/N, forces a = 0
            const mpz_class m = N / g;
            mpz_class q0 = nonneg_mod((a.as_integer() / g) * inv_mod_z(b.as_integer() / g, m), m);
            return R->make(q0);
        }
        case RingKind::PolyOverPrimeField: {
            if (b.is_zero()) return R->zero();
            Poly q, r;
            poly_divmod(a.as_poly(), b.as_poly(), R->coefficient_prime(), q, r);
            return R->make(std::move(q));
        }
        case RingKind::Product: {
            Element::Tuple t;
            for (size_t i = 0; i < a.as_tuple().size(); ++i)
                t.push_back(exact_div(a.as_tuple()[i], b.as_tuple()[i]));
            return R->make(std::move(t));
        }
    }
    throw DomainError("unreachable");
}

// ---- products ----

std::vector<Element> split_components(const Element& a) {
    if (!a.owner()->is_product())
        throw DomainError("split_components requires a product ring element");
    return a.as_tuple();
}

Element join_components(const RingPtr& product_ring, std::vector<Element> parts) {
    return product_ring->from_components(std::move(parts));
}

// ---- enumeration ----

std::vector<Element> all_elements(const RingPtr& ring) {
    if (!ring->is_finite()) throw DomainError("cannot enumerate an infinite ring");
    switch (ring->kind()) {
        case RingKind::Residue: {
            std::vector<Element> out;
            const mpz_class& N = ring->residue_modulus();
            for (mpz_class i = 0; i < N; ++i) out.push_back(ring->make(i));
            return out;
        }
        case RingKind::Product: {
            std::vector<std::vector<Element>> per;
            for (const auto& f : ring->factors()) per.push_back(all_elements(f));
            std::vector<Element> out;
            std::vector<size_t> idx(per.size(), 0);
            while (true) {
                Element::Tuple t;
                for (size_t i = 0; i < per.size(); ++i) t.push_back(per[i][idx[i]]);
                out.push_back(ring->from_components(std::move(t)));
                size_t k = per.size();
                while (k > 0) {
                    if (++idx[k - 1] < per[k - 1].size()) break;
                    idx[k - 1] = 0;
                    --k;
                }
                if (k == 0) break;
            }
            return out;
        }
        default:
            throw DomainError("cannot enumerate an infinite ring");
    }
}

std::vector<Element> unit_group(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::Integers:
            return {ring->from_integer(1), ring->from_integer(-1)};
        case RingKind::Residue: {
            std::vector<Element> out;
            for (auto& e : all_elements(ring))
                if (is_unit(e)) out.push_back(std::move(e));
            return out;
        }
        case RingKind::PolyOverPrimeField: {
            std::vector<Element> out;
            const mpz_class& p = ring->coefficient_prime();
            for (mpz_class c = 1; c < p; ++c) out.push_back(ring->from_integer(c));
            return out;
        }
        case RingKind::Product: {
            std::vector<std::vector<Element>> per;
            for (const auto& f : ring->factors()) per.push_back(unit_group(f));
            std::vector<Element> out;
            std::vector<size_t> idx(per.size(), 0);
            while (true) {
                Element::Tuple t;
                for (size_t i = 0; i < per.size(); ++i) t.push_back(per[i][idx[i]]);
                out.push_back(ring->from_components(std::move(t)));
                size_t k = per.size();
                while (k > 0) {
                    if (++idx[k - 1] < per[k - 1].size()) break;
                    idx[k - 1] = 0;
                    --k;
                }
                if (k == 0) break;
            }
            return out;
        }
    }
    throw DomainError("unreachable");
}

// ---- canonical associates ----

AssociateDecomposition associate_decompose(const Element& a) {
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers: {
            if (a.as_integer() < 0) return {R->make(mpz_class(-a.as_integer())), R->from_integer(-1)};
            return {a, R->one()};
        }
        case RingKind::Residue: {
            // a = u * gcd(a, N) for some unit u of Z/N; search the progression
            // a' + k*(N/g) for a representative coprime to N.
            const mpz_class& N = R->residue_modulus();
            if (a.as_integer() == 0) return {a, R->one()};
            const mpz_class g = gcd_z(a.as_integer(), N);
            const mpz_class step = N / g;
            mpz_class u = a.as_integer() / g;
            while (gcd_z(u, N) != 1) u += step;
            u = nonneg_mod(u, N);
            return {R->make(g), R->make(u)};
        }
        case RingKind::PolyOverPrimeField: {
            if (a.is_zero()) return {a, R->one()};
            const mpz_class lc = a.as_poly().back();
            Poly monic = poly_mul(a.as_poly(), Poly{inv_mod_z(lc, R->coefficient_prime())},
                                  R->coefficient_prime());
            return {R->make(std::move(monic)), R->from_integer(lc)};
        }
        case RingKind::Product: {
            Element::Tuple assoc, unit;
            for (const auto& c : a.as_tuple()) {
                auto d = associate_decompose(c);
                assoc.push_back(std::move(d.associate));
                unit.push_back(std::move(d.unit));
            }
            return {R->make(std::move(assoc)), R->make(std::move(unit))};
        }
    }
    throw DomainError("unreachable");
}

Element canonical_associate(const Element& a) { return associate_decompose(a).associate; }

// ---- residues modulo a principal ideal ----

Element mod_ideal(const Element& a, const Element& g) {
    require_same_owner(a, g);
    const auto& R = a.owner();
    if (g.is_zero()) return a;
    switch (R->kind()) {
        case RingKind::Integers:
            return R->make(nonneg_mod(a.as_integer(), g.as_integer()));
        case RingKind::Residue: {
            const mpz_class gg = gcd_z(g.as_integer(), R->residue_modulus());
            return R->make(nonneg_mod(a.as_integer(), gg));
        }
        case RingKind::PolyOverPrimeField: {
            const Poly monic = canonical_associate(g).as_poly();
            Poly q, r;
            poly_divmod(a.as_poly(), monic, R->coefficient_prime(), q, r);
            return R->make(std::move(r));
        }
        case RingKind::Product: {
            Element::Tuple t;
            for (size_t i = 0; i < a.as_tuple().size(); ++i)
                t.push_back(mod_ideal(a.as_tuple()[i], g.as_tuple()[i]));
            return R->make(std::move(t));
        }
    }
    throw DomainError("unreachable");
}

bool is_unit_mod(const Element& a, const Element& g) {
    require_same_owner(a, g);
    if (g.is_zero()) return is_unit(a);
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers:
            return gcd_z(a.as_integer(), g.as_integer()) == 1;
        case RingKind::Residue: {
            const mpz_class gg = gcd_z(g.as_integer(), R->residue_modulus());
            return gcd_z(a.as_integer(), gg) == 1;
        }
        case RingKind::PolyOverPrimeField: {
            auto bez = gcd_bezout(a, canonical_associate(g));
            return bez.g.is_one();
        }
        case RingKind::Product: {
            for (size_t i = 0; i < a.as_tuple().size(); ++i)
                if (!is_unit_mod(a.as_tuple()[i], g.as_tuple()[i])) return false;
            return true;
        }
    }
    return false;
}

Element invert_mod(const Element& a, const Element& g) {
    require_same_owner(a, g);
    if (g.is_zero()) return invert_unit(a);
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers:
            return R->make(inv_mod_z(a.as_integer(), g.as_integer()));
        case RingKind::Residue: {
            const mpz_class gg = gcd_z(g.as_integer(), R->residue_modulus());
            if (gg == 1) return invert_unit(a);
            return R->make(inv_mod_z(a.as_integer(), gg));
        }
        case RingKind::PolyOverPrimeField: {
            const Element monic = canonical_associate(g);
            auto bez = gcd_bezout(a, monic);
            if (!bez.g.is_one()) throw DomainError("element not invertible modulo the ideal");
            return mod_ideal(bez.u, monic);
        }
        case RingKind::Product: {
            Element::Tuple t;
            for (size_t i = 0; i < a.as_tuple().size(); ++i)
                t.push_back(invert_mod(a.as_tuple()[i], g.as_tuple()[i]));
            return R->make(std::move(t));
        }
    }
    throw DomainError("unreachable");
}

std::vector<Element> residue_elements(const RingPtr& ring, const Element& g) {
    switch (ring->kind()) {
        case RingKind::Integers: {
            if (g.is_zero()) throw DomainError("R/(0) over Z is infinite");
            std::vector<Element> out;
            const mpz_class n = canonical_associate(g).as_integer();
            for (mpz_class i = 0; i < n; ++i) out.push_back(ring->make(i));
            return out;
        }
        case RingKind::Residue: {
            const mpz_class n =
                g.is_zero() ? ring->residue_modulus() : gcd_z(g.as_integer(), ring->residue_modulus());
            std::vector<Element> out;
            for (mpz_class i = 0; i < n; ++i) out.push_back(ring->make(i));
            return out;
        }
        case RingKind::PolyOverPrimeField: {
            if (g.is_zero()) throw DomainError("R/(0) over F_p[x] is infinite");
            const size_t deg = g.as_poly().size() - 1;
            const mpz_class& p = ring->coefficient_prime();
            std::vector<Element> out;
            Poly cur(deg, 0);
            if (deg == 0) {
                out.push_back(ring->zero());
                return out;
            }
            while (true) {
                out.push_back(ring->make(Poly(cur)));
                size_t k = 0;
                while (k < deg) {
                    cur[k] += 1;
                    if (cur[k] < p) break;
                    cur[k] = 0;
                    ++k;
                }
                if (k == deg) break;
            }
            return out;
        }
        case RingKind::Product: {
            std::vector<std::vector<Element>> per;
            const auto& gs = g.as_tuple();
            for (size_t i = 0; i < ring->factors().size(); ++i)
                per.push_back(residue_elements(ring->factors()[i], gs[i]));
            std::vector<Element> out;
            std::vector<size_t> idx(per.size(), 0);
            while (true) {
                Element::Tuple t;
                for (size_t i = 0; i < per.size(); ++i) t.push_back(per[i][idx[i]]);
                out.push_back(ring->from_components(std::move(t)));
                size_t k = per.size();
                while (k > 0) {
                    if (++idx[k - 1] < per[k - 1].size()) break;
                    idx[k - 1] = 0;
                    --k;
                }
                if (k == 0) break;
            }
            return out;
        }
    }
    throw DomainError("unreachable");
}

std::vector<Element> units_mod(const RingPtr& ring, const Element& g) {
    if (g.is_zero()) return unit_group(ring);
    if (ring->kind() == RingKind::Product) {
        std::vector<std::vector<Element>> per;
        const auto& gs = g.as_tuple();
        for (size_t i = 0; i < ring->factors().size(); ++i)
            per.push_back(units_mod(ring->factors()[i], gs[i]));
        std::vector<Element> out;
        std::vector<size_t> idx(per.size(), 0);
        while (true) {
            Element::Tuple t;
            for (size_t i = 0; i < per.size(); ++i) t.push_back(per[i][idx[i]]);
            out.push_back(ring->from_components(std::move(t)));
            size_t k = per.size();
            while (k > 0) {
                if (++idx[k - 1] < per[k - 1].size()) break;
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
        return out;
    }
    std::vector<Element> out;
    for (auto& e : residue_elements(ring, g))
        if (is_unit_mod(e, g)) out.push_back(std::move(e));
    return out;
}

// ---- Euclidean division on representatives ----

DivMod divmod(const Element& a, const Element& b) {
    require_same_owner(a, b);
    const auto& R = a.owner();
    switch (R->kind()) {
        case RingKind::Integers:
        case RingKind::Residue: {
            if (b.as_integer() == 0) throw DomainError("divmod by zero");
            mpz_class babs = abs(b.as_integer());
            mpz_class r = nonneg_mod(a.as_integer(), babs);
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), mpz_class(a.as_integer() - r).get_mpz_t(),
                         b.as_integer().get_mpz_t());
            return {R->make(q), R->make(r)};
        }
        case RingKind::PolyOverPrimeField: {
            Poly q, r;
            poly_divmod(a.as_poly(), b.as_poly(), R->coefficient_prime(), q, r);
            return {R->make(std::move(q)), R->make(std::move(r))};
        }
        case RingKind::Product:
            throw DomainError("divmod over a product ring: split components first");
    }
    throw DomainError("unreachable");
}

mpz_class rep_size(const Element& a) {
    switch (a.owner()->kind()) {
        case RingKind::Integers:
            return abs(a.as_integer());
        case RingKind::Residue:
            return a.as_integer();
        case RingKind::PolyOverPrimeField:
            return a.is_zero() ? mpz_class(0) : mpz_class(a.as_poly().size());
        case RingKind::Product:
            throw DomainError("rep_size over a product ring: split components first");
    }
    return 0;
}

bool rep_divides(const Element& a, const Element& b) {
    require_same_owner(a, b);
    switch (a.owner()->kind()) {
        case RingKind::Integers:
        case RingKind::Residue:
            if (a.as_integer() == 0) return b.as_integer() == 0;
            return mpz_divisible_p(b.as_integer().get_mpz_t(), a.as_integer().get_mpz_t()) != 0;
        case RingKind::PolyOverPrimeField: {
            if (a.is_zero()) return b.is_zero();
            Poly q, r;
            poly_divmod(b.as_poly(), a.as_poly(), a.owner()->coefficient_prime(), q, r);
            return r.empty();
        }
        case RingKind::Product:
            throw DomainError("rep_divides over a product ring: split components first");
    }
    return false;
}

// ---- PrincipalIdeal ----

PrincipalIdeal::PrincipalIdeal(const Element& gen) : gen_(canonical_associate(gen)) {}

bool PrincipalIdeal::operator==(const PrincipalIdeal& o) const { return gen_ == o.gen_; }

PrincipalIdeal operator*(const PrincipalIdeal& a, const PrincipalIdeal& b) {
    return PrincipalIdeal(a.gen_ * b.gen_);
}

std::string PrincipalIdeal::str() const { return "(" + gen_.str() + ")"; }

}  // namespace edr
