#include "edr/fpmodule.hpp"

#include <algorithm>
#include <sstream>

namespace edr {

// ---- ModuleElement ----

const FpModule& ModuleElement::module() const { return *module_; }

namespace {

void require_same_module(const ModuleElement& a, const ModuleElement& b) {
    if (&a.module() != &b.module())
        throw OwnerMismatch("module elements from different modules");
}

}  // namespace

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    require_same_module(*this, o);
    std::vector<Element> c;
    c.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c.push_back(coords_[i] + o.coords_[i]);
    return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    require_same_module(*this, o);
    std::vector<Element> c;
    c.reserve(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c.push_back(coords_[i] - o.coords_[i]);
    return ModuleElement(module_, std::move(c));
}

ModuleElement ModuleElement::scaled(const Element& r) const {
    std::vector<Element> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) c.push_back(x * r);
    return ModuleElement(module_, std::move(c));
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    require_same_module(*this, o);
    return module_->elements_equal(*this, o);
}

bool ModuleElement::is_zero_element() const {
    return module_->elements_equal(*this, module_->zero_element());
}

std::string ModuleElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i].str();
    os << "]";
    return os.str();
}

// ---- FpModule ----

FpModulePtr FpModule::create(RingPtr ring, int generators, Matrix relations) {
    if (generators < 0) throw DomainError("negative generator count");
    if (relations.rows() != generators)
        throw DomainError("relation matrix must have one row per generator");
    if (!relations.ring()->same_as(*ring)) throw OwnerMismatch("relations over the wrong ring");

    auto m = std::shared_ptr<FpModule>(new FpModule());
    m->ring_ = ring;
    m->generators_ = generators;
    m->relations_ = relations;

    auto snf = smith_normal_form(relations);
    m->to_dec_ = snf.chain_B();
    m->from_dec_ = snf.chain_B_inv();
    m->col_witness_ = snf.chain_C();

    m->factors_ = snf.diag_chain_order;
    m->factors_.resize(generators, ring->zero());  // rows beyond the diagonal are free

    m->unit_count_ = 0;
    while (m->unit_count_ < generators && is_unit(m->factors_[m->unit_count_])) ++m->unit_count_;
    for (int i = m->unit_count_; i < generators; ++i) {
        if (is_unit(m->factors_[i]))
            throw DomainError("internal error: unit factor after a non-unit in the chain");
        m->chain_.emplace_back(m->factors_[i]);
    }
    return m;
}

int FpModule::free_rank() const {
    int n = 0;
    for (const auto& a : chain_)
        if (a.is_zero()) ++n;
    return n;
}

ModuleElement FpModule::element(std::vector<Element> coords) const {
    if (int(coords.size()) != generators_)
        throw DomainError("coordinate column length must equal the generator count");
    for (const auto& e : coords)
        if (!e.owner()->same_as(*ring_)) throw OwnerMismatch("coordinate over the wrong ring");
    return ModuleElement(shared_from_this(), std::move(coords));
}

ModuleElement FpModule::element_from_integers(const std::vector<long>& coords) const {
    std::vector<Element> c;
    c.reserve(coords.size());
    for (long v : coords) c.push_back(ring_->from_integer(v));
    return element(std::move(c));
}

ModuleElement FpModule::zero_element() const {
    return element(std::vector<Element>(generators_, ring_->zero()));
}

ModuleElement FpModule::basis_element(int i) const {
    if (i < 0 || i >= generators_) throw DomainError("basis index out of range");
    std::vector<Element> c(generators_, ring_->zero());
    c[i] = ring_->one();
    return element(std::move(c));
}

ModuleElement FpModule::decomposed_basis(int i) const {
    if (i < 0 || i >= mu()) throw DomainError("decomposed basis index out of range");
    std::vector<Element> dec(mu(), ring_->zero());
    dec[i] = ring_->one();
    return from_decomposed(dec);
}

std::vector<Element> FpModule::decomposed_coords(const ModuleElement& e) const {
    if (&e.module() != this) throw OwnerMismatch("element from a different module");
    std::vector<Element> out;
    out.reserve(mu());
    for (int i = unit_count_; i < generators_; ++i) {
        Element s = ring_->zero();
        for (int j = 0; j < generators_; ++j) s = s + to_dec_.at(i, j) * e.lift()[j];
        out.push_back(mod_ideal(s, factors_[i]));
    }
    return out;
}

ModuleElement FpModule::from_decomposed(const std::vector<Element>& dec) const {
    if (int(dec.size()) != mu()) throw DomainError("decomposed coordinate length must equal mu");
    std::vector<Element> c;
    c.reserve(generators_);
    for (int i = 0; i < generators_; ++i) {
        Element s = ring_->zero();
        for (int j = unit_count_; j < generators_; ++j)
            s = s + from_dec_.at(i, j) * dec[j - unit_count_];
        c.push_back(std::move(s));
    }
    return element(std::move(c));
}

bool FpModule::elements_equal(const ModuleElement& a, const ModuleElement& b) const {
    auto da = decomposed_coords(a);
    auto db = decomposed_coords(b);
    for (size_t i = 0; i < da.size(); ++i)
        if (da[i] != db[i]) return false;
    return true;
}

std::string FpModule::describe() const {
    std::ostringstream os;
    os << ring_->describe() << "-module on " << generators_ << " generators, chain [";
    for (int i = 0; i < mu(); ++i) os << (i ? ", " : "") << chain_[i].str();
    os << "]";
    return os.str();
}

int mu(const FpModule& m) { return m.mu(); }

// ---- Fitting ideals ----

PrincipalIdeal fitting_ideal_from_minors(const FpModule& m, int i) {
    const int size = m.generators() - i;
    return minors_ideal(m.relations(), size);
}

PrincipalIdeal fitting_ideal(const FpModule& m, int i) {
    if (i < 0) throw DomainError("Fitting index must be >= 0");
    const auto& R = m.ring();
    PrincipalIdeal out(R->one());
    if (i < m.mu()) {
        for (int t = 0; t < m.mu() - i; ++t) out = out * m.invariant_chain()[t];
    }
    // Fitting's lemma at desk scale: the chain route must agree with the
    // minors of the raw presentation whenever enumerating them is feasible.
    const int size = m.generators() - i;
    if (size <= 8 && std::min(m.relations().rows(), m.relations().cols()) <= 8) {
        if (!(fitting_ideal_from_minors(m, i) == out))
            throw DomainError("internal error: chain and minor Fitting ideals disagree");
    }
    return out;
}

// ---- generation test ----

bool is_generating(const FpModule& m, std::span<const ModuleElement> elements) {
    for (const auto& e : elements)
        if (&e.module() != &m) throw OwnerMismatch("candidate from a different module");
    const int k = m.generators();
    if (k == 0) return true;  // the zero module is generated by anything
    const int n = int(elements.size());
    Matrix block(m.ring(), k, n + m.relations().cols());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) block.set(i, j, elements[j].lift()[i]);
    for (int j = 0; j < m.relations().cols(); ++j)
        for (int i = 0; i < k; ++i) block.set(i, n + j, m.relations().at(i, j));
    auto snf = smith_normal_form(block);
    if (snf.diag_len() < k) return false;
    for (const auto& d : snf.diag_chain_order)
        if (!is_unit(d)) return false;
    return true;
}

// ---- torsion ----

TorsionRank torsion_mu(const FpModule& m) {
    const auto& R = m.ring();
    if (R->is_product()) {
        TorsionRank out;
        for (const auto& part : split_module(m)) {
            TorsionRank t = torsion_mu(*part);
            out.value = std::max(out.value, t.value);
            out.chain_convention = out.chain_convention || t.chain_convention;
        }
        return out;
    }
    TorsionRank out;
    for (const auto& a : m.invariant_chain())
        if (!a.is_zero()) ++out.value;
    out.chain_convention = (R->kind() == RingKind::Residue);
    return out;
}

// ---- quotients and products ----

FpModulePtr quotient_by_ideal(const FpModule& m, const PrincipalIdeal& a) {
    if (!a.owner()->same_as(*m.ring())) throw OwnerMismatch("ideal over the wrong ring");
    const int k = m.generators();
    Matrix rel(m.ring(), k, m.relations().cols() + k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m.relations().cols(); ++j) rel.set(i, j, m.relations().at(i, j));
        rel.set(i, m.relations().cols() + i, a.generator());
    }
    return FpModule::create(m.ring(), k, std::move(rel));
}

ModuleElement push_forward(const FpModulePtr& quotient, const ModuleElement& e) {
    return quotient->element(e.lift());
}

std::vector<FpModulePtr> split_module(const FpModule& m) {
    if (!m.ring()->is_product()) throw DomainError("split_module requires a product backend");
    auto parts = split_matrix(m.relations());
    std::vector<FpModulePtr> out;
    const auto& factors = m.ring()->factors();
    for (size_t x = 0; x < factors.size(); ++x)
        out.push_back(FpModule::create(factors[x], m.generators(), parts[x]));
    return out;
}

}  // namespace edr
