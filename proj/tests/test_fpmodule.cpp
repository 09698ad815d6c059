#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edr/fpmodule.hpp"

using namespace edr;

namespace {

std::mt19937_64 rng(23);

FpModulePtr diag_module(const RingPtr& R, const std::vector<long>& diag) {
    const int k = int(diag.size());
    Matrix rel(R, k, k);
    for (int i = 0; i < k; ++i) rel.set(i, i, R->from_integer(diag[i]));
    return FpModule::create(R, k, std::move(rel));
}

}  // namespace

TEST_CASE("decompose: chain and witness") {
    auto Z = Ring::integers();
    auto M = diag_module(Z, {2, 4});
    REQUIRE(M->mu() == 2);
    CHECK(M->invariant_chain()[0].generator() == Z->from_integer(2));
    CHECK(M->invariant_chain()[1].generator() == Z->from_integer(4));

    // P * relations * Q is the diagonal of the full factor list
    auto S = M->coord_change() * M->relations() * M->relation_column_witness();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(S.at(i, j) == (i == j ? M->full_factor_list()[i] : Z->zero()));
    CHECK(M->coord_change() * M->coord_change_inv() == Matrix::identity(Z, 2));

    // order gets normalized
    auto M2 = diag_module(Z, {4, 2});
    CHECK(M2->invariant_chain()[0].generator() == Z->from_integer(2));
    CHECK(M2->invariant_chain()[1].generator() == Z->from_integer(4));

    // identity relations present the zero module
    auto M3 = diag_module(Z, {1, 1, 1});
    CHECK(M3->mu() == 0);
    CHECK(M3->invariant_chain().empty());
}

TEST_CASE("mu examples") {
    auto Z = Ring::integers();
    CHECK(diag_module(Z, {4, 8})->mu() == 2);
    CHECK(diag_module(Z, {1})->mu() == 0);
    CHECK(FpModule::create(Z, 2, Matrix(Z, 2, 0))->mu() == 2);  // free of rank 2
    CHECK(FpModule::create(Z, 0, Matrix(Z, 0, 0))->mu() == 0);
}

TEST_CASE("mu equals chain length on modules built from random chains") {
    auto Z = Ring::integers();
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> base(2, 5);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int t = 0; t < 30; ++t) {
        std::vector<long> diag;
        long cur = base(rng);
        const int k = len(rng);
        for (int i = 0; i < k; ++i) {
            diag.push_back(cur);
            cur *= mult(rng);
        }
        auto M = diag_module(Z, diag);
        CHECK(M->mu() == k);
        for (int i = 0; i < k; ++i)
            CHECK(M->invariant_chain()[i].generator() == Z->from_integer(diag[i]));
    }
}

TEST_CASE("fitting ideals") {
    auto Z = Ring::integers();
    auto M = diag_module(Z, {4, 8});  // Z/4 x Z/8
    CHECK(fitting_ideal(*M, 1).generator() == Z->from_integer(4));
    CHECK(fitting_ideal(*M, 0).generator() == Z->from_integer(32));
    CHECK(fitting_ideal(*M, 2).is_unit_ideal());
    CHECK(fitting_ideal(*M, 7).is_unit_ideal());

    auto F = FpModule::create(Z, 2, Matrix(Z, 2, 0));  // free of rank 2
    CHECK(fitting_ideal(*F, 1).is_zero());
    CHECK(fitting_ideal(*F, 2).is_unit_ideal());

    // chain route and presentation-minor route agree on random modules
    std::uniform_int_distribution<int> d(-6, 6);
    for (const auto& R : {Ring::integers(), Ring::residue(12)}) {
        for (int t = 0; t < 15; ++t) {
            Matrix rel(R, 3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) rel.set(i, j, R->from_integer(d(rng)));
            auto M2 = FpModule::create(R, 3, rel);
            for (int i = 0; i <= 3; ++i)
                CHECK(fitting_ideal(*M2, i) == fitting_ideal_from_minors(*M2, i));
        }
    }
}

TEST_CASE("element arithmetic and equality through the relation span") {
    auto Z = Ring::integers();
    auto M = diag_module(Z, {4, 8});
    auto a = M->element_from_integers({1, 2});
    auto b = M->element_from_integers({5, 10});  // differs by (4, 8)
    CHECK(a == b);
    CHECK(a != M->element_from_integers({1, 3}));
    CHECK((a - b).is_zero_element());
    CHECK(a + a == M->element_from_integers({2, 4}));
    CHECK(a.scaled(Z->from_integer(4)) == M->element_from_integers({0, 8}));

    auto dec = M->decomposed_coords(a);
    REQUIRE(int(dec.size()) == 2);
    CHECK(M->from_decomposed(dec) == a);

    // decomposed basis elements have unit-vector coordinates
    for (int i = 0; i < 2; ++i) {
        auto e = M->decomposed_basis(i);
        auto c = M->decomposed_coords(e);
        for (int j = 0; j < 2; ++j) CHECK(c[j] == (i == j ? Z->one() : Z->zero()));
    }
}

TEST_CASE("is_generating") {
    auto Z = Ring::integers();
    auto M = diag_module(Z, {4, 8});
    std::vector<ModuleElement> basis = {M->basis_element(0), M->basis_element(1)};
    CHECK(is_generating(*M, basis));

    std::vector<ModuleElement> empty;
    CHECK(!is_generating(*M, empty));
    CHECK(is_generating(*FpModule::create(Z, 0, Matrix(Z, 0, 0)), empty));

    // (2 e_1, e_2) misses e_1 mod 4
    std::vector<ModuleElement> bad = {M->element_from_integers({2, 0}),
                                      M->element_from_integers({0, 1})};
    CHECK(!is_generating(*M, bad));

    std::vector<ModuleElement> shifted = {M->element_from_integers({1, 1}),
                                          M->element_from_integers({0, 1})};
    CHECK(is_generating(*M, shifted));
}

TEST_CASE("torsion rank") {
    auto Z = Ring::integers();
    Matrix rel(Z, 3, 1);
    rel.set(0, 0, Z->from_integer(4));  // Z/4 x Z x Z
    auto M = FpModule::create(Z, 3, rel);
    auto t = torsion_mu(*M);
    CHECK(t.value == 1);
    CHECK(!t.chain_convention);

    CHECK(torsion_mu(*FpModule::create(Z, 2, Matrix(Z, 2, 0))).value == 0);
    CHECK(torsion_mu(*diag_module(Z, {2, 6})).value == 2);

    auto R8 = Ring::residue(8);
    auto t8 = torsion_mu(*diag_module(R8, {4, 0}));
    CHECK(t8.value == 1);
    CHECK(t8.chain_convention);

    auto P = Ring::product({Ring::residue(4), Ring::residue(9)});
    auto MP = diag_module(P, {2, 0});  // component chains: [2, 0] and [2, 0] -> mu' = 1 each
    CHECK(torsion_mu(*MP).value == 1);
}

TEST_CASE("quotient by ideal") {
    auto Z = Ring::integers();
    auto M = FpModule::create(Z, 2, Matrix(Z, 2, 0));  // Z^2
    auto Q = quotient_by_ideal(*M, PrincipalIdeal(Z->from_integer(5)));
    REQUIRE(Q->mu() == 2);
    CHECK(Q->invariant_chain()[0].generator() == Z->from_integer(5));
    CHECK(Q->invariant_chain()[1].generator() == Z->from_integer(5));

    CHECK(quotient_by_ideal(*M, PrincipalIdeal(Z->one()))->mu() == 0);

    auto M2 = diag_module(Z, {4, 8});
    auto Q2 = quotient_by_ideal(*M2, PrincipalIdeal(Z->from_integer(2)));
    REQUIRE(Q2->mu() == 2);
    CHECK(Q2->invariant_chain()[0].generator() == Z->from_integer(2));
    CHECK(Q2->invariant_chain()[1].generator() == Z->from_integer(2));

    // push_forward preserves generation
    std::vector<ModuleElement> gens = {M2->basis_element(0), M2->basis_element(1)};
    std::vector<ModuleElement> pushed = {push_forward(Q2, gens[0]), push_forward(Q2, gens[1])};
    CHECK(is_generating(*Q2, pushed));
}

TEST_CASE("Fitting ideals commute with quotients on random small modules") {
    auto Z = Ring::integers();
    std::uniform_int_distribution<int> d(-5, 5);
    std::uniform_int_distribution<int> gen(2, 6);
    for (int t = 0; t < 12; ++t) {
        Matrix rel(Z, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) rel.set(i, j, Z->from_integer(d(rng)));
        auto M = FpModule::create(Z, 2, rel);
        PrincipalIdeal a(Z->from_integer(gen(rng)));
        auto Q = quotient_by_ideal(*M, a);
        for (int i = 0; i <= 2; ++i) {
            // Fitt_i(M/aM) = Fitt_i(M) + (a) as ideals of Z: gcd of generators
            auto lhs = fitting_ideal_from_minors(*Q, i);
            auto rhs = gcd_bezout(fitting_ideal(*M, i).generator(), a.generator()).g;
            CHECK(lhs.generator() == canonical_associate(rhs));
        }
    }
}

TEST_CASE("split_module over a product") {
    auto P = Ring::product({Ring::residue(4), Ring::residue(9)});
    auto M = diag_module(P, {2, 6});
    auto parts = split_module(*M);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0]->ring()->describe() == "Z/4");
    CHECK(parts[1]->ring()->describe() == "Z/9");
    // component chains: over Z/4 diag(2, 2); over Z/9 diag(2->unit, 6->3)
    CHECK(parts[0]->mu() == 2);
    CHECK(parts[1]->mu() == 1);
    CHECK(parts[1]->invariant_chain()[0].generator() == Ring::residue(9)->from_integer(3));
}
