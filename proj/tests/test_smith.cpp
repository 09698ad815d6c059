#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edr/smith.hpp"

using namespace edr;

namespace {

std::mt19937_64 rng(11);

Element random_element(const RingPtr& R, std::mt19937_64& gen) {
    switch (R->kind()) {
        case RingKind::Integers: {
            std::uniform_int_distribution<long> d(-50, 50);
            return R->from_integer(d(gen));
        }
        case RingKind::Residue: {
            std::uniform_int_distribution<long> d(0, R->residue_modulus().get_si() - 1);
            return R->from_integer(d(gen));
        }
        case RingKind::PolyOverPrimeField: {
            std::uniform_int_distribution<int> deg(0, 2);
            std::uniform_int_distribution<long> c(0, R->coefficient_prime().get_si() - 1);
            std::vector<mpz_class> coeffs;
            int n = deg(gen);
            for (int i = 0; i <= n; ++i) coeffs.emplace_back(c(gen));
            return R->from_coefficients(coeffs);
        }
        case RingKind::Product: {
            std::vector<Element> t;
            for (const auto& f : R->factors()) t.push_back(random_element(f, gen));
            return R->from_components(std::move(t));
        }
    }
    return R->zero();
}

Matrix random_matrix(const RingPtr& R, int rows, int cols, std::mt19937_64& gen) {
    Matrix m(R, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, random_element(R, gen));
    return m;
}

void check_decomposition(const Matrix& a, const SmithDecomposition& d) {
    CHECK(d.B * a * d.C == d.S);
    CHECK(is_unit(d.B.determinant()));
    CHECK(is_unit(d.C.determinant()));
    CHECK(d.B * d.B_inv == Matrix::identity(a.ring(), a.rows()));
    CHECK(d.C * d.C_inv == Matrix::identity(a.ring(), a.cols()));
    const int r = d.diag_len();
    REQUIRE(r == std::min(a.rows(), a.cols()));
    for (int i = 0; i < r; ++i) {
        CHECK(d.S.at(i, i) == d.diag_paper_order[i]);
        CHECK(d.diag_paper_order[i] == canonical_associate(d.diag_paper_order[i]));
        CHECK(d.diag_chain_order[i] == d.diag_paper_order[r - 1 - i]);
        if (i + 1 < r) CHECK(divides(d.diag_paper_order[i + 1], d.diag_paper_order[i]));
    }
    // off-diagonal entries vanish
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) CHECK(d.S.at(i, j).is_zero());
    CHECK(d.chain_B() * a * d.chain_C() == d.chain_S());
}

}  // namespace

TEST_CASE("snf of [[2,4],[6,8]] over Z") {
    auto Z = Ring::integers();
    auto a = Matrix::from_integers(Z, {{2, 4}, {6, 8}});
    auto d = smith_normal_form(a);
    check_decomposition(a, d);
    CHECK(d.diag_chain_order[0] == Z->from_integer(2));
    CHECK(d.diag_chain_order[1] == Z->from_integer(4));
}

TEST_CASE("snf of identity and zero") {
    auto Z = Ring::integers();
    auto d = smith_normal_form(Matrix::identity(Z, 3));
    check_decomposition(Matrix::identity(Z, 3), d);
    for (const auto& e : d.diag_chain_order) CHECK(e.is_one());

    Matrix zero(Z, 2, 2);
    auto dz = smith_normal_form(zero);
    CHECK(dz.S == zero);
    CHECK(dz.B == Matrix::identity(Z, 2));
    CHECK(dz.C == Matrix::identity(Z, 2));
    for (const auto& e : dz.diag_chain_order) CHECK(e.is_zero());
}

TEST_CASE("snf of diag(2,3) over Z/6 has chain [1, 0]") {
    auto R = Ring::residue(6);
    auto a = Matrix::from_integers(R, {{2, 0}, {0, 3}});
    auto d = smith_normal_form(a);
    check_decomposition(a, d);
    CHECK(d.diag_chain_order[0] == R->one());
    CHECK(d.diag_chain_order[1] == R->zero());
}

TEST_CASE("snf idempotence") {
    for (const auto& R : {Ring::integers(), Ring::residue(12)}) {
        for (int t = 0; t < 20; ++t) {
            auto a = random_matrix(R, 3, 4, rng);
            auto d = smith_normal_form(a);
            auto d2 = smith_normal_form(d.S);
            CHECK(d2.S == d.S);
        }
    }
}

TEST_CASE("minor gcd examples") {
    auto Z = Ring::integers();
    auto f = minor_gcd_invariants(Matrix::from_integers(Z, {{2, 4}, {6, 8}}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].generator() == Z->from_integer(2));
    CHECK(f[1].generator() == Z->from_integer(4));

    auto fi = minor_gcd_invariants(Matrix::identity(Z, 2));
    CHECK(fi[0].is_unit_ideal());
    CHECK(fi[1].is_unit_ideal());

    auto fz = minor_gcd_invariants(Matrix(Z, 2, 2));
    CHECK(fz[0].is_zero());
    CHECK(fz[1].is_zero());

    CHECK_THROWS_AS(minor_gcd_invariants(random_matrix(Z, 9, 9, rng)), DomainError);
    auto P = Ring::product({Ring::residue(4), Ring::residue(9)});
    CHECK_THROWS_AS(minor_gcd_invariants(Matrix::identity(P, 2)), DomainError);
}

TEST_CASE("oracle equivalence: snf chain equals minor gcd chain") {
    const std::vector<RingPtr> backends = {Ring::integers(), Ring::residue(8), Ring::residue(12),
                                           Ring::poly_over_prime_field(3)};
    std::uniform_int_distribution<int> dim(1, 4);
    for (const auto& R : backends) {
        CAPTURE(R->describe());
        for (int t = 0; t < 60; ++t) {
            auto a = random_matrix(R, dim(rng), dim(rng), rng);
            auto d = smith_normal_form(a);
            auto f = minor_gcd_invariants(a);
            REQUIRE(int(f.size()) == d.diag_len());
            for (int i = 0; i < d.diag_len(); ++i) {
                CAPTURE(a.str());
                CHECK(f[i].generator() == d.diag_chain_order[i]);
            }
            check_decomposition(a, d);
        }
    }
}

TEST_CASE("snf over a product ring recombines componentwise") {
    auto P = Ring::product({Ring::residue(4), Ring::residue(9)});
    for (int t = 0; t < 25; ++t) {
        auto a = random_matrix(P, 3, 3, rng);
        auto d = smith_normal_form(a);
        check_decomposition(a, d);
        // joint chain projects onto each component chain
        auto parts = split_matrix(a);
        for (size_t x = 0; x < parts.size(); ++x) {
            auto dx = smith_normal_form(parts[x]);
            for (int i = 0; i < d.diag_len(); ++i)
                CHECK(d.diag_chain_order[i].as_tuple()[x] == dx.diag_chain_order[i]);
        }
    }
}

TEST_CASE("minors_ideal over residue rings accounts for the modulus") {
    auto R = Ring::residue(12);
    auto a = Matrix::from_integers(R, {{4, 0}, {0, 4}});
    CHECK(minors_ideal(a, 1).generator() == R->from_integer(4));
    CHECK(minors_ideal(a, 2).generator() == R->from_integer(4));  // (16) = (4) in Z/12
    CHECK(minors_ideal(a, 3).is_zero());
    CHECK(minors_ideal(a, 0).is_unit_ideal());
}

TEST_CASE("solve_linear") {
    auto Z = Ring::integers();
    auto a = Matrix::from_integers(Z, {{2, 0}, {0, 3}});
    auto sol = solve_linear(a, {Z->from_integer(4), Z->from_integer(9)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Z->from_integer(2));
    CHECK((*sol)[1] == Z->from_integer(3));
    CHECK(!solve_linear(a, {Z->from_integer(1), Z->from_integer(1)}).has_value());

    // underdetermined systems pick some exact solution
    for (const auto& R : {Ring::integers(), Ring::residue(8)}) {
        for (int t = 0; t < 20; ++t) {
            auto m = random_matrix(R, 2, 4, rng);
            std::vector<Element> x0;
            for (int j = 0; j < 4; ++j) x0.push_back(random_element(R, rng));
            std::vector<Element> target;
            for (int i = 0; i < 2; ++i) {
                Element s = R->zero();
                for (int j = 0; j < 4; ++j) s = s + m.at(i, j) * x0[j];
                target.push_back(s);
            }
            auto s = solve_linear(m, target);
            REQUIRE(s.has_value());
            for (int i = 0; i < 2; ++i) {
                Element acc = R->zero();
                for (int j = 0; j < 4; ++j) acc = acc + m.at(i, j) * (*s)[j];
                CHECK(acc == target[i]);
            }
        }
    }

    // modular variant: solve 2x = 4 (mod 8) over Z
    Matrix one_by_one(Z, 1, 1);
    one_by_one.set(0, 0, Z->from_integer(2));
    auto ms = solve_linear_mod(one_by_one, {Z->from_integer(12)}, {Z->from_integer(8)});
    REQUIRE(ms.has_value());
    CHECK(mod_ideal((*ms)[0] * Z->from_integer(2) - Z->from_integer(12), Z->from_integer(8)).is_zero());
}

TEST_CASE("solve_linear over products") {
    auto P = Ring::product({Ring::residue(4), Ring::residue(9)});
    for (int t = 0; t < 10; ++t) {
        auto m = random_matrix(P, 2, 3, rng);
        std::vector<Element> x0;
        for (int j = 0; j < 3; ++j) x0.push_back(random_element(P, rng));
        std::vector<Element> target;
        for (int i = 0; i < 2; ++i) {
            Element s = P->zero();
            for (int j = 0; j < 3; ++j) s = s + m.at(i, j) * x0[j];
            target.push_back(s);
        }
        auto s = solve_linear(m, target);
        REQUIRE(s.has_value());
        for (int i = 0; i < 2; ++i) {
            Element acc = P->zero();
            for (int j = 0; j < 3; ++j) acc = acc + m.at(i, j) * (*s)[j];
            CHECK(acc == target[i]);
        }
    }
}
