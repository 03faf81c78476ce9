#include "superschur/polynomial.hpp"

#include "superschur/json_io.hpp"
#include "superschur/tableau.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace superschur;

namespace {

SparsePolynomial var(int i, int dims) {
    SparsePolynomial::Exponent e(dims, 0);
    e[i] = 1;
    return SparsePolynomial::monomial(e, 1);
}

// the worked example S_(2,1,1)(x1,x2;y1)
SparsePolynomial golden_polynomial() {
    SparsePolynomial p(3);
    p.add_term({2, 1, 1}, 1);
    p.add_term({1, 2, 1}, 1);
    p.add_term({2, 0, 2}, 1);
    p.add_term({1, 1, 2}, 2);
    p.add_term({0, 2, 2}, 1);
    p.add_term({1, 0, 3}, 1);
    p.add_term({0, 1, 3}, 1);
    return p;
}

} // namespace

TEST_CASE("ring operations") {
    const auto x1 = var(0, 2), x2 = var(1, 2);
    SparsePolynomial expect(2);
    expect.add_term({2, 0}, 1);
    expect.add_term({1, 1}, 1);
    CHECK(x1 * (x1 + x2) == expect);

    const auto p = x1 + x2;
    CHECK((p - p).is_zero());
    CHECK(p + (-p) == SparsePolynomial::zero(2));

    SparsePolynomial sq(2);
    sq.add_term({2, 0}, 1);
    sq.add_term({1, 1}, 2);
    sq.add_term({0, 2}, 1);
    CHECK(p * p == sq);

    CHECK_THROWS_AS(x1 + var(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(x1 * var(0, 3), std::invalid_argument);
}

TEST_CASE("support") {
    const auto supp = golden_polynomial().support();
    CHECK(supp.size() == 7);
    CHECK(std::find(supp.begin(), supp.end(), std::vector<int>{1, 1, 2}) != supp.end());
    CHECK(SparsePolynomial::zero(3).support().empty());
    const auto s2 = (var(0, 2) + var(1, 2)).support();
    CHECK(s2 == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("complete homogeneous") {
    CHECK(h_complete(1, 2) == var(0, 2) + var(1, 2));
    CHECK(h_complete(0, 2) == SparsePolynomial::constant(2, 1));
    SparsePolynomial h2(2);
    h2.add_term({2, 0}, 1);
    h2.add_term({1, 1}, 1);
    h2.add_term({0, 2}, 1);
    CHECK(h_complete(2, 2) == h2);
    CHECK(h_complete(3, 0).is_zero());
}

TEST_CASE("elementary symmetric") {
    CHECK(e_elementary(1, 2) == var(0, 2) + var(1, 2));
    CHECK(e_elementary(3, 2).is_zero());
    SparsePolynomial e2(2);
    e2.add_term({1, 1}, 1);
    CHECK(e_elementary(2, 2) == e2);
    CHECK(e_elementary(0, 0) == SparsePolynomial::constant(0, 1));
}

TEST_CASE("h_super") {
    CHECK(h_super(1, 2, 1) == var(0, 3) + var(1, 3) + var(2, 3));
    CHECK(h_super(-2, 2, 1).is_zero());
    CHECK(h_super(0, 2, 1) == SparsePolynomial::constant(3, 1));
}

TEST_CASE("schur_super_tableau golden example") {
    CHECK(schur_super_tableau(Partition({2, 1, 1}), 2, 1) == golden_polynomial());
    CHECK(schur_super_tableau(Partition(), 3, 2) == SparsePolynomial::constant(5, 1));
    CHECK(schur_super_tableau(Partition({1}), 1, 1) == var(0, 2) + var(1, 2));
}

TEST_CASE("schur_super_det") {
    CHECK(schur_super_det(Partition({2, 1, 1}), 2, 1) == golden_polynomial());
    CHECK(schur_super_det(Partition({1}), 2, 1) == h_super(1, 2, 1));
    CHECK(schur_super_det(Partition({2, 2}), 2, 2) ==
          schur_super_tableau(Partition({2, 2}), 2, 2));
    CHECK(schur_super_det(Partition(), 2, 1) == SparsePolynomial::constant(3, 1));
}

TEST_CASE("schur_classical") {
    CHECK(schur_classical(Partition({1}), 2) == var(0, 2) + var(1, 2));
    CHECK(schur_classical(Partition({2}), 2) == h_complete(2, 2));
    CHECK(schur_classical(Partition({1, 1, 1}), 2).is_zero());
}

TEST_CASE("schur_skew") {
    CHECK(schur_skew(Partition({1}), Partition(), 2) == var(0, 2) + var(1, 2));
    SparsePolynomial expect(2);
    expect.add_term({2, 0}, 1);
    expect.add_term({1, 1}, 2);
    expect.add_term({0, 2}, 1);
    CHECK(schur_skew(Partition({2, 1}), Partition({1}), 2) == expect);
    CHECK(schur_skew(Partition({2, 1}), Partition({2, 1}), 3) ==
          SparsePolynomial::constant(3, 1));
    CHECK_THROWS_AS(schur_skew(Partition({1}), Partition({2}), 2), std::invalid_argument);
}

TEST_CASE("check_expansion") {
    CHECK(check_expansion(Partition({2, 1, 1}), 2, 1));
    CHECK(check_expansion(Partition(), 1, 1));
    CHECK(check_expansion(Partition({2, 2}), 2, 2));
}

TEST_CASE("check_cancellation") {
    CHECK(check_cancellation(schur_super_tableau(Partition({2, 1, 1}), 2, 1), 2, 1));
    SparsePolynomial xy(2);
    xy.add_term({1, 1}, 1);
    CHECK_FALSE(check_cancellation(xy, 1, 1));
    CHECK(check_cancellation(SparsePolynomial::constant(2, 1), 1, 1));
}

TEST_CASE("check_bisymmetry") {
    CHECK(check_bisymmetry(golden_polynomial(), 2, 1));
    CHECK_FALSE(check_bisymmetry(var(0, 2), 2, 0));
    SparsePolynomial any(2);
    any.add_term({3, 1}, 5);
    CHECK(check_bisymmetry(any, 1, 1)); // no nontrivial transpositions
}

TEST_CASE("tableau and determinant routes agree over the small sweep") {
    for (const auto& lam : partitions_up_to(6))
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                if (k == 0 && l == 0) continue;
                if (!is_hook(lam, k, l)) continue;
                const auto pt = schur_super_tableau(lam, k, l);
                CHECK(pt == schur_super_det(lam, k, l));
                for (const auto& [e, c] : pt.terms()) CHECK(c > 0);
                CHECK(pt.evaluate_ones() == count_tableaux(lam, k, l));
            }
}

TEST_CASE("supersymmetry properties over the small sweep") {
    for (const auto& lam : partitions_up_to(6))
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
                if (!is_hook(lam, k, l)) continue;
                const auto p = schur_super_tableau(lam, k, l);
                CHECK(check_bisymmetry(p, k, l));
                CHECK(check_cancellation(p, k, l));
                CHECK(check_expansion(lam, k, l));
            }
}

TEST_CASE("polynomial json round trip") {
    const auto p = golden_polynomial();
    const auto j = to_json(p);
    CHECK(j["dims"] == 3);
    CHECK(j["terms"].size() == 7);
    CHECK(j["terms"][0]["exp"] == ojson::array({0, 1, 3}));
    CHECK(j["terms"][0]["coef"] == "1");
    CHECK(polynomial_from_json(j) == p);
    CHECK(polynomial_from_json(to_json(SparsePolynomial::zero(4))) ==
          SparsePolynomial::zero(4));
}
