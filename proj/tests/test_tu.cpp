#include "superschur/tu.hpp"

#include "superschur/errors.hpp"
#include "superschur/hook_system.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace superschur;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

const IntMatrix circulant3 = from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});

} // namespace

TEST_CASE("det_exact") {
    CHECK(det_exact(identity(3)) == 1);
    CHECK(det_exact(circulant3) == 2);
    CHECK(det_exact(from_rows({{1, 0}, {1, 1}})) == 1);
    CHECK(det_exact(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("is_totally_unimodular") {
    CHECK(is_totally_unimodular(from_rows({{1, 0}, {1, 1}})));
    CHECK_FALSE(is_totally_unimodular(circulant3));
    CHECK(is_totally_unimodular(identity(3)));
    CHECK_FALSE(is_totally_unimodular(from_rows({{2}}))); // 1x1 minor above 1
    CHECK_THROWS_AS(is_totally_unimodular(identity(9), 8), cap_exceeded);
}

TEST_CASE("is_interval") {
    const auto sys = build_system(Partition({2, 1, 1}), 2, 1);
    IntMatrix a(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a.at(r, c) = sys.atilde.at(r, c);
    CHECK(is_interval(a));
    CHECK_FALSE(is_interval(from_rows({{1, 0, 1}})));
    CHECK(is_interval(IntMatrix(2, 3))); // all-zero rows have empty blocks
    CHECK_THROWS_AS(is_interval(from_rows({{-1}})), std::invalid_argument);
}

TEST_CASE("is_interval_up_to_column_permutation") {
    CHECK(is_interval_up_to_column_permutation(from_rows({{1, 0, 1}})));
    // the circulant support pattern has no consecutive-ones column order
    CHECK_FALSE(is_interval_up_to_column_permutation(
        from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})));
    CHECK_THROWS_AS(is_interval_up_to_column_permutation(IntMatrix(1, 9)), cap_exceeded);
}

TEST_CASE("row_sign_normalize") {
    CHECK(row_sign_normalize(from_rows({{-1, 0}, {0, 1}}), {-1, 1}) == identity(2));
    const auto m = from_rows({{1, -1}, {0, 1}});
    CHECK(row_sign_normalize(m, {1, 1}) == m);
    CHECK(row_sign_normalize(row_sign_normalize(m, {-1, 1}), {-1, 1}) == m);
    CHECK_THROWS_AS(row_sign_normalize(m, {1}), std::invalid_argument);
    CHECK_THROWS_AS(row_sign_normalize(m, {1, 0}), std::invalid_argument);

    const auto sys = build_system(Partition({2, 1, 1}), 2, 1);
    std::vector<int> signs = {1, 1, 1, 1, -1, -1, -1, -1};
    const auto normalized = row_sign_normalize(sys.atilde, signs);
    for (long long v : normalized.entries) CHECK((v == 0 || v == 1));
}

TEST_CASE("certify_atilde_tu") {
    const auto rep = certify_atilde_tu(Partition({2, 1, 1}), 2, 1);
    CHECK(rep.zero_one_pass);
    CHECK(rep.interval_pass);
    CHECK(rep.exhaustive_checked);
    CHECK(rep.exhaustive_pass);
    CHECK(rep.certified());

    CHECK(certify_atilde_tu(Partition({1}), 1, 0).certified());
    for (const auto& lam : partitions_up_to(4))
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= 3; ++l) {
                if (k == 0 && l == 0) continue;
                if (!is_hook(lam, k, l)) continue;
                CHECK(certify_atilde_tu(lam, k, l).certified());
            }
}

TEST_CASE("interval certificate does not depend on the shape") {
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l) {
            if (k == 0 && l == 0) continue;
            for (const auto& lam : {Partition(), Partition({1}), Partition({2, 1})}) {
                if (!is_hook(lam, k, l)) continue;
                CHECK(certify_atilde_tu(lam, k, l).interval_pass);
            }
        }
}

TEST_CASE("row-sign invariance on random matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dim(1, 5), entry(-1, 1), coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = dim(rng), q = dim(rng);
        IntMatrix m(p, q);
        for (auto& v : m.entries) v = entry(rng);
        std::vector<int> signs(p);
        for (auto& s : signs) s = coin(rng) ? 1 : -1;
        CHECK(is_totally_unimodular(m) == is_totally_unimodular(row_sign_normalize(m, signs)));
    }
}

TEST_CASE("random interval matrices are totally unimodular") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = dim(rng), q = dim(rng);
        IntMatrix m(p, q);
        for (int r = 0; r < p; ++r) {
            std::uniform_int_distribution<int> pos(0, q);
            int a = pos(rng), b = pos(rng);
            if (a > b) std::swap(a, b);
            for (int c = a; c < b; ++c) m.at(r, c) = 1;
        }
        REQUIRE(is_interval(m));
        CHECK(is_totally_unimodular(m));
    }
}

TEST_CASE("integral vertices, the polyhedral consequence of the certificate") {
    for (const auto& lam : partitions_up_to(4))
        for (int k = 1; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                if (!is_hook(lam, k, l)) continue;
                CHECK(certify_atilde_tu(lam, k, l).certified());
                for (const auto& v : enumerate_vertices(build_system(lam, k, l)))
                    for (const auto& x : v)
                        CHECK(boost::multiprecision::denominator(x) == 1);
            }
}
