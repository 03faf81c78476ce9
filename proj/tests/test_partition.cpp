#include "superschur/partition.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace superschur;

namespace {

// all partitions with at most `rows` parts, each at most `width`
std::vector<Partition> partitions_in_box(int rows, int width) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxp) -> void {
        out.emplace_back(cur);
        if (row == rows) return;
        for (int p = 1; p <= maxp; ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    // descending per level keeps parts weakly decreasing
    auto rec2 = [&](auto&& self, int row, int maxp) -> void {
        out.emplace_back(cur);
        if (row == rows) return;
        for (int p = maxp; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    (void)rec;
    rec2(rec2, 0, width);
    return out;
}

} // namespace

TEST_CASE("canonical form and validation") {
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK(Partition(std::vector<int>{}) == Partition());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("from_string") {
    CHECK(Partition::from_string("2,1,1") == Partition({2, 1, 1}));
    CHECK(Partition::from_string("") == Partition());
    CHECK_THROWS_AS(Partition::from_string("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string("2,,1"), std::invalid_argument);
}

TEST_CASE("size") {
    CHECK(Partition({2, 1, 1}).size() == 4);
    CHECK(Partition().size() == 0);
    CHECK(Partition({3, 3, 1}).size() == 7);
}

TEST_CASE("conjugate") {
    CHECK(Partition({2, 1, 1}).conjugate() == Partition({3, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({3, 3, 1}).conjugate() == Partition({3, 2, 2}));
}

TEST_CASE("conjugate involution and size preservation on the 8x8 box") {
    for (const auto& lam : partitions_in_box(8, 8)) {
        CHECK(lam.conjugate().conjugate() == lam);
        CHECK(lam.conjugate().size() == lam.size());
    }
}

TEST_CASE("is_hook") {
    CHECK(is_hook(Partition({2, 1, 1}), 2, 1));
    CHECK(is_hook(Partition({3, 3, 1}), 3, 2));
    CHECK_FALSE(is_hook(Partition({2, 2, 2}), 1, 1));
}

TEST_CASE("is_hook monotone in k and l") {
    for (const auto& lam : partitions_up_to(8))
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; l <= 4; ++l)
                if (is_hook(lam, k, l)) {
                    CHECK(is_hook(lam, k + 1, l));
                    CHECK(is_hook(lam, k, l + 1));
                }
}

TEST_CASE("row_prefix_sums") {
    CHECK(row_prefix_sums(Partition({2, 1, 1}), 2) == std::vector<long long>{2, 3});
    CHECK(row_prefix_sums(Partition({2, 1, 1}), 4) == std::vector<long long>{2, 3, 4, 4});
    CHECK(row_prefix_sums(Partition(), 2) == std::vector<long long>{0, 0});
    for (const auto& lam : partitions_up_to(6)) {
        if (lam.empty()) continue;
        CHECK(row_prefix_sums(lam, lam.length()).back() == lam.size());
    }
}

TEST_CASE("col_prefix_sums") {
    CHECK(col_prefix_sums(Partition({2, 1, 1}), 1) == std::vector<long long>{3});
    CHECK(col_prefix_sums(Partition({3, 3, 1}), 2) == std::vector<long long>{3, 5});
    CHECK(col_prefix_sums(Partition(), 3) == std::vector<long long>{0, 0, 0});
}

TEST_CASE("contains") {
    CHECK(contains(Partition({1}), Partition({2, 1, 1})));
    CHECK_FALSE(contains(Partition({2, 2}), Partition({2, 1, 1})));
    for (const auto& lam : partitions_up_to(5)) CHECK(contains(Partition(), lam));
}

TEST_CASE("dominates") {
    CHECK(dominates(Partition({2, 1, 1}), Partition({1, 1, 1, 1})));
    CHECK_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
    for (const auto& lam : partitions_up_to(5)) CHECK(dominates(lam, lam));
}

TEST_CASE("containment implies domination") {
    const auto all = partitions_up_to(6);
    for (const auto& mu : all)
        for (const auto& lam : all)
            if (contains(mu, lam)) CHECK(dominates(lam, mu));
}

TEST_CASE("hook_region_cells") {
    const Partition box22({2, 2});
    CHECK(hook_region_cells(box22, 1, 0) == 2);
    CHECK(hook_region_cells(box22, 0, 1) == 2);
    CHECK(hook_region_cells(box22, 1, 1) == 3);
    CHECK(hook_region_cells(box22, 2, 2) == 4);
    const Partition lam({2, 1, 1});
    CHECK(hook_region_cells(lam, 1, 1) == 4);
    CHECK(hook_region_cells(lam, 2, 0) == 3);
    CHECK(hook_region_cells(lam, 0, 1) == 3);
    // the whole diagram sits inside the (k,l)-hook region exactly for hook shapes
    for (const auto& p : partitions_up_to(6))
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= 3; ++l)
                CHECK((hook_region_cells(p, k, l) == p.size()) == is_hook(p, k, l));
}

TEST_CASE("generators") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_up_to(3).size() == 7);
    CHECK(subpartitions(Partition({2, 1})).size() == 5);
    CHECK(subpartitions(Partition()).size() == 1);
}
