#include <doctest.h>

#include <set>

#include "real_schubert/degrees.hpp"
#include "real_schubert/partition.hpp"

using namespace real_schubert;

namespace {

std::set<Cell> cells_of(const Partition& p) {
    std::set<Cell> out;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j) out.insert({i, j});
    return out;
}

}  // namespace

TEST_CASE("partition text form") {
    CHECK(Partition::parse("3.1.1").parts() == std::vector<int>{3, 1, 1});
    CHECK(Partition::parse("0").empty());
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("2.1.0") == Partition{2, 1});
    CHECK(Partition{}.to_string() == "0");
    CHECK_THROWS_AS(Partition::parse("1.2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2.-1"), std::invalid_argument);
    for (const auto& p : partitions_in_box(4, 4)) CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("box enumeration sizes") {
    // C(r+c, r) lattice paths.
    CHECK(partitions_in_box(3, 3).size() == 20);
    CHECK(partitions_in_box(4, 5).size() == 126);
    for (int n = 1; n <= 5; ++n) {
        const auto sym = symmetric_partitions_in_box(n);
        CHECK(sym.size() == (std::size_t{1} << n));
        for (const auto& p : sym) CHECK(is_symmetric(p));
    }
}

TEST_CASE("transpose agrees with reflected cell sets") {
    for (const auto& p : partitions_in_box(5, 5)) {
        std::set<Cell> reflected;
        for (auto [i, j] : cells_of(p)) reflected.insert({j, i});
        CHECK(cells_of(transpose(p)) == reflected);
        CHECK(transpose(transpose(p)) == p);
    }
}

TEST_CASE("diagonal length and lagrangian codimension") {
    CHECK(diagonal_length(Partition{3, 1, 1}) == 1);
    CHECK(diagonal_length(Partition{3, 3, 2}) == 2);
    CHECK(diagonal_length(Partition{2, 2}) == 2);
    CHECK(diagonal_length(Partition{}) == 0);
    CHECK(lagrangian_codim(Partition{1}) == 1);
    CHECK(lagrangian_codim(Partition{3, 1, 1}) == 3);
    CHECK(lagrangian_codim(Partition{3, 2, 1}) == 4);
    CHECK(lagrangian_codim(Partition{2, 2}) == 3);
    CHECK_THROWS_AS(lagrangian_codim(Partition{2}), std::invalid_argument);
    for (const auto& p : symmetric_partitions_in_box(5)) CHECK(to_strict(p).sum() == lagrangian_codim(p));
}

TEST_CASE("complement in a box") {
    CHECK(complement(Partition{2, 1}, 3, 3) == Partition{3, 2, 1});
    CHECK(complement(Partition{}, 2, 3) == Partition{3, 3});
    for (const auto& p : partitions_in_box(4, 4)) {
        CHECK(complement(complement(p, 4, 4), 4, 4) == p);
        CHECK(weight(complement(p, 4, 4)) == 16 - weight(p));
    }
}

TEST_CASE("index sets commute with the involution") {
    for (int m = 1; m <= 5; ++m)
        for (const auto& p : partitions_in_box(m, m))
            CHECK(index_involution(index_set(p, m), m) == index_set(transpose(p), m));
    CHECK(index_set(Partition{}, 3) == IndexSet{4, 5, 6});
}

TEST_CASE("skew shapes") {
    const auto full = complement_skew(Partition{}, Partition{}, 3);
    CHECK(full.size() == 9);
    CHECK(full.boxes_above_diagonal() == 3);
    CHECK(full.is_symmetric());
    const auto t40 = complement_skew(Partition{3, 2, 1}, Partition{3, 1, 1}, 4);
    CHECK(t40.size() == 5);
    CHECK(t40.is_symmetric());
    CHECK(complement_skew(Partition{3, 3, 2}, Partition{}, 4).size() == 8);
    CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{3}, 3, 3), std::invalid_argument);
    CHECK(!SkewShape(Partition{2}, Partition{}, 3, 3).is_symmetric());
}
