#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "real_schubert/tableaux.hpp"

using namespace real_schubert;

namespace {

// Skew shapes outer/inner inside the n×n box with at most `limit` boxes.
std::vector<SkewShape> skews_in_box(int n, int limit, bool symmetric_only) {
    const auto pool = symmetric_only ? symmetric_partitions_in_box(n) : partitions_in_box(n, n);
    std::vector<SkewShape> out;
    for (const auto& outer : pool)
        for (const auto& inner : pool)
            if (outer.contains(inner) && weight(outer) - weight(inner) <= limit && weight(outer) > weight(inner))
                out.emplace_back(outer, inner, n, n);
    return out;
}

}  // namespace

TEST_CASE("tableau counts match the corner-removal recursion") {
    for (const auto& shape : skews_in_box(4, 12, false)) {
        const BigInt expected = oracle::syt_count(shape.outer(), shape.inner());
        CHECK(count_syt(shape) == expected);
        CHECK(BigInt(enumerate_syt(shape).size()) == expected);
    }
}

TEST_CASE("straight shapes follow the hook formula") {
    for (const auto& p : partitions_in_box(5, 5)) {
        if (p.empty()) continue;
        CHECK(count_syt(SkewShape(p, Partition{}, 5, 5)) == oracle::hook_count(p));
    }
    CHECK(count_syt(complement_skew(Partition{}, Partition{}, 3)) == 42);
}

TEST_CASE("the largest degree-zero problem on Gr(7,14)") {
    CHECK(count_syt(complement_skew(Partition{5, 4, 2, 2, 1}, Partition{6, 5, 2, 2, 2, 1}, 7)) == 843201530);
    CHECK(count_syt(complement_skew(Partition{3, 2, 1}, Partition{3, 3, 2}, 5)) == 40370);
}

TEST_CASE("enumerated tableaux are standard and distinct") {
    const SkewShape shape(Partition{3, 3, 2}, Partition{1}, 3, 3);
    const auto all = enumerate_syt(shape);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& t : all) {
        seen.insert(t.entries);
        for (auto [i, j] : shape.cells()) {
            if (shape.contains({i, j + 1})) CHECK(t.at({i, j}) < t.at({i, j + 1}));
            if (shape.contains({i + 1, j})) CHECK(t.at({i, j}) < t.at({i + 1, j}));
        }
    }
    CHECK(seen.size() == all.size());
    CHECK_THROWS_AS(enumerate_syt(complement_skew(Partition{}, Partition{}, 5)), std::length_error);
}

TEST_CASE("sign-imbalance against brute force over orderings") {
    for (const auto& shape : skews_in_box(3, 8, false)) {
        const auto [count, signed_sum] = oracle::brute_sign_sum(shape.cells());
        CHECK(count_syt(shape) == count);
        CHECK(sign_imbalance(shape) == std::abs(signed_sum));
    }
    CHECK(sign_imbalance(SkewShape(Partition{1}, Partition{}, 1, 1)) == 1);
    CHECK(sign_imbalance(complement_skew(Partition{}, Partition{}, 3)) == 0);
}

TEST_CASE("sign-imbalance does not depend on the reference order") {
    for (const auto& shape : skews_in_box(3, 8, false)) {
        auto column_order = shape.cells();
        std::sort(column_order.begin(), column_order.end(),
                  [](Cell a, Cell b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
        long sum = 0;
        for (const auto& t : enumerate_syt(shape)) sum += tableau_sign(t, column_order);
        CHECK(sign_imbalance(shape) == std::abs(sum));
    }
}

TEST_CASE("symmetric skew shapes") {
    int odd_shapes = 0;
    for (const auto& shape : skews_in_box(5, 12, true)) {
        CHECK(shape.is_symmetric());
        if (shape.size() > 1) {
            CHECK(count_syt(shape) % 2 == 0);
            // Transposition is a fixed-point-free involution on the tableaux.
            const auto all = enumerate_syt(shape);
            std::set<std::vector<std::vector<int>>> entries;
            for (const auto& t : all) entries.insert(t.entries);
            for (const auto& t : all) {
                const auto u = transpose_tableau(t);
                CHECK(entries.count(u.entries) == 1);
                CHECK(!(u == t));
                CHECK(transpose_tableau(u) == t);
            }
        }
        if (shape.boxes_above_diagonal() % 2 == 1) {
            CHECK(sign_imbalance(shape) == 0);
            ++odd_shapes;
        }
    }
    CHECK(odd_shapes > 0);
}

TEST_CASE("sign-imbalance of the two m=4 skew shapes") {
    const auto a = complement_skew(Partition{3, 3, 2}, Partition{}, 4);
    const auto b = complement_skew(Partition{3, 1, 1}, Partition{2, 1}, 4);
    CHECK(a.boxes_above_diagonal() % 2 == 1);
    CHECK(b.boxes_above_diagonal() % 2 == 1);
    CHECK(sign_imbalance(a) == 0);
    CHECK(sign_imbalance(b) == 0);
}
