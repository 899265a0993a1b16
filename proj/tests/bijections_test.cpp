#include "countable/bijections.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

namespace {

using namespace countable;

// Independent oracle: walk the diagonals step by step, collecting cells in
// visit order. Even diagonals start at the top row and step down-left, odd
// diagonals start at the left column and step up-right.
std::vector<GridPosition> serpentine_walk(int diagonals) {
    std::vector<GridPosition> order;
    for (int d = 1; d <= diagonals; ++d) {
        int row = d % 2 == 0 ? 1 : d;
        int col = d % 2 == 0 ? d : 1;
        for (int step = 0; step < d; ++step) {
            order.push_back({Natural(row), Natural(col)});
            if (d % 2 == 0) {
                ++row;
                --col;
            } else {
                --row;
                ++col;
            }
        }
    }
    return order;
}

TEST_CASE("to_even doubles, from_even halves") {
    CHECK(to_even(Natural(9)) == Natural(18));
    CHECK(to_even(Natural(1)) == Natural(2));
    CHECK(to_even(Natural(1000)) == Natural(2000));
    CHECK(from_even(Natural(18)) == Natural(9));
    CHECK(from_even(Natural(2)) == Natural(1));
    CHECK_THROWS_AS(from_even(Natural(7)), not_in_domain);
}

TEST_CASE("to_whole shifts down by one") {
    CHECK(to_whole(Natural(1)) == Whole(0));
    CHECK(to_whole(Natural(9)) == Whole(8));
    BigInt million = 1000000;
    CHECK(to_whole(Natural(million)) == Whole(million - 1));
    CHECK(from_whole(Whole(0)) == Natural(1));
    CHECK(from_whole(Whole(8)) == Natural(9));
}

TEST_CASE("to_integer follows the even/odd rule") {
    CHECK(to_integer(Natural(4)) == Integer(2));
    CHECK(to_integer(Natural(9)) == Integer(-4));
    CHECK(to_integer(Natural(1)) == Integer(0));
    CHECK(from_integer(Integer(2)) == Natural(4));
    CHECK(from_integer(Integer(-4)) == Natural(9));
    CHECK(from_integer(Integer(0)) == Natural(1));
}

TEST_CASE("to_integer reaches every integer in a window") {
    std::set<BigInt> seen;
    for (BigInt n = 1; n <= 20001; ++n) seen.insert(to_integer(Natural(n)).value());
    bool all_covered = true;
    for (BigInt z = -10000; z <= 10000; ++z) {
        if (seen.count(z) != 1) all_covered = false;
    }
    CHECK(all_covered);
}

TEST_CASE("to_odd enumerates 1, 3, 5, 7, ...") {
    // Brute-force listing of the odd numbers.
    std::vector<BigInt> odds;
    for (BigInt v = 1; odds.size() < 10; ++v) {
        if (v % 2 != 0) odds.push_back(v);
    }
    CHECK(to_odd(Natural(1)).value() == odds[0]);
    CHECK(to_odd(Natural(4)).value() == odds[3]);
    CHECK(to_odd(Natural(10)).value() == odds[9]);
    CHECK(to_odd(Natural(1)) == Natural(1));
    CHECK(to_odd(Natural(4)) == Natural(7));
    CHECK(to_odd(Natural(10)) == Natural(19));
    CHECK(from_odd(Natural(19)) == Natural(10));
    CHECK_THROWS_AS(from_odd(Natural(6)), not_in_domain);
}

TEST_CASE("pair_index matches the figure's walk") {
    CHECK(pair_index({Natural(1), Natural(1)}) == Natural(1));
    CHECK(pair_index({Natural(2), Natural(1)}) == Natural(3));
    CHECK(pair_index({Natural(4), Natural(1)}) == Natural(10));
}

TEST_CASE("unpair matches the figure's walk") {
    CHECK(unpair(Natural(1)) == GridPosition{Natural(1), Natural(1)});
    CHECK(unpair(Natural(5)) == GridPosition{Natural(2), Natural(2)});
    CHECK(unpair(Natural(7)) == GridPosition{Natural(1), Natural(4)});
}

TEST_CASE("pair_index and unpair agree with the walk oracle") {
    std::vector<GridPosition> order = serpentine_walk(40);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Natural index(BigInt(i) + 1);
        CHECK(pair_index(order[i]) == index);
        CHECK(unpair(index) == order[i]);
    }
}

TEST_CASE("roundtrip identities hold on a sample window") {
    for (BigInt v = 1; v <= 2000; ++v) {
        Natural n(v);
        CHECK(from_even(to_even(n)) == n);
        CHECK(from_whole(to_whole(n)) == n);
        CHECK(from_integer(to_integer(n)) == n);
        CHECK(from_odd(to_odd(n)) == n);
        CHECK(pair_index(unpair(n)) == n);
    }
}

TEST_CASE("unpair lands on the diagonal bracketing its index") {
    for (BigInt v = 1; v <= 2000; ++v) {
        GridPosition cell = unpair(Natural(v));
        BigInt d = cell.row.value() + cell.col.value() - 1;
        CHECK(d * (d - 1) / 2 < v);
        CHECK(v <= d * (d + 1) / 2);
    }
}

TEST_CASE("each diagonal fills a contiguous index range") {
    for (BigInt d = 1; d <= 50; ++d) {
        std::set<BigInt> indices;
        for (BigInt row = 1; row <= d; ++row) {
            BigInt col = d + 1 - row;
            indices.insert(pair_index({Natural(row), Natural(col)}).value());
        }
        REQUIRE(indices.size() == d.convert_to<std::size_t>());
        CHECK(*indices.begin() == d * (d - 1) / 2 + 1);
        CHECK(*indices.rbegin() == d * (d + 1) / 2);
    }
}

}  // namespace
