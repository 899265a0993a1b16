#include "countable/enumeration.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

using namespace countable;

TEST_CASE("evens pairs n with 2n") {
    auto e = evens();
    CHECK(e.at(Natural(3)) == Natural(6));
    CHECK(e.index_of(Natural(18)) == Natural(9));
    CHECK_THROWS_AS(e.index_of(Natural(7)), not_in_domain);
    CHECK_FALSE(e.try_index_of(Natural(7)).has_value());
}

TEST_CASE("prepend_finite shifts the rest behind the front") {
    auto n0 = wholes();
    CHECK(n0.at(Natural(1)) == Whole(0));
    CHECK(n0.at(Natural(9)) == Whole(8));
    CHECK(n0.index_of(Whole(0)) == Natural(1));
    CHECK(n0.index_of(Whole(8)) == Natural(9));

    // An empty front behaves as the underlying enumeration.
    auto same = prepend_finite<Natural>({}, naturals());
    for (BigInt v = 1; v <= 50; ++v) {
        CHECK(same.at(Natural(v)) == Natural(v));
        CHECK(same.index_of(Natural(v)) == Natural(v));
    }
}

TEST_CASE("wholes agrees with the to_whole pairing") {
    auto n0 = wholes();
    for (BigInt v = 1; v <= 300; ++v) {
        CHECK(n0.at(Natural(v)) == to_whole(Natural(v)));
    }
}

TEST_CASE("prepend_finite rejects duplicate or overlapping fronts") {
    CHECK_THROWS_AS(prepend_finite<Natural>({Natural(5), Natural(5)}, evens()), domain_error);
    CHECK_THROWS_AS(prepend_finite<Natural>({Natural(4)}, evens()), domain_error);
    CHECK_NOTHROW(prepend_finite<Natural>({Natural(5)}, evens()));
}

TEST_CASE("interleave alternates the two sides") {
    auto z = integers();
    CHECK(z.at(Natural(1)) == Integer(0));
    CHECK(z.at(Natural(4)) == Integer(2));
    CHECK(z.at(Natural(5)) == Integer(-2));
    CHECK(z.index_of(Integer(-2)) == Natural(5));

    // The enumeration is the to_integer pairing, point for point.
    for (BigInt v = 1; v <= 1000; ++v) {
        CHECK(z.at(Natural(v)) == to_integer(Natural(v)));
        CHECK(z.index_of(to_integer(Natural(v))) == Natural(v));
    }
}

TEST_CASE("interleaving odds and evens reassembles the naturals") {
    auto reassembled = interleave(odds(), evens());
    for (BigInt v = 1; v <= 1000; ++v) {
        CHECK(reassembled.at(Natural(v)) == Natural(v));
    }
}

TEST_CASE("interleave takes equally from both sides") {
    auto a = odds();
    auto b = evens();
    auto mixed = interleave(a, b);
    for (BigInt k = 1; k <= 200; ++k) {
        CHECK(mixed.at(Natural(2 * k - 1)) == a.at(Natural(k)));
        CHECK(mixed.at(Natural(2 * k)) == b.at(Natural(k)));
    }
}

TEST_CASE("product walks the serpentine grid") {
    auto grid = product(naturals(), naturals());
    CHECK(grid.at(Natural(1)) == std::pair(Natural(1), Natural(1)));
    CHECK(grid.at(Natural(5)) == std::pair(Natural(2), Natural(2)));
    CHECK(grid.at(Natural(10)) == std::pair(Natural(4), Natural(1)));
    for (BigInt v = 1; v <= 2000; ++v) {
        CHECK(grid.index_of(grid.at(Natural(v))) == Natural(v));
    }
}

TEST_CASE("filter_reindex renumbers the kept elements") {
    auto cells = reduced_grid_positions();
    CHECK(cells.at(Natural(5)) == GridPosition{Natural(1), Natural(3)});
    CHECK(cells.at(Natural(9)) == GridPosition{Natural(4), Natural(1)});

    // An element failing the predicate is rejected without scanning.
    CHECK_THROWS_AS(cells.index_of(GridPosition{Natural(2), Natural(4)}), not_in_domain);

    // keep = always-true is the identity reindexing.
    auto all = filter_reindex(evens(), [](const Natural&) { return true; }, "all-evens");
    for (BigInt v = 1; v <= 100; ++v) {
        CHECK(all.at(Natural(v)) == to_even(Natural(v)));
        CHECK(all.index_of(to_even(Natural(v))) == Natural(v));
    }
}

TEST_CASE("rationals_positive reproduces the worked prefix") {
    auto q = rationals_positive();
    std::vector<std::string> expected = {"1/1", "1/2", "2/1", "3/1", "1/3",
                                         "1/4", "2/3", "3/2", "4/1"};
    auto prefix = q.take(9);
    REQUIRE(prefix.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(to_string(prefix[i]) == expected[i]);
    }
    CHECK(q.index_of(make_rational(2, 3)) == Natural(7));
    // 2/4 normalizes to 1/2 at the value level; the unreduced cell itself is
    // rejected by the filtered grid (see above).
    CHECK(q.index_of(make_rational(2, 4)) == Natural(2));
    CHECK_THROWS_AS(q.index_of(make_rational(-1, 2)), not_in_domain);
    CHECK_THROWS_AS(q.index_of(make_rational(0, 1)), not_in_domain);
}

TEST_CASE("rationals_all starts at zero and alternates signs") {
    auto q = rationals_all();
    CHECK(to_string(q.at(Natural(1))) == "0/1");
    CHECK(to_string(q.at(Natural(2))) == "1/1");
    CHECK(to_string(q.at(Natural(3))) == "-1/1");

    auto positive = rationals_positive();
    CHECK(q.index_of(make_rational(-1, 2)) ==
          Natural(2 * positive.index_of(make_rational(1, 2)).value() + 1));

    // Brute-force cross-check of the index rule over a prefix.
    for (BigInt v = 1; v <= 10000; ++v) {
        Rational element = q.at(Natural(v));
        if (element.is_zero()) {
            CHECK(v == 1);
            continue;
        }
        Natural base = positive.index_of(element.is_negative() ? -element : element);
        BigInt expected = 2 * base.value() + (element.is_negative() ? 1 : 0);
        CHECK(v == expected);
    }
}

TEST_CASE("exposed enumerations roundtrip and stay distinct") {
    auto q = rationals_positive();
    std::set<std::string> seen;
    for (BigInt v = 1; v <= 2000; ++v) {
        Rational element = q.at(Natural(v));
        CHECK(q.index_of(element) == Natural(v));
        seen.insert(to_string(element));
    }
    CHECK(seen.size() == 2000);
}

template <class T>
bool roundtrips_to(const Enumeration<T>& enumeration, BigInt limit) {
    for (BigInt v = 1; v <= limit; ++v) {
        Natural index(v);
        if (!(enumeration.index_of(enumeration.at(index)) == index)) return false;
    }
    return true;
}

TEST_CASE("index_of inverts at over the first 10^4 indices everywhere") {
    CHECK(roundtrips_to(evens(), 10000));
    CHECK(roundtrips_to(odds(), 10000));
    CHECK(roundtrips_to(wholes(), 10000));
    CHECK(roundtrips_to(integers(), 10000));
    CHECK(roundtrips_to(product(naturals(), naturals()), 10000));
    CHECK(roundtrips_to(rationals_positive(), 10000));
    CHECK(roundtrips_to(rationals_all(), 10000));
}

TEST_CASE("filtering never pushes an element past its raw grid index") {
    auto q = rationals_positive();
    for (BigInt p = 1; p <= 12; ++p) {
        for (BigInt den = 1; den <= 12; ++den) {
            if (detail::gcd_nonneg(p, den) != 1) continue;
            Natural raw = pair_index({Natural(p), Natural(den)});
            CHECK(q.index_of(make_rational(Integer(p), Integer(den))) <= raw);
        }
    }
}

TEST_CASE("concurrent queries agree with sequential answers") {
    auto shared = rationals_positive();
    auto sequential = rationals_positive();
    std::vector<Rational> expected;
    for (BigInt v = 1; v <= 400; ++v) expected.push_back(sequential.at(Natural(v)));

    std::vector<std::thread> workers;
    std::vector<int> failures(4, 0);
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (BigInt v = 1 + t; v <= 400; v += 4) {
                std::size_t i = v.convert_to<std::size_t>() - 1;
                if (!(shared.at(Natural(v)) == expected[i])) ++failures[t];
                if (!(shared.index_of(expected[i]) == Natural(v))) ++failures[t];
            }
        });
    }
    for (auto& worker : workers) worker.join();
    CHECK(failures == std::vector<int>(4, 0));
}

}  // namespace
