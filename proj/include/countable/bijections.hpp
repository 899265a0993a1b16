#pragma once

/// The explicit pairing rules between N and E, N0, Z and the grid of
/// fractions, each a total invertible function on exact values.

#include "countable/numbers.hpp"

namespace countable {

inline Natural to_even(const Natural& n) { return Natural(2 * n.value()); }

inline Natural from_even(const Natural& even_number) {
    if (even_number.value() % 2 != 0) {
        throw not_in_domain(to_string(even_number) + " is not even");
    }
    return Natural(even_number.value() / 2);
}

inline Whole to_whole(const Natural& n) { return Whole(n.value() - 1); }

inline Natural from_whole(const Whole& w) { return Natural(w.value() + 1); }

/// Even positions are halved, odd positions map to zero and the negatives:
/// 1, 2, 3, 4, 5, ... pairs with 0, 1, -1, 2, -2, ...
inline Integer to_integer(const Natural& n) {
    const BigInt& v = n.value();
    if (v % 2 == 0) return Integer(v / 2);
    return Integer(-((v - 1) / 2));
}

/// Exact inverse of to_integer; zero maps to 1, the head of the scheme.
inline Natural from_integer(const Integer& z) {
    const BigInt& v = z.value();
    if (v > 0) return Natural(2 * v);
    if (v < 0) return Natural(2 * -v + 1);
    return Natural(BigInt(1));
}

inline Natural to_odd(const Natural& n) { return Natural(2 * n.value() - 1); }

inline Natural from_odd(const Natural& odd_number) {
    if (odd_number.value() % 2 == 0) {
        throw not_in_domain(to_string(odd_number) + " is not odd");
    }
    return Natural((odd_number.value() + 1) / 2);
}

/// A cell of the infinite fraction grid; (row, col) holds row/col.
struct GridPosition {
    Natural row;
    Natural col;

    friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

inline std::string to_string(const GridPosition& p) {
    return "(" + to_string(p.row) + ", " + to_string(p.col) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GridPosition& p) {
    return os << to_string(p);
}

/// 1-based visit order of the serpentine diagonal walk. Diagonal d holds the
/// cells with row + col - 1 = d; even diagonals run from the top row
/// down-left, odd diagonals from the left column up-right.
inline Natural pair_index(const GridPosition& position) {
    BigInt d = position.row.value() + position.col.value() - 1;
    BigInt before = d * (d - 1) / 2;  // cells on diagonals 1 .. d-1
    if (d % 2 == 0) return Natural(before + position.row.value());
    return Natural(before + position.col.value());
}

/// Exact inverse of pair_index.
inline GridPosition unpair(const Natural& index) {
    const BigInt& n = index.value();
    // Smallest d with d(d+1)/2 >= n; the sqrt estimate is off by at most one.
    BigInt discriminant = 8 * n + 1;
    BigInt d = (boost::multiprecision::sqrt(discriminant) - 1) / 2;
    while (d * (d + 1) / 2 < n) ++d;
    while (d > 1 && (d - 1) * d / 2 >= n) --d;
    BigInt k = n - d * (d - 1) / 2;  // 1-based offset within diagonal d
    if (d % 2 == 0) return {Natural(k), Natural(d + 1 - k)};
    return {Natural(d + 1 - k), Natural(k)};
}

}  // namespace countable
