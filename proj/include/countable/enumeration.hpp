#pragma once

/// Enumerations are bijections between the positive indices 1, 2, 3, ... and
/// a countable domain, evaluable in both directions, plus the combinators
/// needed to assemble the canonical enumerations of E, N0, Z, Q+ and Q.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "countable/bijections.hpp"
#include "countable/numbers.hpp"

namespace countable {

/// `at` is total on indices; `index_of` is partial and answers nullopt (or
/// throws, in the checked form) for elements outside the domain. Copies are
/// cheap and share any internal memoization, which is observationally
/// transparent.
template <class T>
class Enumeration {
public:
    using value_type = T;
    using at_function = std::function<T(const Natural&)>;
    using index_function = std::function<std::optional<Natural>(const T&)>;

    Enumeration(std::string label, at_function at, index_function index_of)
        : label_(std::move(label)), at_(std::move(at)), index_of_(std::move(index_of)) {}

    const std::string& label() const { return label_; }

    T at(const Natural& index) const { return at_(index); }

    std::optional<Natural> try_index_of(const T& element) const { return index_of_(element); }

    Natural index_of(const T& element) const {
        if (auto index = index_of_(element)) return *index;
        throw not_in_domain("element is not in the domain of " + label_);
    }

    bool contains(const T& element) const { return index_of_(element).has_value(); }

    std::vector<T> take(std::size_t count) const {
        std::vector<T> prefix;
        prefix.reserve(count);
        BigInt index = 1;
        for (std::size_t i = 0; i < count; ++i, ++index) prefix.push_back(at_(Natural(index)));
        return prefix;
    }

private:
    std::string label_;
    at_function at_;
    index_function index_of_;
};

inline Enumeration<Natural> naturals() {
    return {"naturals",
            [](const Natural& n) { return n; },
            [](const Natural& n) { return std::optional<Natural>(n); }};
}

inline Enumeration<Natural> evens() {
    return {"evens",
            [](const Natural& n) { return to_even(n); },
            [](const Natural& e) -> std::optional<Natural> {
                if (e.value() % 2 != 0) return std::nullopt;
                return Natural(e.value() / 2);
            }};
}

inline Enumeration<Natural> odds() {
    return {"odds",
            [](const Natural& n) { return to_odd(n); },
            [](const Natural& o) -> std::optional<Natural> {
                if (o.value() % 2 == 0) return std::nullopt;
                return Natural((o.value() + 1) / 2);
            }};
}

/// Places `front` at indices 1 .. len(front) and shifts `rest` behind it.
/// The front elements must be pairwise distinct and outside `rest`.
template <class T>
Enumeration<T> prepend_finite(std::vector<T> front, Enumeration<T> rest) {
    for (std::size_t i = 0; i < front.size(); ++i) {
        for (std::size_t j = i + 1; j < front.size(); ++j) {
            if (front[i] == front[j]) {
                throw domain_error("prepend_finite: front elements must be pairwise distinct");
            }
        }
    }
    for (const T& element : front) {
        if (rest.contains(element)) {
            throw domain_error("prepend_finite: front elements must lie outside " + rest.label());
        }
    }
    auto shared_front = std::make_shared<const std::vector<T>>(std::move(front));
    const BigInt offset = shared_front->size();
    std::string label = "prepend(" + std::to_string(shared_front->size()) + ", " + rest.label() + ")";
    return {std::move(label),
            [shared_front, rest, offset](const Natural& n) -> T {
                if (n.value() <= offset) {
                    return (*shared_front)[n.value().convert_to<std::size_t>() - 1];
                }
                return rest.at(Natural(n.value() - offset));
            },
            [shared_front, rest, offset](const T& element) -> std::optional<Natural> {
                for (std::size_t i = 0; i < shared_front->size(); ++i) {
                    if ((*shared_front)[i] == element) return Natural(BigInt(i) + 1);
                }
                if (auto index = rest.try_index_of(element)) return Natural(index->value() + offset);
                return std::nullopt;
            }};
}

/// at(2k-1) = first.at(k), at(2k) = second.at(k). The two ranges must be
/// disjoint; index_of dispatches to whichever side contains the element.
template <class T>
Enumeration<T> interleave(Enumeration<T> first, Enumeration<T> second) {
    std::string label = "interleave(" + first.label() + ", " + second.label() + ")";
    return {std::move(label),
            [first, second](const Natural& n) -> T {
                const BigInt& v = n.value();
                if (v % 2 == 0) return second.at(Natural(v / 2));
                return first.at(Natural((v + 1) / 2));
            },
            [first, second](const T& element) -> std::optional<Natural> {
                if (auto k = first.try_index_of(element)) return Natural(2 * k->value() - 1);
                if (auto k = second.try_index_of(element)) return Natural(2 * k->value());
                return std::nullopt;
            }};
}

/// Pairs the two domains along the serpentine grid walk: index n lands on
/// cell (row, col) = unpair(n) and carries (rows.at(row), cols.at(col)).
template <class A, class B>
Enumeration<std::pair<A, B>> product(Enumeration<A> rows, Enumeration<B> cols) {
    std::string label = "product(" + rows.label() + " x " + cols.label() + ")";
    return {std::move(label),
            [rows, cols](const Natural& n) {
                GridPosition cell = unpair(n);
                return std::pair<A, B>(rows.at(cell.row), cols.at(cell.col));
            },
            [rows, cols](const std::pair<A, B>& element) -> std::optional<Natural> {
                auto row = rows.try_index_of(element.first);
                if (!row) return std::nullopt;
                auto col = cols.try_index_of(element.second);
                if (!col) return std::nullopt;
                return pair_index({*row, *col});
            }};
}

/// Relabels a domain along an invertible map. `backward` answers nullopt for
/// elements outside the image, which makes index_of reject them fast.
template <class A, class Forward, class Backward,
          class B = std::remove_cvref_t<std::invoke_result_t<const Forward&, const A&>>>
Enumeration<B> transform(Enumeration<A> base, Forward forward, Backward backward, std::string label) {
    return {std::move(label),
            [base, forward](const Natural& n) -> B { return forward(base.at(n)); },
            [base, backward](const B& element) -> std::optional<Natural> {
                std::optional<A> preimage = backward(element);
                if (!preimage) return std::nullopt;
                return base.try_index_of(*preimage);
            }};
}

namespace detail {

template <class T>
struct FilterScan {
    std::mutex mutex;
    std::vector<std::pair<Natural, T>> kept;  // (raw index in the base, element)
    BigInt next_raw = 1;                      // first raw index not yet scanned
};

}  // namespace detail

/// Keeps the elements accepted by `keep`, renumbering them contiguously in
/// the base's order. The forward scan frontier is memoized and shared by
/// copies; queries are serialized on it, so concurrent calls agree with
/// sequential ones. index_of checks the predicate before scanning and
/// therefore terminates on every input. `keep` must accept infinitely many
/// elements, which is the caller's responsibility.
template <class T, class Keep>
Enumeration<T> filter_reindex(Enumeration<T> base, Keep keep, std::string label) {
    auto scan = std::make_shared<detail::FilterScan<T>>();

    auto scan_one = [base, keep](detail::FilterScan<T>& s) {
        Natural raw{s.next_raw};
        T element = base.at(raw);
        if (keep(element)) s.kept.emplace_back(raw, std::move(element));
        ++s.next_raw;
    };

    return {std::move(label),
            [scan, scan_one](const Natural& index) -> T {
                std::scoped_lock lock(scan->mutex);
                std::size_t want = index.value().template convert_to<std::size_t>();
                while (scan->kept.size() < want) scan_one(*scan);
                return scan->kept[want - 1].second;
            },
            [scan, scan_one, base, keep](const T& element) -> std::optional<Natural> {
                if (!keep(element)) return std::nullopt;
                auto raw = base.try_index_of(element);
                if (!raw) return std::nullopt;
                std::scoped_lock lock(scan->mutex);
                while (scan->next_raw <= raw->value()) scan_one(*scan);
                auto it = std::lower_bound(
                    scan->kept.begin(), scan->kept.end(), *raw,
                    [](const std::pair<Natural, T>& entry, const Natural& target) {
                        return entry.first < target;
                    });
                if (it == scan->kept.end() || !(it->first == *raw)) return std::nullopt;
                return Natural(BigInt(it - scan->kept.begin()) + 1);
            }};
}

inline Enumeration<Whole> wholes() {
    auto from_one = transform(
        naturals(),
        [](const Natural& n) { return Whole(n.value()); },
        [](const Whole& w) -> std::optional<Natural> {
            if (w.value() < 1) return std::nullopt;
            return Natural(w.value());
        },
        "wholes-from-1");
    return prepend_finite<Whole>({Whole(BigInt(0))}, std::move(from_one));
}

/// The scheme 0, 1, -1, 2, -2, ...: odd indices carry zero and the
/// negatives, even indices the positives. Agrees with to_integer everywhere.
inline Enumeration<Integer> integers() {
    auto zero_and_negatives = transform(
        naturals(),
        [](const Natural& n) { return Integer(1 - n.value()); },
        [](const Integer& z) -> std::optional<Natural> {
            if (z.value() > 0) return std::nullopt;
            return Natural(1 - z.value());
        },
        "nonpositive-integers");
    auto positives = transform(
        naturals(),
        [](const Natural& n) { return Integer(n.value()); },
        [](const Integer& z) -> std::optional<Natural> {
            if (z.value() < 1) return std::nullopt;
            return Natural(z.value());
        },
        "positive-integers");
    return interleave(std::move(zero_and_negatives), std::move(positives));
}

/// The raw serpentine walk over every cell of the fraction grid.
inline Enumeration<GridPosition> grid_positions() {
    return {"grid",
            [](const Natural& n) { return unpair(n); },
            [](const GridPosition& cell) { return std::optional<Natural>(pair_index(cell)); }};
}

/// A cell (row, col) is kept iff row/col is already in lowest terms.
inline bool is_reduced(const GridPosition& cell) {
    return detail::gcd_nonneg(cell.row.value(), cell.col.value()) == 1;
}

inline Enumeration<GridPosition> reduced_grid_positions() {
    return filter_reindex(
        grid_positions(), [](const GridPosition& cell) { return is_reduced(cell); },
        "reduced-fractions");
}

/// Every positive rational exactly once: the grid walk with non-reduced
/// fractions skipped, starting 1/1, 1/2, 2/1, 3/1, 1/3, ...
inline Enumeration<Rational> rationals_positive() {
    return transform(
        reduced_grid_positions(),
        [](const GridPosition& cell) {
            return make_rational(Integer(cell.row.value()), Integer(cell.col.value()));
        },
        [](const Rational& q) -> std::optional<GridPosition> {
            if (!q.is_positive()) return std::nullopt;
            return GridPosition{Natural(q.numerator().value()), Natural(q.denominator().value())};
        },
        "rationals-positive");
}

/// Every rational exactly once: zero first, then positives and negatives
/// alternating, mirroring the integer scheme 0, 1, -1, 2, -2, ...
inline Enumeration<Rational> rationals_all() {
    auto negatives = transform(
        rationals_positive(),
        [](const Rational& q) { return -q; },
        [](const Rational& q) -> std::optional<Rational> {
            if (!q.is_negative()) return std::nullopt;
            return -q;
        },
        "rationals-negative");
    return prepend_finite<Rational>({make_rational(0, 1)},
                                    interleave(rationals_positive(), std::move(negatives)));
}

}  // namespace countable
