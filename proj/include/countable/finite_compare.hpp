#pragma once

/// The exhaustive method for finite sets: generate every maximal pairing
/// between two label sets, classify their cardinalities from the remainders,
/// and validate externally supplied pairing witnesses.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "countable/errors.hpp"

namespace countable {

/// An ordered finite set of distinct, non-empty labels. Labels may not
/// contain tabs or line breaks, which the witness file format reserves.
class FiniteSet {
public:
    explicit FiniteSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
        for (const std::string& label : labels_) {
            if (label.empty()) throw domain_error("set labels must be non-empty");
            if (label.find_first_of("\t\r\n") != std::string::npos) {
                throw domain_error("set label '" + label + "' contains tab or line break");
            }
        }
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            for (std::size_t j = i + 1; j < labels_.size(); ++j) {
                if (labels_[i] == labels_[j]) {
                    throw domain_error("set label '" + labels_[i] + "' is duplicated");
                }
            }
        }
    }

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

private:
    std::vector<std::string> labels_;
};

/// Splits comma-separated labels; empty tokens are dropped, so "" names the
/// empty set.
inline FiniteSet parse_label_set(std::string_view csv) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        if (comma > start) labels.emplace_back(csv.substr(start, comma - start));
        start = comma + 1;
    }
    return FiniteSet(std::move(labels));
}

/// A maximal pairing: every label appears at most once, and at least one
/// remainder list is empty.
struct PairingWitness {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string> remainder_left;
    std::vector<std::string> remainder_right;

    friend bool operator==(const PairingWitness&, const PairingWitness&) = default;
};

/// Every maximal pairing between `left` and `right`, in lexicographic order
/// of partner assignment: the smaller side keeps its order and the chosen
/// partner positions on the larger side are enumerated lexicographically.
/// The count is the falling factorial max * (max-1) * ... over min factors.
/// Sizes are capped because the count grows factorially; raise `size_cap`
/// explicitly for larger experiments.
inline std::vector<PairingWitness> all_maximal_pairings(const FiniteSet& left,
                                                        const FiniteSet& right,
                                                        std::size_t size_cap = 8) {
    if (left.size() > size_cap || right.size() > size_cap) {
        throw domain_error("pairing enumeration is capped at " + std::to_string(size_cap) +
                           " labels per side; raise the cap to go further");
    }

    const bool left_is_small = left.size() <= right.size();
    const FiniteSet& small = left_is_small ? left : right;
    const FiniteSet& large = left_is_small ? right : left;

    std::vector<PairingWitness> witnesses;
    std::vector<std::size_t> choice(small.size());
    std::vector<bool> used(large.size(), false);

    auto emit = [&]() {
        PairingWitness witness;
        witness.pairs.reserve(small.size());
        for (std::size_t i = 0; i < small.size(); ++i) {
            const std::string& s = small.labels()[i];
            const std::string& l = large.labels()[choice[i]];
            witness.pairs.emplace_back(left_is_small ? s : l, left_is_small ? l : s);
        }
        auto& remainder = left_is_small ? witness.remainder_right : witness.remainder_left;
        for (std::size_t j = 0; j < large.size(); ++j) {
            if (!used[j]) remainder.push_back(large.labels()[j]);
        }
        witnesses.push_back(std::move(witness));
    };

    auto descend = [&](auto&& self, std::size_t i) -> void {
        if (i == small.size()) {
            emit();
            return;
        }
        for (std::size_t j = 0; j < large.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            choice[i] = j;
            self(self, i + 1);
            used[j] = false;
        }
    };
    descend(descend, 0);
    return witnesses;
}

enum class Verdict { equal_cardinality, left_larger, right_larger };

inline std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::equal_cardinality: return "equal-cardinality";
        case Verdict::left_larger: return "left-larger";
        case Verdict::right_larger: return "right-larger";
    }
    return "unknown";
}

struct ComparisonResult {
    Verdict verdict;
    PairingWitness witness;  // exhibits the verdict: a remainder-free pairing onto a subset
};

/// Classifies the two sets by examining every maximal pairing: equal
/// cardinality iff some pairing leaves no remainder at all, otherwise the
/// side with the leftover labels is the larger one.
inline ComparisonResult compare(const FiniteSet& left, const FiniteSet& right,
                                std::size_t size_cap = 8) {
    std::vector<PairingWitness> witnesses = all_maximal_pairings(left, right, size_cap);
    for (const PairingWitness& witness : witnesses) {
        if (witness.remainder_left.empty() && witness.remainder_right.empty()) {
            return {Verdict::equal_cardinality, witness};
        }
    }
    const PairingWitness& exhibit = witnesses.front();
    Verdict verdict =
        exhibit.remainder_left.empty() ? Verdict::right_larger : Verdict::left_larger;
    return {verdict, exhibit};
}

struct WitnessCheck {
    bool valid = true;
    std::string diagnostic;

    explicit operator bool() const { return valid; }
};

namespace detail {

inline WitnessCheck check_side(const FiniteSet& set,
                               const std::vector<std::string>& paired,
                               const std::vector<std::string>& remainder,
                               const char* side) {
    std::vector<std::string> seen;
    seen.reserve(paired.size() + remainder.size());
    seen.insert(seen.end(), paired.begin(), paired.end());
    seen.insert(seen.end(), remainder.begin(), remainder.end());

    for (const std::string& label : seen) {
        if (std::find(set.labels().begin(), set.labels().end(), label) == set.labels().end()) {
            return {false, "label '" + label + "' is not an element of the " + side + " set"};
        }
    }
    std::vector<std::string> sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        return {false, "label '" + *dup + "' appears more than once on the " + side + " side"};
    }
    if (seen.size() != set.size()) {
        for (const std::string& label : set.labels()) {
            if (std::find(seen.begin(), seen.end(), label) == seen.end()) {
                return {false, "label '" + label + "' of the " + side + " set is unaccounted for"};
            }
        }
    }
    return {};
}

}  // namespace detail

/// True iff the witness draws its labels from the two sets, uses each at
/// most once, partitions both sets, and is maximal.
inline WitnessCheck check_witness(const FiniteSet& left, const FiniteSet& right,
                                  const PairingWitness& witness) {
    std::vector<std::string> paired_left, paired_right;
    paired_left.reserve(witness.pairs.size());
    paired_right.reserve(witness.pairs.size());
    for (const auto& [l, r] : witness.pairs) {
        paired_left.push_back(l);
        paired_right.push_back(r);
    }
    if (WitnessCheck c = detail::check_side(left, paired_left, witness.remainder_left, "left"); !c) {
        return c;
    }
    if (WitnessCheck c = detail::check_side(right, paired_right, witness.remainder_right, "right");
        !c) {
        return c;
    }
    if (!witness.remainder_left.empty() && !witness.remainder_right.empty()) {
        return {false, "both remainder lists are non-empty, so the pairing is not maximal"};
    }
    return {};
}

/// Line-oriented format: `left<TAB>right` pair lines, then a
/// `left-remainder:` section and a `right-remainder:` section, one label per
/// line.
inline std::string render_witness(const PairingWitness& witness) {
    std::string out;
    for (const auto& [l, r] : witness.pairs) {
        out += l;
        out += '\t';
        out += r;
        out += '\n';
    }
    out += "left-remainder:\n";
    for (const std::string& label : witness.remainder_left) {
        out += label;
        out += '\n';
    }
    out += "right-remainder:\n";
    for (const std::string& label : witness.remainder_right) {
        out += label;
        out += '\n';
    }
    return out;
}

inline PairingWitness parse_witness(std::string_view text) {
    PairingWitness witness;
    enum class Section { pairs, left_remainder, right_remainder };
    Section section = Section::pairs;
    bool saw_left_header = false;
    bool saw_right_header = false;

    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        start = end + 1;
        if (line.empty()) continue;

        if (line == "left-remainder:") {
            if (saw_left_header) throw parse_error("duplicate left-remainder section");
            saw_left_header = true;
            section = Section::left_remainder;
            continue;
        }
        if (line == "right-remainder:") {
            if (!saw_left_header) throw parse_error("right-remainder section before left-remainder");
            if (saw_right_header) throw parse_error("duplicate right-remainder section");
            saw_right_header = true;
            section = Section::right_remainder;
            continue;
        }

        switch (section) {
            case Section::pairs: {
                std::size_t tab = line.find('\t');
                if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size() ||
                    line.find('\t', tab + 1) != std::string_view::npos) {
                    throw parse_error("expected 'left<TAB>right' pair line, got '" +
                                      std::string(line) + "'");
                }
                witness.pairs.emplace_back(std::string(line.substr(0, tab)),
                                           std::string(line.substr(tab + 1)));
                break;
            }
            case Section::left_remainder:
                if (line.find('\t') != std::string_view::npos) {
                    throw parse_error("remainder label '" + std::string(line) + "' contains a tab");
                }
                witness.remainder_left.emplace_back(line);
                break;
            case Section::right_remainder:
                if (line.find('\t') != std::string_view::npos) {
                    throw parse_error("remainder label '" + std::string(line) + "' contains a tab");
                }
                witness.remainder_right.emplace_back(line);
                break;
        }
    }
    if (!saw_left_header || !saw_right_header) {
        throw parse_error("witness text is missing its remainder sections");
    }
    return witness;
}

}  // namespace countable
