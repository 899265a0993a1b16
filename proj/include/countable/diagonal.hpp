#pragma once

/// The diagonal construction on digit streams: given any list of reals in
/// [0,1) presented by their decimal digits, produce a stream that provably
/// differs from every listed stream, and check the escape on any prefix.

#include <cstddef>
#include <functional>
#include <istream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "countable/numbers.hpp"

namespace countable {

/// A real in [0,1) as a total map from 1-based position to decimal digit.
/// Streams backed by a finite prefix refuse queries beyond it rather than
/// inventing digits.
class DigitStream {
public:
    using digit_function = std::function<Digit(const Natural&)>;

    DigitStream(std::string source, digit_function digit_at)
        : source_(std::move(source)), digit_at_(std::move(digit_at)) {}

    static DigitStream from_prefix(std::string digits, std::string source) {
        for (char c : digits) {
            if (c < '0' || c > '9') {
                throw parse_error(source + ": '" + std::string(1, c) + "' is not a digit");
            }
        }
        auto prefix = std::make_shared<const std::string>(std::move(digits));
        std::string label = source;
        return DigitStream(std::move(source), [prefix, label](const Natural& position) {
            if (position.value() > prefix->size()) {
                throw out_of_prefix(label + " has only " + std::to_string(prefix->size()) +
                                    " digits; position " + to_string(position) + " was queried");
            }
            std::size_t i = position.value().convert_to<std::size_t>();
            return Digit((*prefix)[i - 1] - '0');
        });
    }

    Digit digit_at(const Natural& position) const { return digit_at_(position); }
    const std::string& source() const { return source_; }

private:
    std::string source_;
    digit_function digit_at_;
};

/// A claimed pairing of N with reals: stream_at(n) is the n-th listed real.
class RealList {
public:
    using stream_function = std::function<DigitStream(const Natural&)>;

    static RealList from_function(stream_function stream_at) {
        return RealList(std::move(stream_at));
    }

    /// A finite list; queries beyond its length signal out_of_prefix.
    static RealList from_streams(std::vector<DigitStream> streams) {
        auto shared = std::make_shared<const std::vector<DigitStream>>(std::move(streams));
        return RealList([shared](const Natural& index) {
            if (index.value() > shared->size()) {
                throw out_of_prefix("the list has only " + std::to_string(shared->size()) +
                                    " streams; stream " + to_string(index) + " was queried");
            }
            return (*shared)[index.value().convert_to<std::size_t>() - 1];
        });
    }

    DigitStream stream_at(const Natural& index) const { return stream_at_(index); }

private:
    explicit RealList(stream_function stream_at) : stream_at_(std::move(stream_at)) {}

    stream_function stream_at_;
};

/// Position n of the result is the n-th digit of the n-th listed stream,
/// plus one, with 9 wrapping to 0. Evaluating position n touches exactly one
/// digit of the list.
inline DigitStream anti_diagonal(const RealList& list) {
    return DigitStream("anti-diagonal", [list](const Natural& position) {
        int digit = list.stream_at(position).digit_at(position).value();
        return Digit((digit + 1) % 10);
    });
}

/// Digit-level escape that is also a numeric escape: emits 5 where the
/// diagonal digit differs from 5 and 4 where it equals 5. The output
/// contains no 0s or 9s, so it is the unique decimal expansion of its value.
inline DigitStream safe_anti_diagonal(const RealList& list) {
    return DigitStream("safe-anti-diagonal", [list](const Natural& position) {
        int digit = list.stream_at(position).digit_at(position).value();
        return Digit(digit == 5 ? 4 : 5);
    });
}

/// True iff the candidate differs from the n-th listed stream at the n-th
/// decimal place, for every n up to `depth`.
inline bool verify_escape(const RealList& list, const DigitStream& candidate,
                          const Natural& depth) {
    for (BigInt n = 1; n <= depth.value(); ++n) {
        Natural position{n};
        if (candidate.digit_at(position) == list.stream_at(position).digit_at(position)) {
            return false;
        }
    }
    return true;
}

/// Input format: one stream per line, a run of decimal digits, with an
/// optional `0.` prefix tolerated. Blank lines are skipped.
inline std::vector<std::string> read_digit_rows(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.size() >= 2 && line[0] == '0' && line[1] == '.') line.erase(0, 2);
        if (line.empty()) {
            throw parse_error("line " + std::to_string(line_number) + ": no digits");
        }
        for (char c : line) {
            if (c < '0' || c > '9') {
                throw parse_error("line " + std::to_string(line_number) +
                                  ": expected a digit string, got '" + line + "'");
            }
        }
        rows.push_back(std::move(line));
    }
    return rows;
}

inline RealList list_from_rows(const std::vector<std::string>& rows) {
    std::vector<DigitStream> streams;
    streams.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        streams.push_back(DigitStream::from_prefix(rows[i], "stream " + std::to_string(i + 1)));
    }
    return RealList::from_streams(std::move(streams));
}

/// Largest depth d such that every stream n <= d has at least n stored
/// digits, i.e. the whole diagonal prefix is available.
inline std::size_t max_supported_depth(const std::vector<std::string>& rows) {
    std::size_t depth = 0;
    while (depth < rows.size() && rows[depth].size() >= depth + 1) ++depth;
    return depth;
}

}  // namespace countable
