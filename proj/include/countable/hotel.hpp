#pragma once

/// The infinite hotel as a replayable event log. Room assignments are never
/// materialized: each arrival event contributes one closed-form relocation
/// rule, and queries compose those rules forwards (room_of) or backwards
/// (occupant_of). The hotel is always full.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "countable/numbers.hpp"

namespace countable {

/// A guest who was already present when the log began, identified by the
/// room they initially occupied.
struct OriginalGuest {
    Natural initial_room;

    friend bool operator==(const OriginalGuest&, const OriginalGuest&) = default;
};

/// A guest admitted by the `batch`-th event of the log; seat 1 for single
/// arrivals, seats 1..k for a group of k, any seat for a bus.
struct ArrivalGuest {
    Natural batch;
    Natural seat;

    friend bool operator==(const ArrivalGuest&, const ArrivalGuest&) = default;
};

using GuestId = std::variant<OriginalGuest, ArrivalGuest>;

inline std::string to_string(const GuestId& guest) {
    if (const auto* original = std::get_if<OriginalGuest>(&guest)) {
        return "original " + to_string(original->initial_room);
    }
    const auto& arrival = std::get<ArrivalGuest>(guest);
    return "arrival " + to_string(arrival.batch) + " " + to_string(arrival.seat);
}

inline std::ostream& operator<<(std::ostream& os, const GuestId& guest) {
    return os << to_string(guest);
}

struct ArriveOne {};
struct ArriveFinite {
    Natural count;
};
struct ArriveBus {};

using HotelEvent = std::variant<ArriveOne, ArriveFinite, ArriveBus>;

class HotelState {
public:
    HotelState() = default;
    explicit HotelState(std::vector<HotelEvent> log) : log_(std::move(log)) {}

    const std::vector<HotelEvent>& log() const { return log_; }

    /// Everyone shifts up one room; the new guest takes room 1.
    [[nodiscard]] HotelState arrive_one() const { return extended(ArriveOne{}); }

    /// Everyone shifts up k rooms; seats 1..k take rooms 1..k.
    [[nodiscard]] HotelState arrive_finite(const Natural& count) const {
        return extended(ArriveFinite{count});
    }

    /// Everyone doubles their room number; bus seat k takes odd room 2k-1.
    [[nodiscard]] HotelState arrive_bus() const { return extended(ArriveBus{}); }

    /// Composes the per-event relocation rules from the guest's check-in
    /// onwards; costs one arithmetic step per logged event.
    Natural room_of(const GuestId& guest) const {
        BigInt room;
        std::size_t first_event = 0;
        if (const auto* original = std::get_if<OriginalGuest>(&guest)) {
            room = original->initial_room.value();
        } else {
            const auto& arrival = std::get<ArrivalGuest>(guest);
            if (arrival.batch.value() > log_.size()) {
                throw no_such_guest("no arrival batch " + to_string(arrival.batch) +
                                    " in a log of " + std::to_string(log_.size()) + " events");
            }
            std::size_t batch = arrival.batch.value().convert_to<std::size_t>();
            room = entry_room(log_[batch - 1], arrival);
            first_event = batch;
        }
        for (std::size_t i = first_event; i < log_.size(); ++i) {
            room = shifted(log_[i], room);
        }
        return Natural(room);
    }

    /// Exact inverse of room_of; inverts each event's rule newest to oldest.
    GuestId occupant_of(const Natural& room_number) const {
        BigInt room = room_number.value();
        for (std::size_t i = log_.size(); i-- > 0;) {
            Natural batch(BigInt(i) + 1);
            if (std::holds_alternative<ArriveOne>(log_[i])) {
                if (room == 1) return ArrivalGuest{batch, Natural(BigInt(1))};
                --room;
            } else if (const auto* finite = std::get_if<ArriveFinite>(&log_[i])) {
                if (room <= finite->count.value()) return ArrivalGuest{batch, Natural(room)};
                room -= finite->count.value();
            } else {
                if (room % 2 != 0) return ArrivalGuest{batch, Natural((room + 1) / 2)};
                room /= 2;
            }
        }
        return OriginalGuest{Natural(room)};
    }

private:
    [[nodiscard]] HotelState extended(HotelEvent event) const {
        std::vector<HotelEvent> log = log_;
        log.push_back(std::move(event));
        return HotelState(std::move(log));
    }

    static BigInt shifted(const HotelEvent& event, const BigInt& room) {
        if (std::holds_alternative<ArriveOne>(event)) return room + 1;
        if (const auto* finite = std::get_if<ArriveFinite>(&event)) {
            return room + finite->count.value();
        }
        return 2 * room;
    }

    static BigInt entry_room(const HotelEvent& event, const ArrivalGuest& arrival) {
        if (std::holds_alternative<ArriveOne>(event)) {
            if (arrival.seat.value() != 1) {
                throw no_such_guest("batch " + to_string(arrival.batch) +
                                    " admitted a single guest; there is no seat " +
                                    to_string(arrival.seat));
            }
            return 1;
        }
        if (const auto* finite = std::get_if<ArriveFinite>(&event)) {
            if (arrival.seat.value() > finite->count.value()) {
                throw no_such_guest("batch " + to_string(arrival.batch) + " admitted " +
                                    to_string(finite->count) + " guests; there is no seat " +
                                    to_string(arrival.seat));
            }
            return BigInt(arrival.seat.value());
        }
        return 2 * arrival.seat.value() - 1;
    }

    std::vector<HotelEvent> log_;
};

/// Executes a hotel script. Commands `one`, `finite <k>` and `bus` extend
/// the log; queries `room-of original <n>`, `room-of arrival <b> <s>` and
/// `occupant <room>` each write one `<query> -> <answer>` line to `out`.
/// `#` starts a comment.
inline void run_hotel_script(std::istream& in, std::ostream& out) {
    HotelState state;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string word; words >> word;) tokens.push_back(std::move(word));
        if (tokens.empty()) continue;

        auto wrong_shape = [&]() -> parse_error {
            return parse_error("line " + std::to_string(line_number) +
                               ": malformed command '" + line + "'");
        };

        const std::string& head = tokens[0];
        if (head == "one") {
            if (tokens.size() != 1) throw wrong_shape();
            state = state.arrive_one();
        } else if (head == "finite") {
            if (tokens.size() != 2) throw wrong_shape();
            state = state.arrive_finite(parse_natural(tokens[1]));
        } else if (head == "bus") {
            if (tokens.size() != 1) throw wrong_shape();
            state = state.arrive_bus();
        } else if (head == "room-of") {
            GuestId guest = [&]() -> GuestId {
                if (tokens.size() == 3 && tokens[1] == "original") {
                    return OriginalGuest{parse_natural(tokens[2])};
                }
                if (tokens.size() == 4 && tokens[1] == "arrival") {
                    return ArrivalGuest{parse_natural(tokens[2]), parse_natural(tokens[3])};
                }
                throw wrong_shape();
            }();
            out << "room-of " << to_string(guest) << " -> " << state.room_of(guest) << '\n';
        } else if (head == "occupant") {
            if (tokens.size() != 2) throw wrong_shape();
            Natural room = parse_natural(tokens[1]);
            out << "occupant " << room << " -> " << state.occupant_of(room) << '\n';
        } else {
            throw parse_error("line " + std::to_string(line_number) + ": unknown command '" +
                              head + "'");
        }
    }
}

}  // namespace countable
