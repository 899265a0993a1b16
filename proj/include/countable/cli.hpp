#pragma once

/// Command-line entry point: one verb per module, line-oriented output on
/// stdout, diagnostics on stderr. Exit codes: 0 success, 1 domain errors,
/// 2 usage errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "countable/bijections.hpp"
#include "countable/diagonal.hpp"
#include "countable/enumeration.hpp"
#include "countable/finite_compare.hpp"
#include "countable/hotel.hpp"
#include "countable/numbers.hpp"

namespace countable::cli {

/// Bad argument shapes and malformed argument values; maps to exit code 2.
struct usage_error {
    std::string message;
};

namespace detail {

// Argument values are parsed after CLI11 is done; a malformed value is a
// usage problem, while a well-formed value outside a domain stays a domain
// error (exit 1).
template <class Parser>
auto parse_argument(Parser&& parser, const std::string& text) {
    try {
        return parser(text);
    } catch (const parse_error& error) {
        throw usage_error{error.what()};
    }
}

inline void run_bij(const std::string& rule, const std::vector<std::string>& values, bool inverse,
                    std::ostream& out) {
    auto want = [&](std::size_t count) {
        if (values.size() != count) {
            throw usage_error{"bij " + rule + (inverse ? " --inverse" : "") + " expects " +
                              std::to_string(count) + " value(s), got " +
                              std::to_string(values.size())};
        }
    };

    if (rule == "even") {
        want(1);
        Natural n = parse_argument(parse_natural, values[0]);
        out << (inverse ? from_even(n) : to_even(n)) << '\n';
    } else if (rule == "whole") {
        want(1);
        if (inverse) {
            out << from_whole(parse_argument(parse_whole, values[0])) << '\n';
        } else {
            out << to_whole(parse_argument(parse_natural, values[0])) << '\n';
        }
    } else if (rule == "int") {
        want(1);
        if (inverse) {
            out << from_integer(parse_argument(parse_integer, values[0])) << '\n';
        } else {
            out << to_integer(parse_argument(parse_natural, values[0])) << '\n';
        }
    } else if (rule == "odd") {
        want(1);
        Natural n = parse_argument(parse_natural, values[0]);
        out << (inverse ? from_odd(n) : to_odd(n)) << '\n';
    } else {  // pair
        if (inverse) {
            want(1);
            GridPosition cell = unpair(parse_argument(parse_natural, values[0]));
            out << cell.row << '\t' << cell.col << '\n';
        } else {
            want(2);
            GridPosition cell{parse_argument(parse_natural, values[0]),
                              parse_argument(parse_natural, values[1])};
            out << pair_index(cell) << '\n';
        }
    }
}

template <class T, class Parser>
void run_enum(const Enumeration<T>& enumeration, std::optional<std::uint64_t> take,
              const std::optional<std::string>& index_of, Parser&& parser, std::ostream& out) {
    if (take) {
        BigInt index = 1;
        for (std::uint64_t i = 0; i < *take; ++i, ++index) {
            Natural position(index);
            out << position << '\t' << to_string(enumeration.at(position)) << '\n';
        }
        return;
    }
    T element = parse_argument(parser, *index_of);
    auto index = enumeration.try_index_of(element);
    if (!index) {
        throw not_in_domain("'" + *index_of + "' is not in the domain of " + enumeration.label());
    }
    out << *index << '\n';
}

inline void dispatch_enum(const std::string& name, std::optional<std::uint64_t> take,
                          const std::optional<std::string>& index_of, std::ostream& out) {
    if (take.has_value() == index_of.has_value()) {
        throw usage_error{"enum requires exactly one of --take or --index-of"};
    }
    if (name == "n") {
        run_enum(naturals(), take, index_of, parse_natural, out);
    } else if (name == "even") {
        run_enum(evens(), take, index_of, parse_natural, out);
    } else if (name == "odd") {
        run_enum(odds(), take, index_of, parse_natural, out);
    } else if (name == "whole") {
        run_enum(wholes(), take, index_of, parse_whole, out);
    } else if (name == "int") {
        run_enum(integers(), take, index_of, parse_integer, out);
    } else if (name == "q+") {
        run_enum(rationals_positive(), take, index_of, parse_rational, out);
    } else {  // q
        run_enum(rationals_all(), take, index_of, parse_rational, out);
    }
}

inline void run_compare(const std::string& left_csv, const std::string& right_csv,
                        bool list_witnesses, std::size_t size_cap, std::ostream& out) {
    FiniteSet left = parse_label_set(left_csv);
    FiniteSet right = parse_label_set(right_csv);
    ComparisonResult result = compare(left, right, size_cap);
    out << to_string(result.verdict) << '\n';
    if (list_witnesses) {
        bool first = true;
        for (const PairingWitness& witness : all_maximal_pairings(left, right, size_cap)) {
            if (!first) out << '\n';
            first = false;
            out << render_witness(witness);
        }
    } else {
        out << render_witness(result.witness);
    }
}

inline void run_hotel(const std::string& path, std::ostream& out) {
    std::ifstream file(path);
    if (!file) throw domain_error("cannot open script file '" + path + "'");
    run_hotel_script(file, out);
}

inline void run_diagonal(const std::string& path, std::optional<std::uint64_t> depth_flag,
                         bool safe, std::ostream& out) {
    std::ifstream file(path);
    if (!file) throw domain_error("cannot open stream file '" + path + "'");
    std::vector<std::string> rows = read_digit_rows(file);
    if (rows.empty()) throw domain_error("'" + path + "' contains no digit streams");

    std::uint64_t depth = depth_flag ? *depth_flag : max_supported_depth(rows);
    if (depth == 0) throw usage_error{"--depth must be at least 1"};

    RealList list = list_from_rows(rows);
    DigitStream candidate = safe ? safe_anti_diagonal(list) : anti_diagonal(list);

    std::string digits;
    for (std::uint64_t n = 1; n <= depth; ++n) {
        digits += to_string(candidate.digit_at(Natural(BigInt(n))));
    }
    out << "0." << digits << '\n';
    bool escaped = verify_escape(list, candidate, Natural(BigInt(depth)));
    out << "escape depth " << depth << " -> " << (escaped ? "true" : "false") << '\n';
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name. All results go to
/// `out`, all diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"constructive countability toolkit: explicit bijections, enumerations of\n"
                 "countable sets, exhaustive finite-set comparison, the infinite hotel, and\n"
                 "the diagonal construction on digit streams",
                 "countable"};
    app.require_subcommand(1);

    // bij
    auto* bij = app.add_subcommand("bij", "evaluate a pairing rule (forward or inverse)");
    std::string bij_rule;
    std::vector<std::string> bij_values;
    bool bij_inverse = false;
    bij->add_option("rule", bij_rule, "one of: even, whole, int, odd, pair")
        ->required()
        ->check(CLI::IsMember({"even", "whole", "int", "odd", "pair"}));
    bij->add_option("value", bij_values, "argument(s) of the rule")->expected(1, 2);
    bij->add_flag("--inverse", bij_inverse, "apply the inverse direction");
    bij->callback([&] { detail::run_bij(bij_rule, bij_values, bij_inverse, out); });

    // enum
    auto* enumerate = app.add_subcommand("enum", "evaluate a canonical enumeration");
    std::string enum_name;
    std::optional<std::uint64_t> enum_take;
    std::optional<std::string> enum_index_of;
    enumerate->add_option("name", enum_name, "one of: n, even, odd, whole, int, q+, q")
        ->required()
        ->check(CLI::IsMember({"n", "even", "odd", "whole", "int", "q+", "q"}));
    enumerate->add_option("--take", enum_take, "print the first k entries as index<TAB>value");
    enumerate->add_option("--index-of", enum_index_of, "print the index of the given element");
    enumerate->callback([&] { detail::dispatch_enum(enum_name, enum_take, enum_index_of, out); });

    // compare
    auto* cmp = app.add_subcommand("compare", "compare two finite sets by exhaustive pairing");
    std::string cmp_left, cmp_right;
    bool cmp_witnesses = false;
    std::size_t cmp_cap = 8;
    cmp->add_option("--left", cmp_left, "comma-separated labels of the left set")->required();
    cmp->add_option("--right", cmp_right, "comma-separated labels of the right set")->required();
    cmp->add_flag("--witnesses", cmp_witnesses, "list every maximal pairing");
    cmp->add_option("--max-size", cmp_cap, "per-side size cap (default 8; count grows factorially)");
    cmp->callback([&] { detail::run_compare(cmp_left, cmp_right, cmp_witnesses, cmp_cap, out); });

    // hotel
    auto* hotel = app.add_subcommand("hotel", "the infinite hotel state machine");
    auto* hotel_run = hotel->add_subcommand("run", "replay a script and echo each query");
    std::string hotel_script;
    hotel_run->add_option("script", hotel_script, "script file path")->required();
    hotel->require_subcommand(1);
    hotel_run->callback([&] { detail::run_hotel(hotel_script, out); });

    // diagonal
    auto* diag = app.add_subcommand("diagonal", "escape from a listed set of digit streams");
    std::string diag_file;
    std::optional<std::uint64_t> diag_depth;
    bool diag_safe = false;
    diag->add_option("file", diag_file, "one digit stream per line")->required();
    diag->add_option("--depth", diag_depth, "prefix length to emit and verify");
    diag->add_flag("--safe", diag_safe, "use the 4/5 construction (no 0s or 9s in the output)");
    diag->callback([&] { detail::run_diagonal(diag_file, diag_depth, diag_safe, out); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("countable");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& error) {
        err << error.what() << '\n';
        return 2;
    } catch (const usage_error& error) {
        err << error.message << '\n';
        return 2;
    } catch (const domain_error& error) {
        err << error.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace countable::cli
