#pragma once

#include <stdexcept>
#include <string>

namespace countable {

/// Base class for value-level failures: the argument was well formed but
/// names something outside the operation's domain.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& message) : std::runtime_error(message) {}
};

/// An element was handed to an enumeration or inverse map that does not
/// contain it.
class not_in_domain : public domain_error {
    using domain_error::domain_error;
};

/// A rational with a zero denominator was requested.
class invalid_rational : public domain_error {
    using domain_error::domain_error;
};

/// A hotel query referenced a guest that never checked in.
class no_such_guest : public domain_error {
    using domain_error::domain_error;
};

/// A digit position beyond a stream's stored prefix was queried; prefixes
/// are never silently extended.
class out_of_prefix : public domain_error {
    using domain_error::domain_error;
};

/// Malformed textual data (numbers, witness files, scripts, digit rows).
class parse_error : public domain_error {
    using domain_error::domain_error;
};

}  // namespace countable
