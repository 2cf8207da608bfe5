#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace troptp {

/// Exact rational scalar used for every finite value in the library.
using Rational = mpq_class;

/// Parses "p", "p/q" or a plain decimal such as "-1.25" into an exact
/// rational. Throws Error(Parse) on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace troptp
