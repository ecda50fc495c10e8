#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ybekit {

/// Exact rational entry. GMP keeps every result canonical (reduced, positive
/// denominator) so equality is structural.
using Scalar = mpq_class;

/// Parses "7", "-3/2", "+4/6" (reduced on read). Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// Canonical fraction string: "0", "7", "-3/2".
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace ybekit
