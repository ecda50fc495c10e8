#include "ybekit/scalar.hpp"

#include <cctype>

#include "ybekit/errors.hpp"

namespace ybekit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  std::string_view num = t.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : t.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("invalid fraction: \"" + std::string(text) + "\"");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

}  // namespace ybekit
