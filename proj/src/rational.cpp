#include "frob/rational.hpp"

#include <cctype>

#include "frob/errors.hpp"

namespace frob {

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  Rational q(Integer(std::string(num), 10), d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace frob
