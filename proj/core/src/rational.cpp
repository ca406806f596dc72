#include "ssetkit/rational.hpp"

#include <cctype>

#include "ssetkit/errors.hpp"

namespace ssetkit {

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+')
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(parse_integer(whole));
    Rational f(parse_integer(frac), scale);
    return negative || r < 0 ? Rational(r - f) : Rational(r + f);
  }
  return Rational(parse_integer(text));
}

Integer ceil(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (q * den != num && num > 0) q += 1;
  return q;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace ssetkit
