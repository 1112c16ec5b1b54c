#include "gca/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "gca/error.hpp"

namespace gca {

namespace {

using Int = boost::multiprecision::cpp_int;

Int parse_int(const std::string& s) {
  if (s.empty()) throw Error("empty integer in rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error("bad rational literal \"" + s + "\"");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw Error("bad rational literal \"" + s + "\"");
  }
  return Int(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace gca
