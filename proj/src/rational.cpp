#include "thinpos/rational.hpp"

#include <cctype>

namespace thinpos {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  std::string num = body;
  std::string den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error("not a rational literal: \"" + text + "\" (expected p or p/q)");
  }
  BigInt n(num), d(den);
  if (d == 0) throw Error("zero denominator in rational literal: \"" + text + "\"");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

}  // namespace thinpos
