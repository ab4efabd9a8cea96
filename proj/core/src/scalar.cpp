#include "grayform/scalar.hpp"

#include <cctype>
#include <cstdio>

namespace grayform {

namespace {

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool valid_integer(const std::string& s) {
  std::size_t from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  return all_digits(s, from);
}

mpz_class parse_integer(const std::string& s) {
  std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  return mpz_class(t, 10);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  auto bad = [&] { return Error(ErrorKind::InvalidInput, "not a rational number: '" + raw + "'"); };
  if (text.empty()) throw bad();

  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!valid_integer(num) || !all_digits(den, 0)) throw bad();
    mpz_class d = parse_integer(den);
    if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + raw + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string ip = text.substr(0, dot), fp = text.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    std::string digits = ip;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
    if ((!digits.empty() && !all_digits(digits, 0)) || (!fp.empty() && !all_digits(fp, 0)) ||
        (digits.empty() && fp.empty()))
      throw bad();
    mpz_class whole = digits.empty() ? mpz_class(0) : mpz_class(digits, 10);
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(fp, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    if (neg) r = -r;
    return r;
  }

  if (!valid_integer(text)) throw bad();
  return Rational(parse_integer(text));
}

std::string ScalarOps<double>::to_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace grayform
