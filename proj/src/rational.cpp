#include "rbl/rational.hpp"

#include <cctype>
#include <cmath>

#include "rbl/errors.hpp"

namespace rbl {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// decimal digits only; a leading zero must not switch the parser to octal
BigInt decimal(const std::string& digits) {
  std::size_t z = digits.find_first_not_of('0');
  return z == std::string::npos ? BigInt(0) : BigInt(digits.substr(z));
}

BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw InvalidInput("empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    bool neg = !a.empty() && a[0] == '-';
    if (neg) a = a.substr(1);
    if (!all_digits(a) || !all_digits(b)) throw InvalidInput("bad rational '" + text + "'");
    BigInt den = decimal(b);
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    Rational r(decimal(a), den);
    return neg ? Rational(-r) : r;
  }
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  std::string mant = s.substr(i, epos == std::string::npos ? std::string::npos : epos - i);
  if (epos != std::string::npos) {
    std::string es = s.substr(epos + 1);
    bool eneg = !es.empty() && es[0] == '-';
    if (!es.empty() && (es[0] == '-' || es[0] == '+')) es = es.substr(1);
    if (!all_digits(es) || es.size() > 6) throw InvalidInput("bad exponent in '" + text + "'");
    exp10 = std::stol(es) * (eneg ? -1 : 1);
  }
  auto dot = mant.find('.');
  std::string ip = dot == std::string::npos ? mant : mant.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : mant.substr(dot + 1);
  if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
      (!fp.empty() && !all_digits(fp)))
    throw InvalidInput("bad number '" + text + "'");
  BigInt num = decimal(ip + fp);
  exp10 -= static_cast<long>(fp.size());
  Rational r = exp10 >= 0 ? Rational(num * pow10(static_cast<unsigned>(exp10)))
                          : Rational(num, pow10(static_cast<unsigned>(-exp10)));
  return neg ? Rational(-r) : r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational pow(const Rational& base, unsigned e) {
  Rational result = 1, b = base;
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Rational round_to_denominator(double x, long den) {
  return Rational(BigInt(static_cast<long long>(std::floor(x * den + 0.5))), BigInt(den));
}

}  // namespace rbl
