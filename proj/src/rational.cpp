#include "hreg/rational.hpp"

#include <cmath>

namespace hreg {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("cannot parse rational: " + s);
  }
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool NonnegReal::is_rational() const {
  BigInt n = numerator(sq_), d = denominator(sq_);
  BigInt sn = boost::multiprecision::sqrt(n);
  if (sn * sn != n) return false;
  BigInt sd = boost::multiprecision::sqrt(d);
  return sd * sd == d;
}

Rational NonnegReal::as_rational() const {
  BigInt sn = boost::multiprecision::sqrt(numerator(sq_));
  BigInt sd = boost::multiprecision::sqrt(denominator(sq_));
  return Rational(sn, sd);
}

// sqrt(n/d) = sqrt(n*d)/d.  Scale by 4^t so the integer sqrt carries t extra
// bits, then round the last bit both ways.
Rational NonnegReal::lower_rational(unsigned precision_bits) const {
  BigInt n = numerator(sq_), d = denominator(sq_);
  BigInt scaled = (n * d) << (2 * precision_bits);
  BigInt root = boost::multiprecision::sqrt(scaled);  // floor sqrt
  return Rational(root, d << precision_bits);
}

Rational NonnegReal::upper_rational(unsigned precision_bits) const {
  BigInt n = numerator(sq_), d = denominator(sq_);
  BigInt scaled = (n * d) << (2 * precision_bits);
  BigInt root = boost::multiprecision::sqrt(scaled);
  if (root * root != scaled) ++root;
  return Rational(root, d << precision_bits);
}

double NonnegReal::to_double() const { return std::sqrt(static_cast<double>(sq_)); }

}  // namespace hreg
