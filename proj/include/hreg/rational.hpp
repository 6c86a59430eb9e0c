#ifndef HREG_RATIONAL_HPP
#define HREG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "hreg/errors.hpp"

namespace hreg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

// Least integer >= q.
inline BigInt ceil_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);  // den > 0 canonical
  BigInt d = num / den;
  if (num > d * den) ++d;
  return d;
}

inline BigInt floor_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);
  BigInt d = num / den;
  if (num < d * den) --d;
  return d;
}

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational pow_rational(const Rational& q, unsigned e) {
  return Rational(boost::multiprecision::pow(numerator(q), e),
                  boost::multiprecision::pow(denominator(q), e));
}

// "p/q" or plain integer "p".  Used everywhere rationals cross a text boundary.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

// Exact nonnegative real of the form sqrt(s) with s rational, stored by its
// square.  Rationals embed via q |-> sqrt(q^2).  This is closed under product
// and exact comparison (against both rationals and each other), which is all
// the threshold tests need; it is not closed under addition.
class NonnegReal {
public:
  NonnegReal() : sq_(0) {}

  static NonnegReal from_rational(const Rational& q) {
    if (q < 0) throw ValidationError("NonnegReal: negative value");
    NonnegReal v;
    v.sq_ = q * q;
    return v;
  }
  static NonnegReal sqrt_of(const Rational& s) {
    if (s < 0) throw ValidationError("NonnegReal: negative square");
    NonnegReal v;
    v.sq_ = s;
    return v;
  }

  const Rational& square() const { return sq_; }
  bool is_zero() const { return sq_ == 0; }

  // True iff the value is exactly rational (the stored square is a perfect
  // square of a rational).
  bool is_rational() const;
  Rational as_rational() const;  // requires is_rational()

  // Rational bracketing with error < 2^-precision_bits relative-ish slack;
  // upper >= value >= lower always.
  Rational upper_rational(unsigned precision_bits = 64) const;
  Rational lower_rational(unsigned precision_bits = 64) const;

  double to_double() const;

  friend NonnegReal operator*(const NonnegReal& a, const NonnegReal& b) {
    NonnegReal v;
    v.sq_ = a.sq_ * b.sq_;
    return v;
  }

  // value <=> rational t
  int compare(const Rational& t) const {
    if (t < 0) return 1;
    Rational t2 = t * t;
    if (sq_ < t2) return -1;
    if (sq_ > t2) return 1;
    return 0;
  }
  int compare(const NonnegReal& o) const {
    if (sq_ < o.sq_) return -1;
    if (sq_ > o.sq_) return 1;
    return 0;
  }

  bool operator<(const NonnegReal& o) const { return compare(o) < 0; }
  bool operator==(const NonnegReal& o) const { return sq_ == o.sq_; }

private:
  Rational sq_;
};

}  // namespace hreg

#endif
