#pragma once

// Exact scalar field Q(q): rational functions in one variable q with rational
// coefficients, kept in a canonical reduced form at all times.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qloop/error.hpp"

namespace qloop {

using Rat = mpq_class;

// Laurent polynomial in q: coeff(k) multiplies q^(lo + k).
// Invariant: either coeffs is empty (the zero polynomial, lo == 0) or its
// first and last entries are nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rat& c, int exp = 0);
  explicit QPoly(long c, int exp = 0);
  static QPoly from_coeffs(int lo, std::vector<Rat> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  // True when the polynomial is c*q^e for a single term.
  bool is_monomial() const { return c_.size() == 1; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int exp) const;
  Rat leading() const;  // coefficient of q^hi(); 0 for the zero polynomial

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly scaled(const Rat& s) const;
  QPoly shifted(int e) const;  // multiply by q^e

  // Ordinary polynomial division on the non-Laurent parts: both operands are
  // first shifted so their lowest exponent is 0.  Returns {quotient, rem}.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(const QPoly& a, const QPoly& b);  // monic, lo == 0

  Rat eval(const Rat& q0) const;  // q0 must be nonzero when lo_ < 0

  std::string str() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<Rat> c_;
};

// Element of Q(q), always reduced: gcd(num, den) = 1, den has lowest
// exponent 0 and leading coefficient 1, den(0) != 0.  Any overall power of q
// and rational content live in the numerator.
class QRat {
 public:
  QRat() = default;  // zero
  QRat(long v);
  QRat(const Rat& v);
  explicit QRat(const QPoly& num);
  static QRat q_power(int k);
  static QRat from_num_den(QPoly num, QPoly den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  QRat operator-() const;
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }
  bool operator==(const QRat& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const QRat& o) const { return !(*this == o); }

  QRat inv() const;
  QRat pow(long e) const;

  // Evaluate at a nonzero rational q0; throws InputError on a pole or q0 = 0.
  Rat eval(const Rat& q0) const;

  std::string str() const;

 private:
  void reduce();
  QPoly num_;             // zero => whole value is zero
  QPoly den_{QPoly(1)};   // monic, lo == 0, nonzero constant term
};

// q-integer [n] = (q^n - q^-n)/(q - q^-1); [0] = 0, [-n] = -[n].
QRat q_int(long n);
// [n]! = [n][n-1]...[1], n >= 0.
QRat q_factorial(long n);
// Gaussian binomial [n over k]; requires 0 <= k <= n.
QRat q_binomial(long n, long k);

}  // namespace qloop
