#include "qloop/scalars.hpp"

#include <algorithm>
#include <sstream>

namespace qloop {

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(const Rat& c, int exp) {
  if (c != 0) {
    lo_ = exp;
    c_.push_back(c);
  }
}

QPoly::QPoly(long c, int exp) : QPoly(Rat(c), exp) {}

QPoly QPoly::from_coeffs(int lo, std::vector<Rat> coeffs) {
  QPoly p;
  p.lo_ = lo;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void QPoly::trim() {
  size_t head = 0;
  while (head < c_.size() && c_[head] == 0) ++head;
  size_t tail = c_.size();
  while (tail > head && c_[tail - 1] == 0) --tail;
  if (head == tail) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (head > 0) c_.erase(c_.begin(), c_.begin() + head);
  c_.resize(tail - head);
  lo_ += static_cast<int>(head);
}

bool QPoly::is_one() const {
  return c_.size() == 1 && lo_ == 0 && c_[0] == 1;
}

Rat QPoly::coeff(int exp) const {
  int idx = exp - lo_;
  if (idx < 0 || idx >= static_cast<int>(c_.size())) return Rat(0);
  return c_[idx];
}

Rat QPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(lo_, o.lo_);
  int hi_exp = std::max(hi(), o.hi());
  std::vector<Rat> out(hi_exp - lo + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[lo_ - lo + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[o.lo_ - lo + i] += o.c_[i];
  return from_coeffs(lo, std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return from_coeffs(lo_ + o.lo_, std::move(out));
}

QPoly QPoly::scaled(const Rat& s) const {
  if (s == 0) return QPoly();
  QPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

QPoly QPoly::shifted(int e) const {
  QPoly r = *this;
  if (!r.is_zero()) r.lo_ += e;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  QPoly r = a.shifted(-a.lo_);
  QPoly d = b.shifted(-b.lo_);
  std::vector<Rat> quot;
  int dq = static_cast<int>(r.c_.size()) - static_cast<int>(d.c_.size());
  if (dq < 0) return {QPoly(), r};
  quot.assign(dq + 1, Rat(0));
  while (!r.is_zero() && r.c_.size() >= d.c_.size()) {
    int k = static_cast<int>(r.c_.size() - d.c_.size());
    Rat f = r.c_.back() / d.c_.back();
    quot[k] = f;
    // r -= f * q^k * d
    std::vector<Rat> sub(r.c_.size(), Rat(0));
    for (size_t i = 0; i < d.c_.size(); ++i) sub[k + i] = f * d.c_[i];
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= sub[i];
    r.trim();
    r = r.shifted(-r.lo_);  // keep working copy aligned at 0
  }
  return {from_coeffs(0, std::move(quot)), r};
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a.shifted(-a.lo_);
  QPoly y = b.shifted(-b.lo_);
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
    if (!y.is_zero()) y = y.scaled(1 / y.leading()).shifted(-y.lo());
  }
  if (x.is_zero()) return QPoly(1);
  return x.scaled(1 / x.leading());
}

Rat QPoly::eval(const Rat& q0) const {
  if (is_zero()) return Rat(0);
  if (lo_ < 0 && q0 == 0)
    throw InputError("evaluation at q = 0 with negative powers of q present");
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q0 + *it;
  if (lo_ == 0) return acc;
  if (lo_ > 0) {
    for (int i = 0; i < lo_; ++i) acc *= q0;
    return acc;
  }
  for (int i = 0; i < -lo_; ++i) acc /= q0;
  return acc;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    int e = lo_ + i;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// QRat

QRat::QRat(long v) : num_(QPoly(v)) {}
QRat::QRat(const Rat& v) : num_(QPoly(v)) {}
QRat::QRat(const QPoly& num) : num_(num) {}

QRat QRat::q_power(int k) {
  QRat r;
  r.num_ = QPoly(1, k);
  return r;
}

QRat QRat::from_num_den(QPoly num, QPoly den) {
  if (den.is_zero()) throw InputError("zero denominator");
  QRat r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.reduce();
  return r;
}

void QRat::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  // Move the denominator's q-power into the numerator.
  int shift = den_.lo();
  den_ = den_.shifted(-shift);
  num_ = num_.shifted(-shift);
  if (!den_.is_one()) {
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
      int nlo = num_.lo();
      num_ = QPoly::divmod(num_, g).first.shifted(nlo);
      den_ = QPoly::divmod(den_, g).first;
    }
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    den_ = den_.scaled(1 / lead);
    num_ = num_.scaled(1 / lead);
  }
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::operator+(const QRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return from_num_den(num_ + o.num_, den_);
  return from_num_den(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
  if (is_zero() || o.is_zero()) return QRat();
  if (den_.is_one() && o.den_.is_one()) {
    QRat r;
    r.num_ = num_ * o.num_;
    return r;
  }
  return from_num_den(num_ * o.num_, den_ * o.den_);
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inv(); }

QRat QRat::inv() const {
  if (is_zero()) throw InputError("division by zero in Q(q)");
  return from_num_den(den_, num_);
}

QRat QRat::pow(long e) const {
  if (e == 0) return QRat(1);
  QRat base = e < 0 ? inv() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  QRat acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rat QRat::eval(const Rat& q0) const {
  Rat d = den_.eval(q0);
  if (d == 0) throw InputError("pole at the evaluation point");
  return num_.eval(q0) / d;
}

std::string QRat::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// q-combinatorics

QRat q_int(long n) {
  if (n < 0) return -q_int(-n);
  // [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)
  if (n == 0) return QRat();
  std::vector<Rat> c(2 * n - 1, Rat(0));
  for (long i = 0; i < n; ++i) c[2 * i] = 1;
  return QRat(QPoly::from_coeffs(static_cast<int>(1 - n), std::move(c)));
}

QRat q_factorial(long n) {
  if (n < 0) throw InputError("q-factorial of a negative integer");
  QRat r(1);
  for (long i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

QRat q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw InputError("q-binomial requires 0 <= k <= n");
  return q_factorial(n) / (q_factorial(k) * q_factorial(n - k));
}

}  // namespace qloop
