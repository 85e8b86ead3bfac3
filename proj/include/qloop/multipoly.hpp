#pragma once

// Sparse multivariate Laurent polynomials with Q(q) coefficients, plus the
// division and symmetrization kernels built on them.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qloop/scalars.hpp"

namespace qloop {

// Variables come in families.  Nonnegative colors are the vertex variables
// z_{i,a} (slot a >= 1).  Negative colors are reserved families used
// internally: x/y for wheel and zig-zag specializations (slot = position),
// a/b for the abstract two-variable kernels, t for contour variables.
struct VarId {
  int32_t color = 0;
  int32_t slot = 1;
  auto operator<=>(const VarId&) const = default;
};

constexpr int32_t kFamX = -1;
constexpr int32_t kFamY = -2;
constexpr int32_t kFamA = -3;
constexpr int32_t kFamB = -4;
constexpr int32_t kFamT = -5;

inline VarId zvar(int color, int slot) { return {color, slot}; }
inline VarId xvar(int pos = 0) { return {kFamX, pos}; }
inline VarId yvar(int pos = 0) { return {kFamY, pos}; }
inline VarId avar() { return {kFamA, 0}; }
inline VarId bvar() { return {kFamB, 0}; }
inline VarId tvar(int idx) { return {kFamT, idx}; }

std::string var_str(VarId v);

// Exponent vector with finitely many nonzero entries, any sign.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, int exp = 1);
  static Monomial from_pairs(std::vector<std::pair<VarId, int>> factors);

  const std::vector<std::pair<VarId, int>>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  int exponent(VarId v) const;
  long total_degree() const;
  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int e) const;
  bool operator==(const Monomial& o) const = default;
  size_t hash() const;
  std::string str() const;

 private:
  std::vector<std::pair<VarId, int>> f_;  // sorted by VarId, exponents nonzero
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded lexicographic: compare total degree first, then the exponent vectors
// variable by variable in increasing (color, slot) order.
bool monomial_graded_lex_less(const Monomial& a, const Monomial& b);

class MLaurent {
 public:
  using Map = std::unordered_map<Monomial, QRat, MonomialHash>;

  MLaurent() = default;
  static MLaurent constant(const QRat& c);
  static MLaurent var(VarId v, int exp = 1);
  static MLaurent monomial(const Monomial& m, const QRat& c = QRat(1));

  bool is_zero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }
  const Map& terms() const { return t_; }
  void add_term(const Monomial& m, const QRat& c);

  MLaurent operator-() const;
  MLaurent operator+(const MLaurent& o) const;
  MLaurent operator-(const MLaurent& o) const;
  MLaurent operator*(const MLaurent& o) const;
  MLaurent& operator+=(const MLaurent& o);
  MLaurent& operator-=(const MLaurent& o);
  MLaurent& operator*=(const MLaurent& o) { return *this = *this * o; }
  bool operator==(const MLaurent& o) const;
  bool operator!=(const MLaurent& o) const { return !(*this == o); }

  MLaurent scaled(const QRat& c) const;
  MLaurent mul_monomial(const Monomial& m, const QRat& c = QRat(1)) const;

  QRat coefficient(const Monomial& m) const;
  std::vector<std::pair<Monomial, QRat>> sorted_terms() const;  // desc order
  std::vector<VarId> vars() const;                              // sorted
  int min_exponent(VarId v) const;  // 0 when the variable is absent
  int max_exponent(VarId v) const;
  bool is_homogeneous(long* deg = nullptr) const;

  std::string str() const;

 private:
  Map t_;
};

// Simultaneous renaming; variables not in the map are kept.
MLaurent rename_vars(const MLaurent& p,
                     const std::map<VarId, VarId>& renaming);

// Substitute v -> scale * target for each mapped variable, i.e. v^e becomes
// scale^e * target^e.  Unmapped variables are kept.
MLaurent substitute_scaled(
    const MLaurent& p,
    const std::map<VarId, std::pair<VarId, QRat>>& assignment);

// Full evaluation; every variable of p must be assigned.
QRat evaluate(const MLaurent& p, const std::map<VarId, QRat>& assignment);

// Sum of p over all per-color permutations of the slots 1..n[color].
// Throws InputError if p mentions z_{c,a} with a > n[c] or c >= n.size().
MLaurent symmetrize(const MLaurent& p, const std::vector<int>& n);
MLaurent symmetrize_serial(const MLaurent& p, const std::vector<int>& n);

// Exact division p / d.  try_exact_div returns {quotient, remainder} with
// p = quotient * d + remainder; exact_div throws MathError when the
// remainder is nonzero, quoting a witness term.
std::pair<MLaurent, MLaurent> try_exact_div(const MLaurent& p,
                                            const MLaurent& d);
MLaurent exact_div(const MLaurent& p, const MLaurent& d);

// Fast path: divide by the binomial (va - c*vb); nullopt when not exact.
std::optional<MLaurent> exact_div_binomial(const MLaurent& p, VarId va,
                                           const QRat& c, VarId vb);

constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// Largest m with (va - vb)^m dividing p; kInfiniteOrder when p = 0.
int divisibility_order(const MLaurent& p, VarId va, VarId vb);
inline int divisibility_order(const MLaurent& p) {
  return divisibility_order(p, xvar(), yvar());
}

}  // namespace qloop
