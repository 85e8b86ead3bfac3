#include "qloop/pairing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qloop/error.hpp"
#include "qloop/freealg.hpp"

namespace qloop {

namespace {

int position_of(const std::vector<VarId>& vars, VarId v) {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v) return static_cast<int>(i);
  return -1;
}

void validate_problem(const CTProblem& P) {
  std::set<VarId> distinct(P.vars.begin(), P.vars.end());
  if (distinct.size() != P.vars.size())
    throw InputError("constant term: repeated contour variable");
  for (VarId v : P.numerator.vars())
    if (position_of(P.vars, v) < 0)
      throw InputError("constant term: numerator variable " + var_str(v) +
                       " is not on the contour");
  for (const CTFactor& f : P.factors) {
    int pb = position_of(P.vars, f.big);
    int ps = position_of(P.vars, f.small);
    if (pb < 0 || ps < 0)
      throw InputError("constant term: factor variable is not on the contour");
    if (pb >= ps)
      throw InputError(
          "constant term: factor expansion direction fights the contour "
          "order");
    if (f.num.is_zero() || f.den.is_zero())
      throw InputError("constant term: degenerate kernel factor");
    for (const MLaurent* part : {&f.num, &f.den})
      for (VarId v : part->vars())
        if (!(v == f.big || v == f.small))
          throw InputError("constant term: kernel factor mentions " +
                           var_str(v) + " beyond its variable pair");
    if (!f.num.is_homogeneous() || !f.den.is_homogeneous())
      throw InputError("constant term: kernel factor is not homogeneous");
    if (f.num.min_exponent(f.small) != 0)
      throw InputError(
          "constant term: kernel has no pure power of the outer variable to "
          "lead the expansion");
  }
}

// Suffix exponent sums of m along the contour: phi[b] = sum of exponents at
// positions >= b.  Every series step moves degree from an earlier position
// to a later one, so each phi[b] (b >= 1) only ever grows, and phi[0] is
// invariant; the trivial monomial needs all of them zero.
std::vector<long> suffix_degrees(const Monomial& m,
                                 const std::vector<VarId>& vars) {
  const int n = static_cast<int>(vars.size());
  std::vector<long> per(n, 0), phi(n + 1, 0);
  for (const auto& [v, e] : m.factors()) per[position_of(vars, v)] = e;
  for (int b = n - 1; b >= 0; --b) phi[b] = phi[b + 1] + per[b];
  return phi;
}

bool monomial_alive(const Monomial& m, const std::vector<VarId>& vars,
                    const std::vector<long>& headroom) {
  std::vector<long> phi = suffix_degrees(m, vars);
  if (phi[0] != 0) return false;
  for (size_t b = 1; b < vars.size(); ++b)
    if (phi[b] > 0 || phi[b] < -headroom[b]) return false;
  return true;
}

QRat constant_term_at(const CTProblem& P, long extra) {
  const int n = static_cast<int>(P.vars.size());

  // Fold every polynomial part into one numerator: the denominators of the
  // reciprocal factors, and per factor the leading monomial 1/(c * big^e)
  // split off its geometric expansion.
  MLaurent N = P.numerator;
  struct Series {
    int pb = 0, ps = 0;          // contour positions of big / small
    std::vector<QRat> g;        // tail coefficients of 1 - num/(c big^e)
    long order = 0;             // truncation, filled once bounds are known
  };
  std::vector<Series> series;
  for (const CTFactor& f : P.factors) {
    long e = 0;
    f.num.is_homogeneous(&e);
    QRat c = f.num.coefficient(Monomial::var(f.big, static_cast<int>(e)));
    Series s;
    s.pb = position_of(P.vars, f.big);
    s.ps = position_of(P.vars, f.small);
    const auto& terms = f.num.terms();
    for (const auto& [m, a] : terms) {
      int j = m.exponent(f.small);
      if (j == 0) continue;
      if (static_cast<int>(s.g.size()) <= j) s.g.resize(j + 1);
      s.g[j] = s.g[j] - a / c;
    }
    series.push_back(std::move(s));
    N = N * f.den;
    N = N.mul_monomial(Monomial::var(f.big, static_cast<int>(-e)), c.inv());
  }
  if (N.is_zero()) return QRat();

  // Truncation bounds per contour boundary, from the numerator's suffix
  // degrees: a boundary can only be lifted back to zero by as much series
  // degree as the deepest numerator term hangs below it.
  std::vector<long> bound(n + 1, 0);
  {
    const auto& terms = N.terms();
    for (const auto& [m, c] : terms) {
      std::vector<long> phi = suffix_degrees(m, P.vars);
      for (int b = 1; b < n; ++b) bound[b] = std::max(bound[b], -phi[b]);
    }
    for (int b = 1; b < n; ++b) bound[b] += extra;
  }
  std::vector<long> headroom(n + 1, 0);
  for (Series& s : series) {
    s.order = bound[s.pb + 1];
    for (int b = s.pb + 1; b <= s.ps; ++b) s.order = std::min(s.order, bound[b]);
    for (int b = s.pb + 1; b <= s.ps; ++b) headroom[b] += s.order;
  }

  using Acc = std::unordered_map<Monomial, QRat, MonomialHash>;
  Acc acc;
  {
    const auto& terms = N.terms();
    for (const auto& [m, c] : terms)
      if (monomial_alive(m, P.vars, headroom)) acc.emplace(m, c);
  }

  for (const Series& s : series) {
    for (int b = s.pb + 1; b <= s.ps; ++b) headroom[b] -= s.order;
    // geometric series coefficients s_j of 1/(1 - G) up to the truncation
    std::vector<QRat> coef(s.order + 1);
    coef[0] = QRat(1);
    for (long j = 1; j <= s.order; ++j)
      for (size_t i = 1; i < s.g.size() && i <= static_cast<size_t>(j); ++i)
        coef[j] += s.g[i] * coef[j - i];
    Acc next;
    VarId big = P.vars[s.pb], small = P.vars[s.ps];
    for (const auto& [m, c] : acc)
      for (long j = 0; j <= s.order; ++j) {
        if (coef[j].is_zero()) continue;
        Monomial m2 = m * Monomial::var(big, static_cast<int>(-j)) *
                      Monomial::var(small, static_cast<int>(j));
        if (!monomial_alive(m2, P.vars, headroom)) continue;
        QRat& slot = next[m2];
        slot += c * coef[j];
        if (slot.is_zero()) next.erase(m2);
      }
    acc = std::move(next);
  }

  auto it = acc.find(Monomial());
  return it == acc.end() ? QRat() : it->second;
}

}  // namespace

QRat constant_term(const CTProblem& P, int extra) {
  if (extra < 0) throw InputError("constant term: negative widening");
  validate_problem(P);
  QRat value = constant_term_at(P, extra);
  QRat widened = constant_term_at(P, extra + 1);
  if (!(value == widened))
    throw MathError(
        "constant term changed under truncation widening; derived bound "
        "violated");
  return value;
}

namespace {

// Common per-word layout: slot assignment in word order, engine variable per
// position, and the sign from reorienting the cross-color denominator of the
// shuffle element against the kernel product.
struct WordLayout {
  std::vector<VarId> tv;   // engine variable of each word position
  MLaurent numerator;      // renamed numerator, letter monomial, sign
};

WordLayout layout_word(const CartanMatrix& C, const Word& w,
                       const ShufElem& R, bool ascending_contour) {
  const int n = static_cast<int>(w.size());
  WordLayout L;
  L.tv.resize(n);
  std::map<VarId, VarId> renaming;
  std::vector<int> used(C.size(), 0);
  for (int a = 0; a < n; ++a) {
    int i = w[a].color;
    ++used[i];
    L.tv[a] = tvar(ascending_contour ? n - a : a + 1);
    renaming[zvar(i, used[i])] = L.tv[a];
  }
  Monomial letters;
  for (int a = 0; a < n; ++a)
    letters = letters * Monomial::var(L.tv[a], w[a].k);
  // Reorienting the element's cross-color denominator factors against the
  // kernel product costs one sign per pair whose first color is on the
  // wrong side of the contour direction.
  int flips = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (w[a].color == w[b].color) continue;
      bool lower_first = w[a].color < w[b].color;
      if (lower_first != ascending_contour) ++flips;
    }
  L.numerator = rename_vars(R.num, renaming)
                    .mul_monomial(letters, flips % 2 ? QRat(-1) : QRat(1));
  return L;
}

QRat pair_word_uv(const CartanMatrix& C, const Word& w, const ShufElem& R) {
  const int n = static_cast<int>(w.size());
  WordLayout L = layout_word(C, w, R, /*ascending_contour=*/false);
  CTProblem P;
  P.vars = L.tv;
  P.numerator = std::move(L.numerator);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ZetaPair zp =
          instantiate(zeta(C, w[b].color, w[a].color), L.tv[b], L.tv[a]);
      bool same = w[a].color == w[b].color;
      P.factors.push_back({zp.num,
                           same ? zp.den : MLaurent::constant(QRat(1)),
                           L.tv[a], L.tv[b]});
    }
  return constant_term(P);
}

QRat pair_word_vu(const CartanMatrix& C, const ShufElem& R, const Word& w) {
  const int n = static_cast<int>(w.size());
  WordLayout L = layout_word(C, w, R, /*ascending_contour=*/true);
  CTProblem P;
  for (int c = 1; c <= n; ++c) P.vars.push_back(tvar(c));
  P.numerator = std::move(L.numerator);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ZetaPair zp =
          instantiate(zeta(C, w[a].color, w[b].color), L.tv[a], L.tv[b]);
      bool same = w[a].color == w[b].color;
      P.factors.push_back({zp.num,
                           same ? zp.den : MLaurent::constant(QRat(1)),
                           L.tv[b], L.tv[a]});
    }
  return constant_term(P);
}

void validate_shuffle_side(const CartanMatrix& C, const ShufElem& R,
                           int want_sgn) {
  if (R.sgn != want_sgn)
    throw InputError(want_sgn < 0
                         ? "pairing needs a negative-half shuffle element"
                         : "pairing needs a positive-half shuffle element");
  if (static_cast<int>(R.n.size()) != C.size())
    throw InputError("shuffle element colors do not match the matrix");
  if (!is_symmetric(R))
    throw InputError("shuffle element numerator is not symmetric");
}

}  // namespace

QRat pair_UV(const CartanMatrix& C, const FreeElem& x, const ShufElem& R) {
  validate_shuffle_side(C, R, -1);
  QRat total;
  const auto& terms = x.terms();
  for (const auto& [word, c] : terms) {
    if (word_dimension(word, C.size()) != R.n) continue;
    total += c * pair_word_uv(C, word, R);
  }
  return total;
}

QRat pair_VU(const CartanMatrix& C, const ShufElem& R, const FreeElem& y) {
  validate_shuffle_side(C, R, 1);
  QRat total;
  const auto& terms = y.terms();
  for (const auto& [word, c] : terms) {
    if (word_dimension(word, C.size()) != R.n) continue;
    total += c * pair_word_vu(C, R, word);
  }
  return total;
}

QRat pair_UU(const CartanMatrix& C, const FreeElem& x, const FreeElem& y) {
  if (x.is_zero() || y.is_zero()) return QRat();
  auto dx = x.dimension(C.size());
  auto dy = y.dimension(C.size());
  if (!dx || !dy)
    throw InputError("loop pairing needs dimension-homogeneous inputs");
  if (*dx != *dy) return QRat();
  long letters = 0;
  for (int v : *dx) letters += v;
  QRat base = QRat::q_power(-1) - QRat::q_power(1);
  return base.pow(-letters) * pair_UV(C, x, upsilon(C, y, -1));
}

Word leading_word(const ShufElem& R) {
  if (R.sgn != -1)
    throw InputError("leading words live on the negative half");
  if (R.num.is_zero()) throw InputError("leading word of the zero element");
  if (!is_symmetric(R))
    throw InputError("shuffle element numerator is not symmetric");
  const int nc = static_cast<int>(R.n.size());
  std::vector<int> mshift(nc, 0);
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) mshift[i] += R.n[j];

  // Each monomial of the cleared form contributes one multiset of
  // (color, weight) pairs; slot permutations of the symmetric numerator give
  // the same multiset, so duplicates are pruned before ordering enumeration.
  std::set<std::vector<std::pair<int, int>>> seen;
  Word best;
  bool have = false;
  const auto& terms = R.num.terms();
  for (const auto& [mon, c] : terms) {
    std::vector<std::pair<int, int>> arr;
    for (int i = 0; i < nc; ++i)
      for (int a = 1; a <= R.n[i]; ++a)
        arr.push_back({i, mshift[i] - mon.exponent(zvar(i, a))});
    std::sort(arr.begin(), arr.end());
    if (!seen.insert(arr).second) continue;
    do {
      Word cand;
      const int n = static_cast<int>(arr.size());
      for (int a = 0; a < n; ++a) {
        auto [col, l] = arr[a];
        int shift = 0;
        for (int s = 0; s < a; ++s)
          if (arr[s].first > col) --shift;
        for (int t = a + 1; t < n; ++t)
          if (arr[t].first < col) ++shift;
        cand.push_back({col, l + shift});
      }
      if (!have || word_less(best, cand)) {
        best = cand;
        have = true;
      }
    } while (std::next_permutation(arr.begin(), arr.end()));
  }
  return best;
}

ShufElem associated_polynomial(int ncolors, const Word& w) {
  if (ncolors <= 0) throw InputError("need at least one color");
  if (!non_increasing(w))
    throw InputError("associated polynomial needs a non-increasing word");
  std::vector<int> n = word_dimension(w, ncolors);
  std::vector<int> mshift(ncolors, 0);
  for (int i = 0; i < ncolors; ++i)
    for (int j = i + 1; j < ncolors; ++j) mshift[i] += n[j];

  std::vector<int> used(ncolors, 0);
  Monomial mu;
  const int len = static_cast<int>(w.size());
  for (int a = 0; a < len; ++a) {
    int col = w[a].color;
    int l = w[a].k;
    for (int s = 0; s < a; ++s)
      if (w[s].color > col) ++l;
    for (int t = a + 1; t < len; ++t)
      if (w[t].color < col) --l;
    ++used[col];
    mu = mu * Monomial::var(zvar(col, used[col]), mshift[col] - l);
  }
  MLaurent num = symmetrize(MLaurent::monomial(mu), n);
  return ShufElem{-1, std::move(n), std::move(num)};
}

}  // namespace qloop
