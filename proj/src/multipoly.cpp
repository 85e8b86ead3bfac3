#include "qloop/multipoly.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qloop {

std::string var_str(VarId v) {
  std::ostringstream os;
  switch (v.color) {
    case kFamX:
      os << "x";
      if (v.slot != 0) os << "_" << v.slot;
      break;
    case kFamY:
      os << "y";
      if (v.slot != 0) os << "_" << v.slot;
      break;
    case kFamA:
      os << "a";
      break;
    case kFamB:
      os << "b";
      break;
    case kFamT:
      os << "t_" << v.slot;
      break;
    default:
      os << "z_{" << v.color << "," << v.slot << "}";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(VarId v, int exp) {
  Monomial m;
  if (exp != 0) m.f_.push_back({v, exp});
  return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<VarId, int>> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (auto& [v, e] : factors) {
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.push_back({v, e});
  }
  std::erase_if(m.f_, [](const auto& p) { return p.second == 0; });
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(
      f_.begin(), f_.end(), v,
      [](const auto& p, const VarId& x) { return p.first < x; });
  if (it != f_.end() && it->first == v) return it->second;
  return 0;
}

long Monomial::total_degree() const {
  long d = 0;
  for (auto& [v, e] : f_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      m.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      m.f_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) m.f_.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& [v, e] : m.f_) e = -e;
  return m;
}

Monomial Monomial::pow(int e) const {
  if (e == 0) return Monomial();
  Monomial m = *this;
  for (auto& [v, x] : m.f_) x *= e;
  return m;
}

size_t Monomial::hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto& [v, e] : f_) {
    uint64_t x = (static_cast<uint64_t>(static_cast<uint32_t>(v.color)) << 32) |
                 static_cast<uint32_t>(v.slot);
    x ^= static_cast<uint64_t>(static_cast<int64_t>(e)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    h ^= (x ^ (x >> 31)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, e] : f_) {
    if (!first) os << "*";
    first = false;
    os << var_str(v);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

bool monomial_graded_lex_less(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  auto ai = a.factors().begin(), ae = a.factors().end();
  auto bi = b.factors().begin(), be = b.factors().end();
  while (ai != ae || bi != be) {
    int ea, eb;
    if (bi == be || (ai != ae && ai->first < bi->first)) {
      ea = ai->second;
      eb = (bi != be && bi->first == ai->first) ? bi->second : 0;
      ++ai;
    } else if (ai == ae || bi->first < ai->first) {
      ea = 0;
      eb = bi->second;
      ++bi;
    } else {
      ea = ai->second;
      eb = bi->second;
      ++ai;
      ++bi;
    }
    if (ea != eb) return ea < eb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// MLaurent

MLaurent MLaurent::constant(const QRat& c) {
  MLaurent p;
  if (!c.is_zero()) p.t_.emplace(Monomial(), c);
  return p;
}

MLaurent MLaurent::var(VarId v, int exp) {
  return monomial(Monomial::var(v, exp));
}

MLaurent MLaurent::monomial(const Monomial& m, const QRat& c) {
  MLaurent p;
  if (!c.is_zero()) p.t_.emplace(m, c);
  return p;
}

void MLaurent::add_term(const Monomial& m, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MLaurent MLaurent::operator-() const {
  MLaurent r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MLaurent& MLaurent::operator+=(const MLaurent& o) {
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MLaurent& MLaurent::operator-=(const MLaurent& o) {
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MLaurent MLaurent::operator+(const MLaurent& o) const {
  MLaurent r = *this;
  r += o;
  return r;
}

MLaurent MLaurent::operator-(const MLaurent& o) const {
  MLaurent r = *this;
  r -= o;
  return r;
}

MLaurent MLaurent::operator*(const MLaurent& o) const {
  MLaurent r;
  r.t_.reserve(t_.size() * o.t_.size() / 2 + 1);
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

bool MLaurent::operator==(const MLaurent& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (auto& [m, c] : t_) {
    auto it = o.t_.find(m);
    if (it == o.t_.end() || it->second != c) return false;
  }
  return true;
}

MLaurent MLaurent::scaled(const QRat& c) const {
  if (c.is_zero()) return MLaurent();
  MLaurent r = *this;
  for (auto& [m, x] : r.t_) x *= c;
  return r;
}

MLaurent MLaurent::mul_monomial(const Monomial& m, const QRat& c) const {
  if (c.is_zero()) return MLaurent();
  MLaurent r;
  r.t_.reserve(t_.size());
  for (auto& [m1, c1] : t_) r.t_.emplace(m1 * m, c1 * c);
  return r;
}

QRat MLaurent::coefficient(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? QRat() : it->second;
}

std::vector<std::pair<Monomial, QRat>> MLaurent::sorted_terms() const {
  std::vector<std::pair<Monomial, QRat>> out(t_.begin(), t_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return monomial_graded_lex_less(b.first, a.first);
  });
  return out;
}

std::vector<VarId> MLaurent::vars() const {
  std::vector<VarId> out;
  for (auto& [m, c] : t_)
    for (auto& [v, e] : m.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MLaurent::min_exponent(VarId v) const {
  bool seen = false;
  int best = 0;
  for (auto& [m, c] : t_) {
    int e = m.exponent(v);
    if (!seen || e < best) best = e;
    seen = true;
  }
  return seen ? best : 0;
}

int MLaurent::max_exponent(VarId v) const {
  bool seen = false;
  int best = 0;
  for (auto& [m, c] : t_) {
    int e = m.exponent(v);
    if (!seen || e > best) best = e;
    seen = true;
  }
  return seen ? best : 0;
}

bool MLaurent::is_homogeneous(long* deg) const {
  bool seen = false;
  long d = 0;
  for (auto& [m, c] : t_) {
    long md = m.total_degree();
    if (!seen) {
      d = md;
      seen = true;
    } else if (md != d) {
      return false;
    }
  }
  if (deg) *deg = d;
  return true;
}

std::string MLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!m.is_one()) os << "*" << m.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// substitution

MLaurent rename_vars(const MLaurent& p,
                     const std::map<VarId, VarId>& renaming) {
  MLaurent out;
  for (auto& [m, c] : p.terms()) {
    std::vector<std::pair<VarId, int>> f;
    f.reserve(m.factors().size());
    for (auto& [v, e] : m.factors()) {
      auto it = renaming.find(v);
      f.push_back({it == renaming.end() ? v : it->second, e});
    }
    out.add_term(Monomial::from_pairs(std::move(f)), c);
  }
  return out;
}

MLaurent substitute_scaled(
    const MLaurent& p,
    const std::map<VarId, std::pair<VarId, QRat>>& assignment) {
  MLaurent out;
  for (auto& [m, c] : p.terms()) {
    QRat coef = c;
    std::vector<std::pair<VarId, int>> f;
    f.reserve(m.factors().size());
    for (auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        f.push_back({v, e});
      } else {
        coef *= it->second.second.pow(e);
        f.push_back({it->second.first, e});
      }
    }
    out.add_term(Monomial::from_pairs(std::move(f)), coef);
  }
  return out;
}

QRat evaluate(const MLaurent& p, const std::map<VarId, QRat>& assignment) {
  QRat out;
  for (auto& [m, c] : p.terms()) {
    QRat term = c;
    for (auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw InputError("evaluation missing a value for " + var_str(v));
      term *= it->second.pow(e);
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// symmetrization

namespace {

// All permutations, as images of (1..n) stored 0-based.
std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_profile(const MLaurent& p, const std::vector<int>& n) {
  for (auto& [m, c] : p.terms())
    for (auto& [v, e] : m.factors()) {
      if (v.color < 0) continue;
      if (v.color >= static_cast<int>(n.size()) || v.slot < 1 ||
          v.slot > n[v.color])
        throw InputError("variable " + var_str(v) +
                         " outside the declared slot range");
    }
}

// Renaming for one combined permutation choice; perm_colors lists the colors
// being permuted, sel picks a permutation index per such color.
std::map<VarId, VarId> perm_renaming(
    const std::vector<int>& perm_colors,
    const std::vector<std::vector<std::vector<int>>>& perms,
    const std::vector<int>& sel) {
  std::map<VarId, VarId> ren;
  for (size_t k = 0; k < perm_colors.size(); ++k) {
    const auto& img = perms[k][sel[k]];
    for (int a = 1; a <= static_cast<int>(img.size()); ++a)
      ren[zvar(perm_colors[k], a)] = zvar(perm_colors[k], img[a - 1]);
  }
  return ren;
}

}  // namespace

MLaurent symmetrize_serial(const MLaurent& p, const std::vector<int>& n) {
  check_profile(p, n);
  std::vector<int> perm_colors;
  std::vector<std::vector<std::vector<int>>> perms;
  long total = 1;
  for (int c = 0; c < static_cast<int>(n.size()); ++c)
    if (n[c] >= 2) {
      perm_colors.push_back(c);
      perms.push_back(all_perms(n[c]));
      total *= static_cast<long>(perms.back().size());
    }
  if (perm_colors.empty()) return p;
  MLaurent out;
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    std::vector<int> sel(perm_colors.size());
    for (size_t k = 0; k < perm_colors.size(); ++k) {
      sel[k] = static_cast<int>(rest % perms[k].size());
      rest /= static_cast<long>(perms[k].size());
    }
    out += rename_vars(p, perm_renaming(perm_colors, perms, sel));
  }
  return out;
}

MLaurent symmetrize(const MLaurent& p, const std::vector<int>& n) {
  check_profile(p, n);
  std::vector<int> perm_colors;
  std::vector<std::vector<std::vector<int>>> perms;
  long total = 1;
  for (int c = 0; c < static_cast<int>(n.size()); ++c)
    if (n[c] >= 2) {
      perm_colors.push_back(c);
      perms.push_back(all_perms(n[c]));
      total *= static_cast<long>(perms.back().size());
    }
  if (perm_colors.empty()) return p;
  MLaurent out;
#ifdef _OPENMP
  if (omp_get_max_threads() > 1 && total >= 8) {
    int nt = omp_get_max_threads();
    std::vector<MLaurent> partial(nt);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
      long rest = idx;
      std::vector<int> sel(perm_colors.size());
      for (size_t k = 0; k < perm_colors.size(); ++k) {
        sel[k] = static_cast<int>(rest % perms[k].size());
        rest /= static_cast<long>(perms[k].size());
      }
      partial[omp_get_thread_num()] +=
          rename_vars(p, perm_renaming(perm_colors, perms, sel));
    }
    for (auto& part : partial) out += part;
    return out;
  }
#endif
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    std::vector<int> sel(perm_colors.size());
    for (size_t k = 0; k < perm_colors.size(); ++k) {
      sel[k] = static_cast<int>(rest % perms[k].size());
      rest /= static_cast<long>(perms[k].size());
    }
    out += rename_vars(p, perm_renaming(perm_colors, perms, sel));
  }
  return out;
}

// ---------------------------------------------------------------------------
// division

namespace {

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_graded_lex_less(b, a);
  }
};

// Monomial to clear all negative exponents of p.
Monomial clearing_monomial(const MLaurent& p) {
  std::map<VarId, int> mins;
  for (auto& [m, c] : p.terms())
    for (auto& [v, e] : m.factors()) {
      auto [it, fresh] = mins.try_emplace(v, e);
      if (!fresh) it->second = std::min(it->second, e);
    }
  std::vector<std::pair<VarId, int>> f;
  for (auto& [v, e] : mins)
    if (e < 0) f.push_back({v, -e});
  return Monomial::from_pairs(std::move(f));
}

// True when a/b has no negative exponents.
bool monomial_divides(const Monomial& b, const Monomial& a) {
  for (auto& [v, e] : b.factors())
    if (a.exponent(v) < e) return false;
  return true;
}

}  // namespace

std::pair<MLaurent, MLaurent> try_exact_div(const MLaurent& p,
                                            const MLaurent& d) {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  if (p.is_zero()) return {MLaurent(), MLaurent()};

  // Fast path for binomial divisors va - c*vb.
  auto st = d.sorted_terms();
  if (st.size() == 2 && st[0].first.factors().size() == 1 &&
      st[1].first.factors().size() == 1 &&
      st[0].first.factors()[0].second == 1 &&
      st[1].first.factors()[0].second == 1 &&
      st[0].second == QRat(1)) {
    VarId va = st[0].first.factors()[0].first;
    VarId vb = st[1].first.factors()[0].first;
    auto q = exact_div_binomial(p, va, -st[1].second, vb);
    if (q.has_value()) return {*q, MLaurent()};
  }

  Monomial mp = clearing_monomial(p);
  Monomial md = clearing_monomial(d);
  std::map<Monomial, QRat, GradedLexGreater> work;
  MLaurent P = p.mul_monomial(mp);
  for (auto& [m, c] : P.terms()) work.emplace(m, c);
  MLaurent D = d.mul_monomial(md);
  auto dlead = D.sorted_terms().front();

  MLaurent quot, rem;
  while (!work.empty()) {
    auto [m, c] = *work.begin();
    work.erase(work.begin());
    if (monomial_divides(dlead.first, m)) {
      Monomial qm = m * dlead.first.inverse();
      QRat qc = c / dlead.second;
      quot.add_term(qm, qc);
      for (auto& [dm, dc] : D.terms()) {
        if (dm == dlead.first) continue;
        Monomial t = qm * dm;
        QRat v = -qc * dc;
        auto [it, fresh] = work.try_emplace(t, v);
        if (!fresh) {
          it->second += v;
          if (it->second.is_zero()) work.erase(it);
        }
      }
    } else {
      rem.add_term(m, c);
    }
  }
  return {quot.mul_monomial(md * mp.inverse()),
          rem.mul_monomial(mp.inverse())};
}

MLaurent exact_div(const MLaurent& p, const MLaurent& d) {
  auto [q, r] = try_exact_div(p, d);
  if (!r.is_zero()) {
    auto w = r.sorted_terms().front();
    throw MathError("inexact division, remainder term (" + w.second.str() +
                    ")*" + w.first.str());
  }
  return q;
}

std::optional<MLaurent> exact_div_binomial(const MLaurent& p, VarId va,
                                           const QRat& c, VarId vb) {
  if (va == vb || c.is_zero()) throw InputError("bad binomial divisor");
  if (p.is_zero()) return MLaurent();

  // Slice p by the exponent of va.
  std::map<int, MLaurent> slices;
  for (auto& [m, co] : p.terms()) {
    int e = m.exponent(va);
    slices[e].add_term(m * Monomial::var(va, -e), co);
  }
  int dmin = slices.begin()->first;
  int dmax = slices.rbegin()->first;

  MLaurent quot;
  MLaurent carry;  // Q_d while scanning d downward; starts as Q_{dmax} = 0
  Monomial vbm = Monomial::var(vb);
  for (int d = dmax; d >= dmin; --d) {
    MLaurent pd;
    auto it = slices.find(d);
    if (it != slices.end()) pd = std::move(it->second);
    MLaurent qprev = pd + carry.mul_monomial(vbm, c);  // Q_{d-1}
    if (d == dmin) {
      if (!qprev.is_zero()) return std::nullopt;
    } else {
      quot += qprev.mul_monomial(Monomial::var(va, d - 1));
    }
    carry = std::move(qprev);
  }
  return quot;
}

int divisibility_order(const MLaurent& p, VarId va, VarId vb) {
  if (p.is_zero()) return kInfiniteOrder;
  int order = 0;
  MLaurent cur = p;
  while (true) {
    auto q = exact_div_binomial(cur, va, QRat(1), vb);
    if (!q.has_value()) return order;
    ++order;
    cur = std::move(*q);
  }
}

}  // namespace qloop
