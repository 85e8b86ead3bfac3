#include "qloop/freealg.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "qloop/packed.hpp"
#include "qloop/shuffle.hpp"

namespace qloop {

bool letter_less(const Letter& a, const Letter& b) {
  if (a.k != b.k) return a.k > b.k;
  return a.color < b.color;
}

int word_compare(const Word& a, const Word& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t p = 0; p < n; ++p) {
    if (a[p] != b[p]) return letter_less(a[p], b[p]) ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool word_less(const Word& a, const Word& b) { return word_compare(a, b) < 0; }

std::vector<int> word_dimension(const Word& w, int ncolors) {
  std::vector<int> dim(ncolors, 0);
  for (const Letter& l : w) {
    if (l.color < 0 || l.color >= ncolors)
      throw InputError("word mentions color " + std::to_string(l.color) +
                       " outside 0.." + std::to_string(ncolors - 1));
    ++dim[l.color];
  }
  return dim;
}

long word_weight(const Word& w) {
  long s = 0;
  for (const Letter& l : w) s += l.k;
  return s;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w) {
    if (!first) os << ",";
    first = false;
    os << l.color << ":" << l.k;
  }
  return os.str();
}

FreeElem FreeElem::single(const Word& w, const QRat& c) {
  FreeElem e;
  e.add(w, c);
  return e;
}

void FreeElem::add(const Word& w, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FreeElem FreeElem::operator-() const {
  FreeElem e;
  for (auto& [w, c] : t_) e.t_.emplace(w, -c);
  return e;
}

FreeElem FreeElem::operator+(const FreeElem& o) const {
  FreeElem e = *this;
  return e += o;
}

FreeElem FreeElem::operator-(const FreeElem& o) const {
  FreeElem e = *this;
  return e -= o;
}

FreeElem& FreeElem::operator+=(const FreeElem& o) {
  for (auto& [w, c] : o.t_) add(w, c);
  return *this;
}

FreeElem& FreeElem::operator-=(const FreeElem& o) {
  for (auto& [w, c] : o.t_) add(w, -c);
  return *this;
}

FreeElem FreeElem::operator*(const FreeElem& o) const {
  FreeElem e;
  for (auto& [w1, c1] : t_)
    for (auto& [w2, c2] : o.t_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      e.add(w, c1 * c2);
    }
  return e;
}

FreeElem FreeElem::scaled(const QRat& c) const {
  FreeElem e;
  if (c.is_zero()) return e;
  for (auto& [w, co] : t_) e.t_.emplace(w, co * c);
  return e;
}

std::optional<std::vector<int>> FreeElem::dimension(int ncolors) const {
  std::optional<std::vector<int>> dim;
  for (auto& [w, c] : t_) {
    std::vector<int> d = word_dimension(w, ncolors);
    if (!dim)
      dim = std::move(d);
    else if (*dim != d)
      return std::nullopt;
  }
  return dim;
}

std::string FreeElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[" << word_str(w) << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// non-increasing words and straightening

namespace {

// Adjacent-pair instance of the non-increasing condition.
bool pair_ok(const Letter& x, const Letter& y) {
  int mixed = x.color != y.color ? 1 : 0;
  if (x.k < y.k + mixed) return true;
  return x.k == y.k + mixed && x.color >= y.color;
}

}  // namespace

bool non_increasing(const Word& w) {
  int n = static_cast<int>(w.size());
  for (int b = 0; b < n; ++b) {
    int cnt = 0;  // #{s in [a, b) : color_s != color_b}
    for (int a = b - 1; a >= 0; --a) {
      if (w[a].color != w[b].color) ++cnt;
      if (w[a].k < w[b].k + cnt) continue;
      if (w[a].k == w[b].k + cnt && w[a].color >= w[b].color) continue;
      return false;
    }
  }
  return true;
}

namespace {

struct StraightenCtx {
  const CartanMatrix& C;
  const StraightenOptions& opts;
  StraightenStats st;
  bool any_in = false, any_out = false;
  std::map<Word, FreeElem, WordLess> memo;

  void widen(const Word& w, bool input) {
    for (const Letter& l : w) {
      if (input) {
        if (!any_in) {
          st.in_min = st.in_max = l.k;
          any_in = true;
        } else {
          st.in_min = std::min(st.in_min, l.k);
          st.in_max = std::max(st.in_max, l.k);
        }
      }
      if (!any_out) {
        st.out_min = st.out_max = l.k;
        any_out = true;
      } else {
        st.out_min = std::min(st.out_min, l.k);
        st.out_max = std::max(st.out_max, l.k);
      }
    }
  }

  // Fully straightened expansion of one word.  Every replacement word is
  // strictly larger in lex order, so the recursion cannot revisit w.
  const FreeElem& nf(const Word& w) {
    auto it = memo.find(w);
    if (it != memo.end()) {
      ++st.memo_hits;
      return it->second;
    }
    widen(w, false);
    int best = -1;
    for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p) {
      if (pair_ok(w[p], w[p + 1])) continue;
      if (best < 0 || word_less({w[p], w[p + 1]}, {w[best], w[best + 1]}))
        best = p;
    }
    if (best < 0) {
      ++st.words_seen;
      return memo.emplace(w, FreeElem::single(w)).first->second;
    }
    if (st.rewrites >= opts.max_rewrites)
      throw BudgetError("straighten budget of " +
                        std::to_string(opts.max_rewrites) +
                        " rewrites exhausted; " +
                        std::to_string(memo.size()) +
                        " words resolved so far, expanding [" + word_str(w) +
                        "]");
    ++st.rewrites;
    Letter L1 = w[best], L2 = w[best + 1];
    std::vector<std::pair<std::array<Letter, 2>, QRat>> repl;
    if (L1.color == L2.color && L1.k == L2.k + 1) {
      // The third relation word equals the original here; solving for it
      // leaves a single strictly larger word.
      repl.push_back({{Letter{L1.color, L2.k}, Letter{L1.color, L1.k}},
                      QRat::q_power(2)});
    } else {
      QRat qd = QRat::q_power(C.d(L1.color, L2.color));
      repl.push_back(
          {{Letter{L1.color, L1.k - 1}, Letter{L2.color, L2.k + 1}}, qd});
      repl.push_back({{Letter{L2.color, L2.k}, Letter{L1.color, L1.k}}, qd});
      repl.push_back({{Letter{L2.color, L2.k + 1}, Letter{L1.color, L1.k - 1}},
                      QRat(-1)});
    }
    FreeElem out;
    for (auto& [pr, c] : repl) {
      Word w2 = w;
      w2[best] = pr[0];
      w2[best + 1] = pr[1];
      out += nf(w2).scaled(c);
    }
    ++st.words_seen;
    return memo.emplace(w, std::move(out)).first->second;
  }
};

}  // namespace

FreeElem straighten(const CartanMatrix& C, const FreeElem& x,
                    const StraightenOptions& opts, StraightenStats* stats) {
  StraightenCtx ctx{C, opts};
  FreeElem out;
  for (auto& [w, c] : x.terms()) {
    word_dimension(w, C.size());  // color-range validation
    ctx.widen(w, true);
    out += ctx.nf(w).scaled(c);
  }
  if (stats) *stats = ctx.st;
  return out;
}

// ---------------------------------------------------------------------------
// loop Serre sums

FreeElem serre_coefficient(const CartanMatrix& C, int i, int j,
                           const std::vector<int>& zdeg, int wdeg) {
  if (i == j) throw InputError("the Serre sum needs two distinct colors");
  int N = 1 - C.d(i, j);
  if (static_cast<int>(zdeg.size()) != N)
    throw InputError("the Serre multidegree needs " + std::to_string(N) +
                     " z-entries, got " + std::to_string(zdeg.size()));
  std::vector<int> idx(N);
  std::iota(idx.begin(), idx.end(), 0);
  FreeElem out;
  do {
    for (int k = 0; k <= N; ++k) {
      QRat c = q_binomial(N, k);
      if (k % 2) c = -c;
      Word w;
      w.reserve(N + 1);
      for (int r = 0; r < k; ++r) w.push_back({i, -zdeg[idx[r]]});
      w.push_back({j, -wdeg});
      for (int r = k; r < N; ++r) w.push_back({i, -zdeg[idx[r]]});
      out.add(w, c);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// ---------------------------------------------------------------------------
// zig-zag relation coefficients

namespace {

void validate_selection(const DistZigZag& Z, const std::vector<RefStep>& sel) {
  if (static_cast<int>(sel.size()) != Z.m)
    throw InputError("refined selection needs one step per trapezoid (" +
                     std::to_string(Z.m) + ")");
  for (int a = 0; a < Z.m; ++a) {
    const RefStep& st = sel[a];
    switch (st.kind) {
      case RefStep::SW:
      case RefStep::NW:
        break;
      case RefStep::Top:
        if (st.idx < 1 || st.idx > Z.k)
          throw InputError("top step index outside 1..k");
        break;
      case RefStep::Bot:
        if (st.idx < 1 || st.idx > Z.l)
          throw InputError("bottom step index outside 1..l");
        break;
      default:
        throw InputError("bad refined step kind");
    }
    if (a == 0) continue;
    bool down_side =
        sel[a - 1].kind == RefStep::SW || sel[a - 1].kind == RefStep::Top;
    bool ok = down_side
                  ? st.kind == RefStep::SW || st.kind == RefStep::Bot
                  : st.kind == RefStep::NW || st.kind == RefStep::Top;
    if (!ok)
      throw InputError("refined selection violates the step transitions at "
                       "trapezoid " +
                       std::to_string(a));
  }
}

}  // namespace

namespace {

// Validates the order against the complement edges and returns those edges.
std::vector<ZEdge> complement_edges(const ZigZagGraph& G,
                                    const std::map<ZEdge, int>& mu,
                                    const std::map<ZVert, int>& rank) {
  std::vector<ZEdge> comp;
  for (const ZEdge& e : G.edges) {
    auto it = mu.find(e);
    int m = it == mu.end() ? 0 : it->second;
    if (m == 0) {
      comp.push_back(e);
      if (rank.at(e.src) > rank.at(e.dst))
        throw InputError("order puts a complement edge source after its "
                         "target");
    }
  }
  return comp;
}

// Vertex-pair prefactor divided by the complement edge differences, generic
// sparse construction (reference path).
//
// For list positions u < v the vertex order[u] is the larger one; the sign
// counts pairs whose smaller vertex sits on the top row while the larger
// sits on the bottom row.  Pairs on a common row placed right-before-left
// contribute a further minus sign each: this normalizes the result so that
// all admissible orders produce the same element and the signed selection
// sum lands in the evaluation kernel.  The complement edge division uses
//   q^{src} z_src - q^{dst} z_dst = q^{src} (z_src - q^{dst-src} z_dst).
MLaurent eH_prefactor_generic(const CartanMatrix& C, const DistZigZag& Z,
                              const ZigZagGraph& G,
                              const std::map<ZEdge, int>& mu,
                              const std::vector<ZEdge>& comp,
                              const std::vector<ZVert>& order) {
  MLaurent num = MLaurent::constant(QRat(1));
  for (const ZEdge& e : G.edges) {
    auto it = mu.find(e);
    int m = it == mu.end() ? 0 : it->second;
    for (int r = 1; r < m; ++r) num *= edge_delta(e);
  }

  int sign = 1;
  for (size_t u = 0; u < order.size(); ++u)
    for (size_t v = u + 1; v < order.size(); ++v) {
      ZVert big = order[u], small = order[v];
      int csmall = small.top ? Z.i : Z.j;
      int cbig = big.top ? Z.i : Z.j;
      if (small.top && !big.top) sign = -sign;
      if (small.top == big.top && big.pos > small.pos) sign = -sign;
      num *= MLaurent::var(vert_var(small)) -
             MLaurent::var(vert_var(big))
                 .scaled(QRat::q_power(-C.d(csmall, cbig)));
    }
  if (sign < 0) num = -num;

  for (const ZEdge& e : comp) {
    auto quot = exact_div_binomial(num, vert_var(e.src),
                                   QRat::q_power(e.dst.pos - e.src.pos),
                                   vert_var(e.dst));
    if (!quot)
      throw MathError("zig-zag prefactor is not divisible by a complement "
                      "edge difference");
    num = quot->scaled(QRat::q_power(-e.src.pos));
  }
  return num;
}

// Same computation over the packed representation; throws
// packed::PackOverflow when the graph does not fit.
MLaurent eH_prefactor_packed(const CartanMatrix& C, const DistZigZag& Z,
                             const ZigZagGraph& G,
                             const std::map<ZEdge, int>& mu,
                             const std::vector<ZEdge>& comp,
                             const std::vector<ZVert>& order) {
  namespace pk = qloop::packed;
  if (G.verts.size() > 8) throw pk::PackOverflow{};
  pk::Ctx ctx;
  for (const ZVert& v : G.verts) ctx.lanes.push_back(vert_var(v));
  std::sort(ctx.lanes.begin(), ctx.lanes.end());

  std::vector<pk::Factor> factors;
  for (const ZEdge& e : G.edges) {
    auto it = mu.find(e);
    int m = it == mu.end() ? 0 : it->second;
    for (int r = 1; r < m; ++r) {
      pk::Factor f(2);
      f[0].lane1 = ctx.lane(vert_var(e.src));
      f[0].e1 = 1;
      f[0].qexp = e.src.pos;
      f[1].lane1 = ctx.lane(vert_var(e.dst));
      f[1].e1 = 1;
      f[1].qexp = e.dst.pos;
      f[1].qscale = -1;
      factors.push_back(std::move(f));
    }
  }

  int sign = 1;
  for (size_t u = 0; u < order.size(); ++u)
    for (size_t v = u + 1; v < order.size(); ++v) {
      ZVert big = order[u], small = order[v];
      int csmall = small.top ? Z.i : Z.j;
      int cbig = big.top ? Z.i : Z.j;
      if (small.top && !big.top) sign = -sign;
      if (small.top == big.top && big.pos > small.pos) sign = -sign;
      pk::Factor f(2);
      f[0].lane1 = ctx.lane(vert_var(small));
      f[0].e1 = 1;
      f[1].lane1 = ctx.lane(vert_var(big));
      f[1].e1 = 1;
      f[1].qexp = -C.d(csmall, cbig);
      f[1].qscale = -1;
      factors.push_back(std::move(f));
    }

  pk::Poly P;
  pk::ZPoly one;
  one.c = {1};
  pk::expand(P, pk::kLaneBias, one, factors, 0, sign);

  int qshift = 0;
  for (const ZEdge& e : comp) {
    if (!pk::div_binomial(P, ctx.lane(vert_var(e.src)),
                          ctx.lane(vert_var(e.dst)), e.dst.pos - e.src.pos, 1))
      throw MathError("zig-zag prefactor is not divisible by a complement "
                      "edge difference");
    qshift -= e.src.pos;
  }
  if (qshift != 0)
    for (auto& [k, c] : P) c.lo += qshift;
  return pk::unpack(P, ctx);
}

MLaurent eH_prefactor(const CartanMatrix& C, const DistZigZag& Z,
                      const ZigZagGraph& G, const std::map<ZEdge, int>& mu,
                      const std::vector<ZEdge>& comp,
                      const std::vector<ZVert>& order) {
  try {
    return eH_prefactor_packed(C, Z, G, mu, comp, order);
  } catch (const packed::PackOverflow&) {
    return eH_prefactor_generic(C, Z, G, mu, comp, order);
  }
}

FreeElem extract_words(const DistZigZag& Z, const std::vector<ZVert>& verts,
                       const std::vector<ZVert>& order, const MLaurent& num,
                       const std::vector<int>& multidegree) {
  std::map<ZVert, int> degidx;
  for (size_t p = 0; p < verts.size(); ++p)
    degidx[verts[p]] = static_cast<int>(p);
  FreeElem out;
  for (auto& [mono, c] : num.terms()) {
    Word w;
    w.reserve(order.size());
    for (const ZVert& vtx : order) {
      int color = vtx.top ? Z.i : Z.j;
      int k = mono.exponent(vert_var(vtx)) - multidegree[degidx[vtx]];
      w.push_back({color, k});
    }
    out.add(w, c);
  }
  return out;
}

}  // namespace

FreeElem eH_coefficient_ordered(const CartanMatrix& C, const DistZigZag& Z,
                                const std::vector<RefStep>& sel,
                                const std::vector<int>& multidegree,
                                const std::vector<ZVert>& order) {
  Z.validate(C);
  validate_selection(Z, sel);
  ZigZagGraph G = zigzag_graph(Z);
  if (multidegree.size() != G.verts.size())
    throw InputError("multidegree needs one entry per zig-zag vertex (" +
                     std::to_string(G.verts.size()) + ")");
  if (order.size() != G.verts.size())
    throw InputError("descending order needs every zig-zag vertex exactly "
                     "once");
  std::map<ZVert, int> rank;
  for (size_t p = 0; p < order.size(); ++p)
    if (!rank.emplace(order[p], static_cast<int>(p)).second)
      throw InputError("descending order repeats a vertex");
  for (const ZVert& v : G.verts)
    if (!rank.count(v)) throw InputError("descending order misses a vertex");

  std::map<ZEdge, int> mu = selection_multiplicities(Z, sel);
  std::vector<ZEdge> comp = complement_edges(G, mu, rank);
  MLaurent num = eH_prefactor(C, Z, G, mu, comp, order);
  return extract_words(Z, G.verts, order, num, multidegree);
}

FreeElem eH_coefficient(const CartanMatrix& C, const DistZigZag& Z,
                        const std::vector<RefStep>& sel,
                        const std::vector<int>& multidegree) {
  Z.validate(C);
  validate_selection(Z, sel);
  ZigZagGraph G = zigzag_graph(Z);
  std::map<ZEdge, int> mu = selection_multiplicities(Z, sel);
  std::vector<ZEdge> comp;
  for (const ZEdge& e : G.edges)
    if (!mu.count(e)) comp.push_back(e);
  std::vector<ZVert> order = topological_order(G.verts, comp);
  return eH_coefficient_ordered(C, Z, sel, multidegree, order);
}

RhoExpansion rho_expansion(const CartanMatrix& C, const DistZigZag& Z) {
  Z.validate(C);
  RhoExpansion exp;
  exp.zz = Z;
  ZigZagGraph G = zigzag_graph(Z);
  exp.verts = G.verts;
  for (auto& sel : refined_selections(Z)) {
    std::map<ZEdge, int> mu = selection_multiplicities(Z, sel);
    std::vector<ZEdge> comp;
    for (const ZEdge& e : G.edges)
      if (!mu.count(e)) comp.push_back(e);
    RhoExpansion::Part part;
    part.order = topological_order(G.verts, comp);
    part.num = eH_prefactor(C, Z, G, mu, comp, part.order);
    if (refined_sigma(sel) % 2) part.num = -part.num;
    exp.parts.push_back(std::move(part));
  }
  return exp;
}

FreeElem RhoExpansion::coefficient(const std::vector<int>& multidegree) const {
  if (multidegree.size() != verts.size())
    throw InputError("multidegree needs one entry per zig-zag vertex (" +
                     std::to_string(verts.size()) + ")");
  FreeElem out;
  for (const Part& part : parts)
    out += extract_words(zz, verts, part.order, part.num, multidegree);
  return out;
}

FreeElem rho_coefficient(const CartanMatrix& C, const DistZigZag& Z,
                         const std::vector<int>& multidegree) {
  return rho_expansion(C, Z).coefficient(multidegree);
}

namespace {

std::map<VarId, QRat> tau_eval_point(const DistZigZag& Z) {
  std::map<VarId, QRat> at;
  int mid_top = (Z.s + Z.t()) / 2;
  int mid_bot = (Z.sp() + Z.tp()) / 2;
  for (const ZVert& v : zigzag_graph(Z).verts)
    at[vert_var(v)] = QRat::q_power((v.top ? mid_top : mid_bot) - v.pos);
  return at;
}

}  // namespace

bool tau_generic(const DistZigZag& Z, const MLaurent& tau) {
  return !evaluate(tau, tau_eval_point(Z)).is_zero();
}

FreeElem rho_tau(const CartanMatrix& C, const DistZigZag& Z,
                 const MLaurent& tau) {
  RhoExpansion exp = rho_expansion(C, Z);
  std::map<VarId, int> degidx;
  for (size_t p = 0; p < exp.verts.size(); ++p)
    degidx[vert_var(exp.verts[p])] = static_cast<int>(p);
  FreeElem out;
  for (auto& [mono, c] : tau.terms()) {
    std::vector<int> deg(exp.verts.size(), 0);
    for (auto& [v, e] : mono.factors()) {
      auto it = degidx.find(v);
      if (it == degidx.end())
        throw InputError("window polynomial mentions " + var_str(v) +
                         ", which is not a vertex variable of the zig-zag");
      deg[it->second] = -e;
    }
    out += exp.coefficient(deg).scaled(c);
  }
  return out;
}

OrderCheckReport order_independence_check(const CartanMatrix& C,
                                          const DistZigZag& Z,
                                          const std::vector<RefStep>& sel,
                                          const std::vector<int>& multidegree,
                                          const std::vector<ZVert>& order1,
                                          const std::vector<ZVert>& order2) {
  FreeElem a = eH_coefficient_ordered(C, Z, sel, multidegree, order1);
  FreeElem b = eH_coefficient_ordered(C, Z, sel, multidegree, order2);
  OrderCheckReport rep;
  rep.difference = straighten(C, a - b);
  rep.ok = rep.difference.is_zero();
  return rep;
}

// ---------------------------------------------------------------------------
// two-letter relation extractions

namespace {

FreeElem quad_extraction(const CartanMatrix& C, int i, int j, int kk, int ll,
                         bool monomial_kernel) {
  if (i == j)
    throw InputError("the two-letter relation needs two distinct colors");
  int d = C.d(i, j);
  VarId vz = xvar(0), vw = yvar(0);
  MLaurent P1 = MLaurent::constant(QRat(1));
  MLaurent P2 = MLaurent::constant(QRat(1));
  if (monomial_kernel) {
    for (int c = 0; c < -d; ++c) {
      QRat qe = QRat::q_power(2 * c + d);
      P1 *= MLaurent::var(vz) - MLaurent::var(vw).scaled(qe);
      P2 *= MLaurent::var(vz).scaled(qe) - MLaurent::var(vw);
    }
  } else {
    QRat qd = QRat::q_power(d);
    P1 = MLaurent::var(vz) - MLaurent::var(vw).scaled(qd);
    P2 = MLaurent::var(vz).scaled(qd) - MLaurent::var(vw);
  }
  FreeElem out;
  for (auto& [mono, c] : P1.terms()) {
    Word w{{i, kk + mono.exponent(vz)}, {j, ll + mono.exponent(vw)}};
    out.add(w, c);
  }
  for (auto& [mono, c] : P2.terms()) {
    Word w{{j, ll + mono.exponent(vw)}, {i, kk + mono.exponent(vz)}};
    out.add(w, -c);
  }
  return out;
}

}  // namespace

FreeElem quad_modified_extraction(const CartanMatrix& C, int i, int j, int kk,
                                  int ll) {
  return quad_extraction(C, i, j, kk, ll, true);
}

FreeElem quad_trig_extraction(const CartanMatrix& C, int i, int j, int kk,
                              int ll) {
  return quad_extraction(C, i, j, kk, ll, false);
}

QuadModifiedReport quad_modified_check(const CartanMatrix& C, int i, int j,
                                       int k0, int k1, int l0, int l1) {
  QuadModifiedReport rep;
  for (int kk = k0; kk <= k1; ++kk)
    for (int ll = l0; ll <= l1; ++ll) {
      GeomElem img =
          upsilon_geom(C, quad_modified_extraction(C, i, j, kk, ll));
      if (!img.p.is_zero()) {
        rep.ok = false;
        rep.witness = {kk, ll};
        return rep;
      }
    }
  return rep;
}

KoszulClassReport koszul_quotient_class(const CartanMatrix& C, int i, int j,
                                        const FreeElem& x) {
  if (i == j) throw InputError("the quotient class needs two distinct colors");
  int d = C.d(i, j);
  VarId l1 = tvar(0), l2 = tvar(1);
  MLaurent f, g;
  for (auto& [wd, c] : x.terms()) {
    if (wd.size() != 2)
      throw InputError("the quotient class is defined for two-letter words");
    const Letter& a = wd[0];
    const Letter& b = wd[1];
    if (a.color == i && b.color == j)
      f += (MLaurent::var(l2, a.k) * MLaurent::var(l1, b.k)).scaled(c);
    else if (a.color == j && b.color == i)
      g += (MLaurent::var(l2, b.k) * MLaurent::var(l1, a.k)).scaled(c);
    else
      throw InputError("each word must use each of the two colors once");
  }

  // Cleared gluing polynomials; the single class generator is, up to
  // monomial units folded into the membership equation below,
  // (p1c, (-1)^{d+1} p2c).
  MLaurent p1c = MLaurent::constant(QRat(1));
  MLaurent p2c = MLaurent::constant(QRat(1));
  MLaurent u = MLaurent::constant(QRat(1));
  for (int c = 0; c <= -d - 1; ++c) {
    MLaurent f1 = MLaurent::var(l2) -
                  MLaurent::var(l1).scaled(QRat::q_power(2 * c + d));
    MLaurent f2 = MLaurent::var(l1) -
                  MLaurent::var(l2).scaled(QRat::q_power(2 * c + d));
    p1c *= f1;
    p2c *= f2;
    if (c >= 1) u *= f1;
  }
  QRat s = (std::abs(d + 1) % 2 == 0) ? QRat(1) : QRat(-1);
  auto member = [&](const MLaurent& fa, const MLaurent& ga) {
    if (fa.is_zero()) return ga.is_zero();
    auto [h, rem] = try_exact_div(fa, p1c);
    if (!rem.is_zero()) return false;
    return ga == h.scaled(s) * p2c;
  };
  KoszulClassReport rep;
  rep.zero = member(f, g);
  rep.complement_annihilates = member(f * u, g * u);
  return rep;
}

}  // namespace qloop
