#include "qloop/shuffle.hpp"

#include <functional>

#include "qloop/packed.hpp"

namespace qloop {

namespace pk = qloop::packed;

namespace {

bool g_mutate_kernel = false;

void check_arity(const CartanMatrix& C, const std::vector<int>& n) {
  if (static_cast<int>(n.size()) != C.size())
    throw InputError("dimension vector has " + std::to_string(n.size()) +
                     " entries for a Cartan matrix of size " +
                     std::to_string(C.size()));
  for (int v : n)
    if (v < 0) throw InputError("dimension vector entries must be >= 0");
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int room = k - static_cast<int>(cur.size());
    for (int v = start; v <= n - room + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Laurent factor carrying one geometric kernel for a cross-color pair
// (v on the left, u on the right), with the monomial denominator folded in
// as negative exponents.
MLaurent geom_cross_factor(const CartanMatrix& C, VarId v, VarId u) {
  ZetaPair zp = instantiate(zeta_geom(C, v.color, u.color), v, u);
  auto den = zp.den.sorted_terms();
  if (den.size() != 1)
    throw MathError("geometric kernel denominator is not a monomial");
  return zp.num.mul_monomial(den[0].first.inverse(), den[0].second.inv());
}

// One linear factor (v1 - c * v2) to be expanded over a term list.
struct BinFactor {
  VarId v1, v2;
  QRat c;
};

// base * prod(v1 - c*v2), expanded in one pass per base term instead of one
// full polynomial multiplication per factor.
void expand_binomials(const MLaurent& base, const std::vector<BinFactor>& bins,
                      const QRat& scale, MLaurent& out) {
  const auto& terms = base.terms();
  std::vector<std::pair<Monomial, QRat>> stack;
  for (const auto& [m0, c0] : terms) {
    stack.clear();
    stack.push_back({m0, c0 * scale});
    for (const BinFactor& f : bins) {
      size_t cnt = stack.size();
      for (size_t k = 0; k < cnt; ++k) {
        auto [m, c] = stack[k];
        stack[k] = {m * Monomial::var(f.v1), c};
        stack.push_back({m * Monomial::var(f.v2), -(c * f.c)});
      }
    }
    for (auto& [m, c] : stack) out.add_term(m, c);
  }
}

// One way of splitting the slots 1..nn[i] of each color between the left
// factor (aset) and the right factor (bset), order preserved on both sides.
struct Interleaving {
  std::vector<VarId> avars, bvars;
  std::vector<std::vector<int>> aset, bset;
};

std::vector<Interleaving> enumerate_interleavings(
    int nc, const std::vector<int>& nn,
    const std::vector<std::vector<std::vector<int>>>& combs) {
  std::vector<Interleaving> out;
  std::vector<size_t> idx(nc, 0);
  while (true) {
    Interleaving iv;
    iv.aset.resize(nc);
    iv.bset.resize(nc);
    for (int i = 0; i < nc; ++i) {
      const std::vector<int>& sel = combs[i][idx[i]];
      std::vector<bool> taken(nn[i] + 1, false);
      for (int s : sel) taken[s] = true;
      iv.aset[i] = sel;
      for (int s = 1; s <= nn[i]; ++s)
        if (!taken[s]) iv.bset[i].push_back(s);
      for (int s : iv.aset[i]) iv.avars.push_back(zvar(i, s));
      for (int s : iv.bset[i]) iv.bvars.push_back(zvar(i, s));
    }
    out.push_back(std::move(iv));
    int carry = nc - 1;
    while (carry >= 0 && ++idx[carry] == combs[carry].size()) {
      idx[carry] = 0;
      --carry;
    }
    if (carry < 0) break;
  }
  return out;
}

MLaurent mul_core_packed(const CartanMatrix& C, const MLaurent& anum,
                         const std::vector<int>& na, const MLaurent& bnum,
                         const std::vector<int>& nb, int sgn, bool geom,
                         const std::vector<int>& nn,
                         const std::vector<bool>& active,
                         const std::vector<Interleaving>& ivs,
                         const pk::Ctx& ctx) {
  int nc = C.size();
  auto apoly = pk::pack_poly(anum, ctx);
  auto bpoly = pk::pack_poly(bnum, ctx);

  pk::Poly total;
  for (const Interleaving& iv : ivs) {
    int permA[8], permB[8];
    for (int l = 0; l < 8; ++l) permA[l] = permB[l] = l;
    for (int i = 0; i < nc; ++i) {
      int nai = static_cast<int>(iv.aset[i].size());
      int nbi = static_cast<int>(iv.bset[i].size());
      for (int t = 0; t < nai; ++t) {
        permA[ctx.lane(zvar(i, t + 1))] = ctx.lane(zvar(i, iv.aset[i][t]));
        permB[ctx.lane(zvar(i, nbi + t + 1))] = ctx.lane(zvar(i, iv.aset[i][t]));
      }
      for (int t = 0; t < nbi; ++t) {
        permA[ctx.lane(zvar(i, nai + t + 1))] = ctx.lane(zvar(i, iv.bset[i][t]));
        permB[ctx.lane(zvar(i, t + 1))] = ctx.lane(zvar(i, iv.bset[i][t]));
      }
    }

    std::vector<pk::Factor> pfs;
    int sign = 1;
    for (VarId v : iv.avars)
      for (VarId u : iv.bvars) {
        if (geom && v.color != u.color) {
          MLaurent f = geom_cross_factor(C, v, u);
          pk::Factor pf;
          for (auto& [m, c] : f.terms()) {
            pk::FactorTerm t;
            std::tie(t.qexp, t.qscale) = pk::to_qmono(c);
            for (auto& [var, e] : m.factors()) {
              if (var == v) {
                t.lane1 = ctx.lane(v);
                t.e1 = e;
              } else if (var == u) {
                t.lane2 = ctx.lane(u);
                t.e2 = e;
              } else {
                throw pk::PackOverflow{};
              }
            }
            pf.push_back(t);
          }
          pfs.push_back(std::move(pf));
          continue;
        }
        int d = C.d(v.color, u.color);
        VarId p1 = v, p2 = u;
        if (sgn < 0) std::swap(p1, p2);
        pk::Factor pf(2);
        pf[0].lane1 = ctx.lane(p1);
        pf[0].e1 = 1;
        pf[1].lane1 = ctx.lane(p2);
        pf[1].e1 = 1;
        pf[1].qexp = -d;
        pf[1].qscale = g_mutate_kernel ? 1 : -1;
        pfs.push_back(std::move(pf));
        bool flip = (v.color == u.color) ? p1.slot > p2.slot : p1.color > p2.color;
        if (flip) sign = -sign;
      }

    for (int i = 0; i < nc; ++i) {
      if (!active[i]) continue;
      for (const std::vector<int>& side : {iv.aset[i], iv.bset[i]})
        for (size_t a = 0; a < side.size(); ++a)
          for (size_t b = a + 1; b < side.size(); ++b) {
            pk::Factor pf(2);
            pf[0].lane1 = ctx.lane(zvar(i, side[a]));
            pf[0].e1 = 1;
            pf[1].lane1 = ctx.lane(zvar(i, side[b]));
            pf[1].e1 = 1;
            pf[1].qscale = -1;
            pfs.push_back(std::move(pf));
          }
    }

    for (auto& [ka, ca] : apoly) {
      uint64_t kas = pk::shuffle_key(ka, permA);
      for (auto& [kb, cb] : bpoly) {
        uint64_t base = pk::combine_keys(kas, pk::shuffle_key(kb, permB));
        pk::ZPoly prod = pk::zmul(ca, cb);
        pk::expand(total, base, prod, pfs, 0, sign);
      }
    }
  }

  for (int i = 0; i < nc; ++i) {
    if (!active[i]) continue;
    for (int a = 1; a <= nn[i]; ++a)
      for (int b = a + 1; b <= nn[i]; ++b)
        if (!pk::div_binomial(total, ctx.lane(zvar(i, a)),
                              ctx.lane(zvar(i, b)), 0, 1))
          throw MathError(
              "shuffle product numerator not divisible by the symmetric "
              "denominator");
  }

  return pk::unpack(total, ctx);
}

MLaurent mul_core_generic(const CartanMatrix& C, const MLaurent& anum,
                          const MLaurent& bnum, int sgn, bool geom, int nc,
                          const std::vector<int>& nn,
                          const std::vector<bool>& active,
                          const std::vector<Interleaving>& ivs) {
  MLaurent total;
  for (const Interleaving& iv : ivs) {
    std::map<VarId, VarId> mapa, mapb;
    for (int i = 0; i < nc; ++i) {
      for (size_t a = 0; a < iv.aset[i].size(); ++a)
        mapa[zvar(i, static_cast<int>(a) + 1)] = zvar(i, iv.aset[i][a]);
      for (size_t b = 0; b < iv.bset[i].size(); ++b)
        mapb[zvar(i, static_cast<int>(b) + 1)] = zvar(i, iv.bset[i][b]);
    }

    MLaurent term = rename_vars(anum, mapa) * rename_vars(bnum, mapb);
    std::vector<BinFactor> bins;
    int sign = 1;
    for (VarId v : iv.avars)
      for (VarId u : iv.bvars) {
        if (geom && v.color != u.color) {
          term *= geom_cross_factor(C, v, u);
          continue;
        }
        int d = C.d(v.color, u.color);
        VarId p1 = v, p2 = u;
        if (sgn < 0) std::swap(p1, p2);
        QRat c = QRat::q_power(-d);
        if (g_mutate_kernel) c = -c;
        bins.push_back({p1, p2, c});
        bool flip = (v.color == u.color) ? p1.slot > p2.slot : p1.color > p2.color;
        if (flip) sign = -sign;
      }

    // same-color denominator factors not supplied by the kernels
    for (int i = 0; i < nc; ++i) {
      if (!active[i]) continue;
      for (const std::vector<int>& side : {iv.aset[i], iv.bset[i]})
        for (size_t a = 0; a < side.size(); ++a)
          for (size_t b = a + 1; b < side.size(); ++b)
            bins.push_back({zvar(i, side[a]), zvar(i, side[b]), QRat(1)});
    }

    expand_binomials(term, bins, sign < 0 ? QRat(-1) : QRat(1), total);
  }

  for (int i = 0; i < nc; ++i) {
    if (!active[i]) continue;
    for (int a = 1; a <= nn[i]; ++a)
      for (int b = a + 1; b <= nn[i]; ++b) {
        auto quot = exact_div_binomial(total, zvar(i, a), QRat(1), zvar(i, b));
        if (!quot)
          throw MathError(
              "shuffle product numerator not divisible by the symmetric "
              "denominator");
        total = std::move(*quot);
      }
  }
  return total;
}

// Shared core of the trigonometric and geometric products: sum over
// order-preserving interleavings of the slots of each color, one kernel
// factor per left/right variable pair, everything over the fully cleared
// denominator; the same-color part is then divided back out exactly.  Only
// colors with slots on both sides need the clearing: for a color wholly on
// one side there is just one interleaving and nothing to divide.
MLaurent mul_core(const CartanMatrix& C, const MLaurent& anum,
                  const std::vector<int>& na, const MLaurent& bnum,
                  const std::vector<int>& nb, int sgn, bool geom) {
  int nc = C.size();
  std::vector<int> nn(nc);
  std::vector<bool> active(nc);
  int slots = 0;
  for (int i = 0; i < nc; ++i) {
    nn[i] = na[i] + nb[i];
    active[i] = na[i] > 0 && nb[i] > 0;
    slots += nn[i];
  }
  if (anum.is_zero() || bnum.is_zero()) return MLaurent();

  std::vector<std::vector<std::vector<int>>> combs(nc);
  for (int i = 0; i < nc; ++i) combs[i] = combinations(nn[i], na[i]);
  std::vector<Interleaving> ivs = enumerate_interleavings(nc, nn, combs);

  if (slots <= 8) {
    pk::Ctx ctx;
    for (int i = 0; i < nc; ++i)
      for (int s = 1; s <= nn[i]; ++s) ctx.lanes.push_back(zvar(i, s));
    try {
      return mul_core_packed(C, anum, na, bnum, nb, sgn, geom, nn, active, ivs,
                             ctx);
    } catch (const pk::PackOverflow&) {
      // exponents or variables out of packing range: redo generically
    }
  }
  return mul_core_generic(C, anum, bnum, sgn, geom, nc, nn, active, ivs);
}

}  // namespace

void set_kernel_mutation(bool on) { g_mutate_kernel = on; }

ShufElem shuf_zero(int sgn, int ncolors) {
  if (sgn != 1 && sgn != -1) throw InputError("sign must be +1 or -1");
  if (ncolors < 0) throw InputError("negative number of colors");
  return {sgn, std::vector<int>(ncolors, 0), MLaurent()};
}

ShufElem shuf_unit(int sgn, int ncolors) {
  ShufElem e = shuf_zero(sgn, ncolors);
  e.num = MLaurent::constant(QRat(1));
  return e;
}

ShufElem shuf_generator(int sgn, int ncolors, int color, int kexp) {
  ShufElem e = shuf_zero(sgn, ncolors);
  if (color < 0 || color >= ncolors)
    throw InputError("generator color out of range");
  e.n[color] = 1;
  e.num = MLaurent::var(zvar(color, 1), kexp);
  return e;
}

long total_size(const std::vector<int>& n) {
  long s = 0;
  for (int v : n) s += v;
  return s;
}

bool is_symmetric(const ShufElem& R) {
  for (int i = 0; i < static_cast<int>(R.n.size()); ++i)
    for (int a = 1; a < R.n[i]; ++a) {
      std::map<VarId, VarId> swap{{zvar(i, a), zvar(i, a + 1)},
                                  {zvar(i, a + 1), zvar(i, a)}};
      if (rename_vars(R.num, swap) != R.num) return false;
    }
  return true;
}

ShufElem shuffle_mul(const CartanMatrix& C, const ShufElem& A,
                     const ShufElem& B) {
  check_arity(C, A.n);
  check_arity(C, B.n);
  if (A.sgn != B.sgn)
    throw InputError("shuffle product needs matching signs");
  if (!is_symmetric(A) || !is_symmetric(B))
    throw InputError("shuffle product needs symmetric numerators");
  ShufElem out;
  out.sgn = A.sgn;
  out.n.resize(C.size());
  for (int i = 0; i < C.size(); ++i) out.n[i] = A.n[i] + B.n[i];
  out.num = mul_core(C, A.num, A.n, B.num, B.n, A.sgn, false);
  return out;
}

ShufElem upsilon(const CartanMatrix& C, const FreeElem& x, int sgn) {
  int nc = C.size();
  if (x.is_zero()) return shuf_zero(sgn, nc);
  auto dim = x.dimension(nc);
  if (!dim) throw InputError("upsilon needs words of one common degree");
  long weight = word_weight(x.terms().begin()->first);
  for (auto& [wd, c] : x.terms())
    if (word_weight(wd) != weight)
      throw InputError("upsilon needs words of one common degree");

  // Words are evaluated left to right, but merged by their unevaluated
  // suffix: all prefixes sharing a suffix are summed into one numerator
  // before the next generator is multiplied on, so the expensive long-prefix
  // products happen once per distinct suffix rather than once per word.
  size_t len = x.terms().begin()->first.size();
  std::map<Word, MLaurent> layer;
  for (auto& [wd, c] : x.terms())
    layer[wd].add_term(Monomial(), c);
  for (size_t step = 0; step < len; ++step) {
    std::map<Word, MLaurent> next;
    for (auto& [suf, num] : layer) {
      Letter g = suf.front();
      std::vector<int> pre_n = *dim;
      for (const Letter& l : suf) --pre_n[l.color];
      std::vector<int> gen_n(nc, 0);
      if (g.color < 0 || g.color >= nc)
        throw InputError("generator color out of range");
      gen_n[g.color] = 1;
      MLaurent gen_num = MLaurent::var(zvar(g.color, 1), g.k);
      // mul_core output is symmetrized over interleavings and sums of
      // equal-arity symmetric numerators stay symmetric, so the symmetry
      // validation of shuffle_mul is skipped inside the sweep.
      next[Word(suf.begin() + 1, suf.end())] +=
          mul_core(C, num, pre_n, gen_num, gen_n, sgn, false);
    }
    layer = std::move(next);
  }

  ShufElem out;
  out.sgn = sgn;
  out.n = *dim;
  out.num = std::move(layer[Word{}]);
  return out;
}

ShufElem invert_variables(const ShufElem& R) {
  ShufElem out;
  out.sgn = -R.sgn;
  out.n = R.n;
  int nc = static_cast<int>(R.n.size());
  long cross = 0;
  std::vector<std::pair<VarId, int>> shift;
  for (int i = 0; i < nc; ++i) {
    int other = 0;
    for (int j = 0; j < nc; ++j)
      if (j != i) other += R.n[j];
    for (int j = i + 1; j < nc; ++j) cross += long(R.n[i]) * R.n[j];
    if (other != 0)
      for (int a = 1; a <= R.n[i]; ++a) shift.push_back({zvar(i, a), other});
  }
  Monomial mshift = Monomial::from_pairs(std::move(shift));
  QRat s = cross % 2 == 0 ? QRat(1) : QRat(-1);
  for (auto& [m, c] : R.num.terms())
    out.num.add_term(m.inverse() * mshift, c * s);
  return out;
}

namespace {

MLaurent row_specialize(const MLaurent& num, const GeneralZigZag& Z) {
  std::map<VarId, std::pair<VarId, QRat>> asg;
  for (int a = 0; a < Z.top_len(); ++a)
    asg[zvar(Z.i, a + 1)] = {xvar(), QRat::q_power(Z.s + 2 * a)};
  for (int b = 0; b < Z.bot_len(); ++b)
    asg[zvar(Z.j, b + 1)] = {yvar(), QRat::q_power(Z.sp + 2 * b)};
  return substitute_scaled(num, asg);
}

void check_rows_fit(const GeneralZigZag& Z, const std::vector<int>& n) {
  if (Z.top_len() > n[Z.i] || Z.bot_len() > n[Z.j])
    throw InputError("zig-zag rows do not fit the dimension vector");
}

}  // namespace

bool wheel_general(const CartanMatrix& C, const ShufElem& R,
                   const GeneralZigZag& Z) {
  Z.validate(C);
  check_arity(C, R.n);
  check_rows_fit(Z, R.n);
  int required = zigzag_count(Z, C);
  if (required == 0) return true;
  return divisibility_order(row_specialize(R.num, Z)) >= required;
}

WheelReport wheel_member(const CartanMatrix& C, const ShufElem& R) {
  check_arity(C, R.n);
  for (int i = 0; i < C.size(); ++i)
    for (int j = 0; j < C.size(); ++j) {
      if (i == j) continue;
      for (const DistZigZag& Z :
           enumerate_distinguished(C, i, j, R.n[i], R.n[j])) {
        int got = divisibility_order(row_specialize(R.num, Z.general()));
        if (got < Z.m) return {false, WheelWitness{Z, Z.m, got}};
      }
    }
  return {true, std::nullopt};
}

GeomElem omega(const CartanMatrix& C, const ShufElem& R) {
  check_arity(C, R.n);
  if (R.sgn != 1)
    throw InputError("the geometric normalization applies to the positive half");
  GeomElem g;
  g.n = R.n;
  g.p = R.num;
  for (int i = 0; i < C.size(); ++i)
    for (int j = i + 1; j < C.size(); ++j) {
      int d = C.d(i, j);
      for (int a = 1; a <= R.n[i]; ++a)
        for (int b = 1; b <= R.n[j]; ++b) {
          MLaurent f = MLaurent::monomial(
              Monomial::var(zvar(j, b), std::min(d, -1)), QRat(-1));
          for (int c = 1; c <= -d - 1; ++c)
            f *= MLaurent::var(zvar(j, b)) -
                 MLaurent::var(zvar(i, a)).scaled(QRat::q_power(2 * c + d));
          g.p *= f;
        }
    }
  return g;
}

GeomElem shuffle_mul_geom(const CartanMatrix& C, const GeomElem& A,
                          const GeomElem& B) {
  check_arity(C, A.n);
  check_arity(C, B.n);
  GeomElem out;
  out.n.resize(C.size());
  for (int i = 0; i < C.size(); ++i) out.n[i] = A.n[i] + B.n[i];
  out.p = mul_core(C, A.p, A.n, B.p, B.n, +1, true);
  return out;
}

GeomElem upsilon_geom(const CartanMatrix& C, const FreeElem& x) {
  int nc = C.size();
  if (x.is_zero()) return {std::vector<int>(nc, 0), MLaurent()};
  auto dim = x.dimension(nc);
  if (!dim) throw InputError("upsilon needs words of one common degree");
  long weight = word_weight(x.terms().begin()->first);
  for (auto& [wd, c] : x.terms())
    if (word_weight(wd) != weight)
      throw InputError("upsilon needs words of one common degree");

  // Same suffix-merged sweep as the trigonometric case.
  size_t len = x.terms().begin()->first.size();
  std::map<Word, MLaurent> layer;
  for (auto& [wd, c] : x.terms()) {
    for (const Letter& l : wd)
      if (l.color < 0 || l.color >= nc)
        throw InputError("generator color out of range");
    layer[wd].add_term(Monomial(), c);
  }
  for (size_t step = 0; step < len; ++step) {
    std::map<Word, MLaurent> next;
    for (auto& [suf, num] : layer) {
      Letter g = suf.front();
      GeomElem pre;
      pre.n = *dim;
      for (const Letter& l : suf) --pre.n[l.color];
      pre.p = std::move(num);
      GeomElem gen;
      gen.n.assign(nc, 0);
      gen.n[g.color] = 1;
      gen.p = MLaurent::var(zvar(g.color, 1), g.k);
      next[Word(suf.begin() + 1, suf.end())] += shuffle_mul_geom(C, pre, gen).p;
    }
    layer = std::move(next);
  }

  GeomElem out;
  out.n = *dim;
  out.p = std::move(layer[Word{}]);
  return out;
}

bool wheel_general_geom(const CartanMatrix& C, const GeomElem& R,
                        const GeneralZigZag& Z) {
  Z.validate(C);
  check_arity(C, R.n);
  check_rows_fit(Z, R.n);
  int required = zigzag_count_geom(Z, C);
  if (required == 0) return true;
  return divisibility_order(row_specialize(R.p, Z)) >= required;
}

GeomWheelReport wheel_member_geom(const CartanMatrix& C, const GeomElem& R) {
  check_arity(C, R.n);
  for (int i = 0; i < C.size(); ++i)
    for (int j = 0; j < C.size(); ++j) {
      if (i == j) continue;
      for (const GeneralZigZag& Z :
           enumerate_general(C, i, j, R.n[i], R.n[j], true)) {
        int required = zigzag_count_geom(Z, C);
        int got = divisibility_order(row_specialize(R.p, Z));
        if (got < required)
          return {false, GeomWheelWitness{Z, required, got}};
      }
    }
  return {true, std::nullopt};
}

}  // namespace qloop
