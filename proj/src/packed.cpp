#include "qloop/packed.hpp"

#include <algorithm>
#include <map>

namespace qloop::packed {

void ZPoly::trim() {
  size_t b = 0, e = c.size();
  while (e > b && c[e - 1] == 0) --e;
  while (b < e && c[b] == 0) ++b;
  if (b == e) {
    c.clear();
    lo = 0;
    return;
  }
  if (b > 0) c.erase(c.begin(), c.begin() + b);
  c.resize(e - b);
  lo += static_cast<int>(b);
}

ZPoly to_zpoly(const QRat& r) {
  if (!r.den().is_one()) throw PackOverflow{};
  const QPoly& n = r.num();
  ZPoly z;
  z.lo = n.lo();
  z.c.reserve(n.coeffs().size());
  for (const Rat& v : n.coeffs()) {
    if (mpz_cmp_ui(v.get_den().get_mpz_t(), 1) != 0) throw PackOverflow{};
    const mpz_class& num = v.get_num();
    if (!num.fits_slong_p()) throw PackOverflow{};
    z.c.push_back(num.get_si());
  }
  return z;
}

QRat from_zpoly(const ZPoly& z) {
  if (z.zero()) return QRat();
  std::vector<Rat> cs;
  cs.reserve(z.c.size());
  for (int64_t v : z.c) cs.push_back(Rat(static_cast<long>(v)));
  return QRat(QPoly::from_coeffs(z.lo, std::move(cs)));
}

void zacc(ZPoly& out, const ZPoly& src, int shift, int64_t scale) {
  if (src.zero() || scale == 0) return;
  int slo = src.lo + shift;
  int shi = slo + static_cast<int>(src.c.size()) - 1;
  if (out.zero()) {
    out.lo = slo;
    out.c = src.c;
    if (scale != 1)
      for (int64_t& v : out.c)
        if (__builtin_mul_overflow(v, scale, &v)) throw PackOverflow{};
    return;
  }
  int olo = out.lo, ohi = olo + static_cast<int>(out.c.size()) - 1;
  int nlo = std::min(olo, slo), nhi = std::max(ohi, shi);
  if (nlo != olo || nhi != ohi) {
    std::vector<int64_t> nc(nhi - nlo + 1, 0);
    std::copy(out.c.begin(), out.c.end(), nc.begin() + (olo - nlo));
    out.c = std::move(nc);
    out.lo = nlo;
  }
  for (size_t i = 0; i < src.c.size(); ++i) {
    int64_t t;
    if (__builtin_mul_overflow(src.c[i], scale, &t)) throw PackOverflow{};
    int64_t& dst = out.c[slo - out.lo + i];
    if (__builtin_add_overflow(dst, t, &dst)) throw PackOverflow{};
  }
  out.trim();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.zero() || b.zero()) return {};
  ZPoly r;
  r.lo = a.lo + b.lo;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) {
      int64_t t;
      if (__builtin_mul_overflow(a.c[i], b.c[j], &t)) throw PackOverflow{};
      if (__builtin_add_overflow(r.c[i + j], t, &r.c[i + j]))
        throw PackOverflow{};
    }
  r.trim();
  return r;
}

std::pair<int, int64_t> to_qmono(const QRat& r) {
  ZPoly z = to_zpoly(r);
  if (z.c.size() != 1) throw PackOverflow{};
  return {z.lo, z.c[0]};
}

void add(Poly& p, uint64_t key, const ZPoly& src, int shift, int64_t scale) {
  auto [it, fresh] = p.try_emplace(key);
  zacc(it->second, src, shift, scale);
  if (it->second.zero()) p.erase(it);
}

uint64_t pack_monomial(const Monomial& m, const Ctx& ctx) {
  uint64_t k = kLaneBias;
  for (auto& [v, e] : m.factors()) {
    if (e < -120 || e > 120) throw PackOverflow{};
    k = lane_add(k, ctx.lane(v), e);
  }
  return k;
}

std::vector<std::pair<uint64_t, ZPoly>> pack_poly(const MLaurent& p,
                                                  const Ctx& ctx) {
  std::vector<std::pair<uint64_t, ZPoly>> out;
  out.reserve(p.nterms());
  for (auto& [m, c] : p.terms())
    out.push_back({pack_monomial(m, ctx), to_zpoly(c)});
  return out;
}

MLaurent unpack(const Poly& p, const Ctx& ctx) {
  MLaurent out;
  std::vector<std::pair<VarId, int>> fs;
  for (auto& [k, c] : p) {
    fs.clear();
    for (size_t l = 0; l < ctx.lanes.size(); ++l) {
      int e = lane_get(k, static_cast<int>(l));
      if (e != 0) fs.push_back({ctx.lanes[l], e});
    }
    out.add_term(Monomial::from_pairs(fs), from_zpoly(c));
  }
  return out;
}

namespace {

struct Expander {
  Poly& out;
  const ZPoly& coeff;
  const std::vector<Factor>& factors;

  void rec(size_t idx, uint64_t key, int sh, int64_t sc) {
    if (idx == factors.size()) {
      add(out, key, coeff, sh, sc);
      return;
    }
    for (const FactorTerm& t : factors[idx]) {
      int64_t nsc;
      if (__builtin_mul_overflow(sc, t.qscale, &nsc)) throw PackOverflow{};
      rec(idx + 1, apply_term(key, t), sh + t.qexp, nsc);
    }
  }
};

}  // namespace

void expand(Poly& out, uint64_t base_key, const ZPoly& coeff,
            const std::vector<Factor>& factors, int shift0, int64_t scale0) {
  Expander e{out, coeff, factors};
  e.rec(0, base_key, shift0, scale0);
}

bool div_binomial(Poly& p, int laneA, int laneB, int t, int64_t s) {
  if (p.empty()) return true;
  std::map<int, std::vector<std::pair<uint64_t, ZPoly>>> slices;
  for (auto& [k, c] : p) {
    int e = lane_get(k, laneA);
    slices[e].push_back({lane_set(k, laneA, 0x80), std::move(c)});
  }
  p.clear();
  int dmax = slices.rbegin()->first, dmin = slices.begin()->first;
  Poly quot, carry;
  for (int d = dmax; d >= dmin; --d) {
    Poly qprev;
    if (auto it = slices.find(d); it != slices.end())
      for (auto& [k, c] : it->second) add(qprev, k, c, 0, 1);
    for (auto& [k, c] : carry) add(qprev, lane_add(k, laneB, 1), c, t, s);
    if (d == dmin) {
      if (!qprev.empty()) return false;
    } else {
      int biased = d - 1 + 0x80;
      if (biased < 0 || biased > 255) throw PackOverflow{};
      for (auto& [k, c] : qprev)
        add(quot, lane_set(k, laneA, biased), c, 0, 1);
    }
    carry = std::move(qprev);
  }
  p = std::move(quot);
  return true;
}

}  // namespace qloop::packed
