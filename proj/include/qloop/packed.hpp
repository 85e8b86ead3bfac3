#pragma once

// Fast arithmetic for Laurent polynomials in at most eight variables with
// small integer coefficients.  A whole exponent vector packs into one
// uint64 (one biased byte per variable), so renaming is a byte shuffle and
// a monomial product a single add; coefficients are overflow-checked
// machine-integer Laurent polynomials in q.  Every range violation throws
// PackOverflow and the caller redoes the computation with the generic
// sparse representation, so results are always exact.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qloop/multipoly.hpp"

namespace qloop::packed {

struct PackOverflow {};

// Laurent polynomial in q with int64 coefficients; empty means zero, and
// the first and last entries are nonzero otherwise.
struct ZPoly {
  int lo = 0;
  std::vector<int64_t> c;
  bool zero() const { return c.empty(); }
  void trim();
};

ZPoly to_zpoly(const QRat& r);          // throws PackOverflow off Z[q,q^-1]
QRat from_zpoly(const ZPoly& z);
void zacc(ZPoly& out, const ZPoly& src, int shift, int64_t scale);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
// scale * q^exp for a one-term coefficient; throws PackOverflow otherwise.
std::pair<int, int64_t> to_qmono(const QRat& r);

constexpr uint64_t kLaneBias = 0x8080808080808080ULL;

inline uint64_t lane_add(uint64_t key, int lane, int delta) {
  int v = static_cast<int>((key >> (8 * lane)) & 0xFF) + delta;
  if (v < 0 || v > 255) throw PackOverflow{};
  return key + (static_cast<uint64_t>(static_cast<int64_t>(delta))
                << (8 * lane));
}

inline uint64_t lane_set(uint64_t key, int lane, int biased) {
  return (key & ~(0xFFULL << (8 * lane))) |
         (static_cast<uint64_t>(biased) << (8 * lane));
}

inline int lane_get(uint64_t key, int lane) {
  return static_cast<int>((key >> (8 * lane)) & 0xFF) - 0x80;
}

// Lane table; at most eight variables, kept in ascending VarId order so
// unpacked monomials come out sorted.
struct Ctx {
  std::vector<VarId> lanes;
  int lane(VarId v) const {
    for (size_t i = 0; i < lanes.size(); ++i)
      if (lanes[i] == v) return static_cast<int>(i);
    throw PackOverflow{};
  }
};

using Poly = std::unordered_map<uint64_t, ZPoly>;

void add(Poly& p, uint64_t key, const ZPoly& src, int shift, int64_t scale);

uint64_t pack_monomial(const Monomial& m, const Ctx& ctx);
std::vector<std::pair<uint64_t, ZPoly>> pack_poly(const MLaurent& p,
                                                  const Ctx& ctx);
MLaurent unpack(const Poly& p, const Ctx& ctx);

// Both keys biased; the sum keeps a single bias.
inline uint64_t combine_keys(uint64_t ka, uint64_t kb) {
  uint64_t out = 0;
  for (int l = 0; l < 8; ++l) {
    int v = static_cast<int>((ka >> (8 * l)) & 0xFF) +
            static_cast<int>((kb >> (8 * l)) & 0xFF) - 0x80;
    if (v < 0 || v > 255) throw PackOverflow{};
    out |= static_cast<uint64_t>(v) << (8 * l);
  }
  return out;
}

// perm must be a permutation of 0..7.
inline uint64_t shuffle_key(uint64_t k, const int* perm) {
  uint64_t out = 0;
  for (int l = 0; l < 8; ++l)
    out |= ((k >> (8 * l)) & 0xFF) << (8 * perm[l]);
  return out;
}

// One term of a multiplicative factor: moves at most two exponents and
// scales by a single signed power of q.
struct FactorTerm {
  int lane1 = -1, e1 = 0;
  int lane2 = -1, e2 = 0;
  int qexp = 0;
  int64_t qscale = 1;
};
using Factor = std::vector<FactorTerm>;

inline uint64_t apply_term(uint64_t key, const FactorTerm& t) {
  if (t.lane1 >= 0 && t.e1 != 0) key = lane_add(key, t.lane1, t.e1);
  if (t.lane2 >= 0 && t.e2 != 0) key = lane_add(key, t.lane2, t.e2);
  return key;
}

// out += scale0 * q^shift0 * coeff * monomial(base_key) * prod(factors),
// expanded depth-first so memory stays proportional to the result, not to
// the full product of factor sizes.
void expand(Poly& out, uint64_t base_key, const ZPoly& coeff,
            const std::vector<Factor>& factors, int shift0, int64_t scale0);

// Exact division by (va - s q^t vb); returns false when the remainder is
// nonzero, leaving p unspecified.
bool div_binomial(Poly& p, int laneA, int laneB, int t, int64_t s);

}  // namespace qloop::packed
