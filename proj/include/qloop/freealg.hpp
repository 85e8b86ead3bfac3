#pragma once

// Straightening of words to non-increasing form and the relation elements of
// the loop algebra: quadratic rewrites, loop Serre sums and zig-zag relation
// coefficients.

#include <optional>
#include <utility>
#include <vector>

#include "qloop/word.hpp"
#include "qloop/zigzag.hpp"

namespace qloop {

// A word is non-increasing when for every a < b the exponent k_a stays below
// k_b plus the number of positions in [a, b) whose color differs from the one
// at b, with equality allowed only when the colors satisfy i_a >= i_b.
// Checking adjacent pairs suffices (the tests verify this by brute force).
bool non_increasing(const Word& w);

struct StraightenOptions {
  long max_rewrites = 1000000;
};

struct StraightenStats {
  long rewrites = 0;
  long memo_hits = 0;
  long words_seen = 0;
  // Exponent window of the input support and of every word touched while
  // rewriting; the spread between the two windows is the drift the test
  // suite monitors.
  int in_min = 0, in_max = 0;
  int out_min = 0, out_max = 0;
};

// Rewrite x into an equal element supported on non-increasing words by
// repeatedly expanding the lexicographically smallest violating adjacent pair
// through the quadratic relation
//   e_{i,a} e_{j,b} = q^d e_{i,a-1} e_{j,b+1} + q^d e_{j,b} e_{i,a}
//                     - e_{j,b+1} e_{i,a-1}        (d = d_{ij})
// whose right-hand words are all strictly larger in lex order.  Throws
// BudgetError once opts.max_rewrites pair expansions have been spent.
FreeElem straighten(const CartanMatrix& C, const FreeElem& x,
                    const StraightenOptions& opts = {},
                    StraightenStats* stats = nullptr);

// Coefficient of z_1^{p_1}..z_N^{p_N} w^{p_w}  (N = 1 - d_ij) in the
// symmetrized alternating q-binomial sum
//   Sym sum_{k=0}^{N} (-1)^k binom(N, k)_q
//       e_i(z_1)..e_i(z_k) e_j(w) e_i(z_{k+1})..e_i(z_N)
// where e_i(z) = sum_k e_{i,k} z^{-k} and Sym runs over all N! orderings of
// the z variables.
FreeElem serre_coefficient(const CartanMatrix& C, int i, int j,
                           const std::vector<int>& zdeg, int wdeg);

// Coefficient of the requested multidegree (indexed like the vertex list of
// zigzag_graph(Z)) in the element attached to the complement of a refined
// selection: the vertex-pair prefactor divided by the complement edge
// differences, expanded against the product of generating series taken in
// descending vertex order.  The order is chosen so that every complement
// edge points from an earlier to a later vertex.
FreeElem eH_coefficient(const CartanMatrix& C, const DistZigZag& Z,
                        const std::vector<RefStep>& sel,
                        const std::vector<int>& multidegree);

// Same, with an explicit descending vertex order; throws InputError when the
// order is not compatible with the complement edges.
FreeElem eH_coefficient_ordered(const CartanMatrix& C, const DistZigZag& Z,
                                const std::vector<RefStep>& sel,
                                const std::vector<int>& multidegree,
                                const std::vector<ZVert>& order);

// Coefficient of the zig-zag relation series: the signed sum of
// eH_coefficient over all refined selections.  Its image under the
// trigonometric evaluation map is zero.
FreeElem rho_coefficient(const CartanMatrix& C, const DistZigZag& Z,
                         const std::vector<int>& multidegree);

// The polynomial part of the relation series does not depend on the
// multidegree, so when many coefficients of one zig-zag are needed the
// expansion can be done once and reused: each refined selection contributes
// its signed expanded prefactor together with the descending vertex order
// used to read monomials off as words.
struct RhoExpansion {
  struct Part {
    std::vector<ZVert> order;
    MLaurent num;  // selection sign already applied
  };
  DistZigZag zz;
  std::vector<ZVert> verts;  // multidegree entries follow this vertex order
  std::vector<Part> parts;

  FreeElem coefficient(const std::vector<int>& multidegree) const;
};

RhoExpansion rho_expansion(const CartanMatrix& C, const DistZigZag& Z);

// Genericity gate for a window polynomial tau in the vertex variables:
// accepted iff tau does not vanish at x_c = q^{(s+t)/2 - c},
// y_c = q^{(s'+t')/2 - c}.
bool tau_generic(const DistZigZag& Z, const MLaurent& tau);

// Constant term of tau times the zig-zag relation series: combines
// rho_coefficient across the monomials of tau.
FreeElem rho_tau(const CartanMatrix& C, const DistZigZag& Z,
                 const MLaurent& tau);

struct OrderCheckReport {
  bool ok = true;
  FreeElem difference;  // straightened difference of the two results
};

// The choice of descending order must not matter: the difference of the two
// eH_coefficient results straightens to zero.
OrderCheckReport order_independence_check(const CartanMatrix& C,
                                          const DistZigZag& Z,
                                          const std::vector<RefStep>& sel,
                                          const std::vector<int>& multidegree,
                                          const std::vector<ZVert>& order1,
                                          const std::vector<ZVert>& order2);

// Coefficient of z^{-kk} w^{-ll} in the two-letter relation with monomial
// kernels,
//   e_i(z) e_j(w) prod_{c=0}^{-d-1} (z - w q^{2c+d})
//     - e_j(w) e_i(z) prod_{c=0}^{-d-1} (z q^{2c+d} - w)
// (empty products when d = 0).  Requires i != j.
FreeElem quad_modified_extraction(const CartanMatrix& C, int i, int j, int kk,
                                  int ll);

// Coefficient of z^{-kk} w^{-ll} in the trigonometric two-letter relation
//   e_i(z) e_j(w) (z - w q^d) - e_j(w) e_i(z) (z q^d - w).
FreeElem quad_trig_extraction(const CartanMatrix& C, int i, int j, int kk,
                              int ll);

struct QuadModifiedReport {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;  // first failing (kk, ll)
};

// Every extraction of the monomial-kernel relation over the window
// [k0, k1] x [l0, l1] must map to zero under the geometric evaluation
// (generators to powers of z_{i1}, products via shuffle_mul_geom).
QuadModifiedReport quad_modified_check(const CartanMatrix& C, int i, int j,
                                       int k0, int k1, int l0, int l1);

struct KoszulClassReport {
  bool zero = false;                    // class vanishes outright
  bool complement_annihilates = false;  // multiplying by the Koszul factors
                                        // complementary to the c = 0 one
                                        // kills the class
};

// Class of a two-letter element (each word one letter of color i and one of
// color j, in either order) in the Mayer-Vietoris quotient
//   (R + R) / R * (P1, -P2),   R = Q(q)[l1^{+-1}, l2^{+-1}],
//   P1 = prod_{c=0}^{-d-1} (1 - (l1/l2) q^{2c+d}),
//   P2 = prod_{c=0}^{-d-1} (1 - (l2/l1) q^{2c+d}),
// which glues the structure sheaves of the two coordinate components of the
// nilpotent locus along their common origin.  Words with color i first land
// in the first component as l2^a l1^b, reversed words in the second.  The
// monomial-kernel relation extractions are multiples of the gluing element
// (class zero); the trigonometric relation extractions at d <= -2 yield a
// nonzero class that becomes zero after multiplying by the complementary
// Koszul factors, i.e. a zero divisor.  Both relations map to zero in the
// Laurent-polynomial shuffle model itself (the two geometric kernels share
// every factor but one), so this quotient is where the two relations
// genuinely differ.
KoszulClassReport koszul_quotient_class(const CartanMatrix& C, int i, int j,
                                        const FreeElem& x);

}  // namespace qloop
