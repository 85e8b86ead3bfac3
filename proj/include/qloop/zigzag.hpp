#pragma once

// Zig-zag combinatorics: staggered two-row configurations, their wheel
// multiplicities, graphs, trapezoid selections and the telescoping identity.

#include <map>
#include <vector>

#include "qloop/cartan.hpp"

namespace qloop {

// Two arithmetic progressions of ratio 2: {s,...,t} for color i on top and
// {s',...,t'} for color j on the bottom.
struct GeneralZigZag {
  int i = 0, j = 1;
  int s = 0, t = 0;
  int sp = 0, tp = 0;
  int top_len() const { return (t - s) / 2 + 1; }
  int bot_len() const { return (tp - sp) / 2 + 1; }
  void validate(const CartanMatrix& C) const;
};

// A minimal zig-zag (k, l) repeated m times, based at s.
struct DistZigZag {
  int i = 0, j = 1;
  int k = 0, l = 0, m = 1;
  int s = 0;
  int t() const { return s + 2 * (k + m - 1); }
  int sp() const { return s + k - l; }
  int tp() const { return sp() + 2 * (l + m - 1); }
  GeneralZigZag general() const;
  void validate(const CartanMatrix& C) const;
  std::string str() const;  // "i,j,k,l,m,s" with numeric vertex indices
};

// min(#{a = b + d_ij}, #{a = b - d_ij}) over pairs of row positions.
int zigzag_count(const GeneralZigZag& Z, const CartanMatrix& C);
// zigzag_count plus #{(a,b,c) : c in 1..-d_ij-1, a = b + 2c + d_ij}.
int zigzag_count_geom(const GeneralZigZag& Z, const CartanMatrix& C);

// All (k,l,m) with k + l = -d_ij, m >= 1, k + m <= cap_i, l + m <= cap_j,
// based at s = 0.
std::vector<DistZigZag> enumerate_distinguished(const CartanMatrix& C, int i,
                                                int j, int cap_i, int cap_j);

// All shapes with top length <= cap_i, bottom length <= cap_j and nonzero
// count (geometric count when geom is set), top row based at s = 0.
std::vector<GeneralZigZag> enumerate_general(const CartanMatrix& C, int i,
                                             int j, int cap_i, int cap_j,
                                             bool geom);

struct ZVert {
  bool top = true;
  int pos = 0;
  auto operator<=>(const ZVert&) const = default;
};

struct ZEdge {
  ZVert src, dst;
  auto operator<=>(const ZEdge&) const = default;
};

// Vertices: top row left to right, then bottom row.  Edges: top horizontals,
// bottom horizontals (both c -> c+2), then the m southwest diagonals
// (top a -> bottom a+d), then the m northwest diagonals (bottom b -> top b+d).
struct ZigZagGraph {
  std::vector<ZVert> verts;
  std::vector<ZEdge> edges;
};

ZigZagGraph zigzag_graph(const DistZigZag& Z);

VarId vert_var(ZVert v);              // x_pos on top, y_pos on the bottom
MLaurent barred(ZVert v);             // q^pos * variable
MLaurent edge_delta(const ZEdge& e);  // barred(src) - barred(dst)

// One step per trapezoid alpha = 0..m-1.
enum class CoarseStep { SW, Down, NW, Up };

// All step sequences obeying the transitions SW/Up -> SW/Down and
// NW/Down -> NW/Up.
std::vector<std::vector<CoarseStep>> coarse_selections(int m);
int coarse_sigma(const std::vector<CoarseStep>& sel);
// Down and Up are whole-boundary differences (telescoped horizontal spans).
MLaurent coarse_delta(const DistZigZag& Z, int alpha, CoarseStep st);

// Refined steps pick one concrete edge per trapezoid: the SW or NW diagonal,
// or a single unit edge on the top (Top, u in 1..k) or bottom (Bot,
// v in 1..l) boundary.  Top behaves as Up and Bot as Down in transitions
// and signs.
struct RefStep {
  enum Kind { SW, NW, Top, Bot } kind = SW;
  int idx = 0;
  auto operator<=>(const RefStep&) const = default;
};

std::vector<std::vector<RefStep>> refined_selections(const DistZigZag& Z);
int refined_sigma(const std::vector<RefStep>& sel);
ZEdge refined_edge(const DistZigZag& Z, int alpha, const RefStep& st);
std::map<ZEdge, int> selection_multiplicities(const DistZigZag& Z,
                                              const std::vector<RefStep>& sel);

// Signed sums over all selections of the per-trapezoid step products;
// both must vanish identically.
MLaurent coarse_selection_sum(const DistZigZag& Z);
MLaurent refined_selection_sum(const DistZigZag& Z);
void verify_selection_identity(const DistZigZag& Z);  // throws MathError

// Descending order on verts in which every edge runs from an earlier to a
// later vertex; throws MathError when the edge set has a cycle.  The
// deterministic variant breaks ties toward the smallest vertex;
// topological_orders lists up to `limit` distinct orders.
std::vector<ZVert> topological_order(const std::vector<ZVert>& verts,
                                     const std::vector<ZEdge>& edges);
std::vector<std::vector<ZVert>> topological_orders(
    const std::vector<ZVert>& verts, const std::vector<ZEdge>& edges,
    int limit);

}  // namespace qloop
