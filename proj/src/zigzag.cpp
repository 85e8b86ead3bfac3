#include "qloop/zigzag.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qloop {

namespace {

std::vector<int> row(int from, int to) {
  std::vector<int> out;
  for (int c = from; c <= to; c += 2) out.push_back(c);
  return out;
}

}  // namespace

void GeneralZigZag::validate(const CartanMatrix& C) const {
  if (i == j) throw InputError("zig-zag needs two distinct vertices");
  C.name(i);
  C.name(j);
  if (s > t || sp > tp) throw InputError("zig-zag row endpoints out of order");
  if ((t - s) % 2 != 0 || (tp - sp) % 2 != 0)
    throw InputError("zig-zag row endpoints must agree modulo 2");
}

GeneralZigZag DistZigZag::general() const {
  GeneralZigZag g;
  g.i = i;
  g.j = j;
  g.s = s;
  g.t = t();
  g.sp = sp();
  g.tp = tp();
  return g;
}

void DistZigZag::validate(const CartanMatrix& C) const {
  if (i == j) throw InputError("zig-zag needs two distinct vertices");
  C.name(i);
  C.name(j);
  if (k < 0 || l < 0) throw InputError("k and l must be nonnegative");
  if (m < 1) throw InputError("multiplicity m must be at least 1");
  if (k + l != -C.d(i, j))
    throw InputError("k + l must equal -d_ij");
}

std::string DistZigZag::str() const {
  std::ostringstream os;
  os << i << "," << j << "," << k << "," << l << "," << m << "," << s;
  return os.str();
}

int zigzag_count(const GeneralZigZag& Z, const CartanMatrix& C) {
  int d = C.d(Z.i, Z.j);
  int nw = 0, sw = 0;
  for (int a = Z.s; a <= Z.t; a += 2)
    for (int b = Z.sp; b <= Z.tp; b += 2) {
      if (a == b + d) ++nw;
      if (a == b - d) ++sw;
    }
  return std::min(nw, sw);
}

int zigzag_count_geom(const GeneralZigZag& Z, const CartanMatrix& C) {
  int d = C.d(Z.i, Z.j);
  int extra = 0;
  for (int a = Z.s; a <= Z.t; a += 2)
    for (int b = Z.sp; b <= Z.tp; b += 2)
      for (int c = 1; c <= -d - 1; ++c)
        if (a == b + 2 * c + d) ++extra;
  return zigzag_count(Z, C) + extra;
}

std::vector<DistZigZag> enumerate_distinguished(const CartanMatrix& C, int i,
                                                int j, int cap_i, int cap_j) {
  if (i == j) throw InputError("zig-zag needs two distinct vertices");
  int d = C.d(i, j);
  std::vector<DistZigZag> out;
  for (int k = 0; k <= -d; ++k) {
    int l = -d - k;
    for (int m = 1; k + m <= cap_i && l + m <= cap_j; ++m) {
      DistZigZag z;
      z.i = i;
      z.j = j;
      z.k = k;
      z.l = l;
      z.m = m;
      z.s = 0;
      out.push_back(z);
    }
  }
  return out;
}

std::vector<GeneralZigZag> enumerate_general(const CartanMatrix& C, int i,
                                             int j, int cap_i, int cap_j,
                                             bool geom) {
  if (i == j) throw InputError("zig-zag needs two distinct vertices");
  int d = C.d(i, j);
  std::vector<GeneralZigZag> out;
  for (int len_top = 1; len_top <= cap_i; ++len_top)
    for (int len_bot = 1; len_bot <= cap_j; ++len_bot) {
      int t = 2 * (len_top - 1);
      // window of bottom offsets where some pair lands within [d, -d]
      for (int off = d - 2 * (len_bot - 1); off <= t - d; ++off) {
        GeneralZigZag z;
        z.i = i;
        z.j = j;
        z.s = 0;
        z.t = t;
        z.sp = off;
        z.tp = off + 2 * (len_bot - 1);
        int cnt = geom ? zigzag_count_geom(z, C) : zigzag_count(z, C);
        if (cnt >= 1) out.push_back(z);
      }
    }
  return out;
}

ZigZagGraph zigzag_graph(const DistZigZag& Z) {
  int d = -(Z.k + Z.l);
  ZigZagGraph g;
  for (int c : row(Z.s, Z.t())) g.verts.push_back({true, c});
  for (int c : row(Z.sp(), Z.tp())) g.verts.push_back({false, c});
  for (int c = Z.s; c + 2 <= Z.t(); c += 2)
    g.edges.push_back({{true, c}, {true, c + 2}});
  for (int c = Z.sp(); c + 2 <= Z.tp(); c += 2)
    g.edges.push_back({{false, c}, {false, c + 2}});
  for (int a = 0; a < Z.m; ++a) {
    int c = Z.t() - 2 * a;
    g.edges.push_back({{true, c}, {false, c + d}});
  }
  for (int a = 0; a < Z.m; ++a) {
    int c = Z.tp() - 2 * a;
    g.edges.push_back({{false, c}, {true, c + d}});
  }
  return g;
}

VarId vert_var(ZVert v) { return v.top ? xvar(v.pos) : yvar(v.pos); }

MLaurent barred(ZVert v) {
  return MLaurent::var(vert_var(v)).scaled(QRat::q_power(v.pos));
}

MLaurent edge_delta(const ZEdge& e) { return barred(e.src) - barred(e.dst); }

// ---------------------------------------------------------------------------
// selections

std::vector<std::vector<CoarseStep>> coarse_selections(int m) {
  std::vector<std::vector<CoarseStep>> out;
  std::vector<CoarseStep> cur;
  const CoarseStep all[] = {CoarseStep::SW, CoarseStep::Down, CoarseStep::NW,
                            CoarseStep::Up};
  auto allowed = [](CoarseStep prev, CoarseStep next) {
    bool down_side = prev == CoarseStep::SW || prev == CoarseStep::Up;
    if (down_side)
      return next == CoarseStep::SW || next == CoarseStep::Down;
    return next == CoarseStep::NW || next == CoarseStep::Up;
  };
  auto rec = [&](auto&& self, int alpha) -> void {
    if (alpha == m) {
      out.push_back(cur);
      return;
    }
    for (CoarseStep st : all) {
      if (alpha > 0 && !allowed(cur.back(), st)) continue;
      cur.push_back(st);
      self(self, alpha + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int coarse_sigma(const std::vector<CoarseStep>& sel) {
  int s = 0;
  for (size_t a = 1; a < sel.size(); ++a)
    if (sel[a] == CoarseStep::NW || sel[a] == CoarseStep::Up) ++s;
  return s;
}

MLaurent coarse_delta(const DistZigZag& Z, int alpha, CoarseStep st) {
  int t = Z.t(), tp = Z.tp();
  switch (st) {
    case CoarseStep::SW:
      return barred({true, t - 2 * alpha}) -
             barred({false, tp - 2 * alpha - 2 * Z.l});
    case CoarseStep::Down:
      return barred({false, tp - 2 * alpha - 2 * Z.l}) -
             barred({false, tp - 2 * alpha});
    case CoarseStep::NW:
      return barred({false, tp - 2 * alpha}) -
             barred({true, t - 2 * alpha - 2 * Z.k});
    case CoarseStep::Up:
      return barred({true, t - 2 * alpha - 2 * Z.k}) -
             barred({true, t - 2 * alpha});
  }
  return MLaurent();
}

std::vector<std::vector<RefStep>> refined_selections(const DistZigZag& Z) {
  std::vector<RefStep> classes;
  classes.push_back({RefStep::SW, 0});
  classes.push_back({RefStep::NW, 0});
  for (int u = 1; u <= Z.k; ++u) classes.push_back({RefStep::Top, u});
  for (int v = 1; v <= Z.l; ++v) classes.push_back({RefStep::Bot, v});

  auto allowed = [](const RefStep& prev, const RefStep& next) {
    bool down_side = prev.kind == RefStep::SW || prev.kind == RefStep::Top;
    if (down_side)
      return next.kind == RefStep::SW || next.kind == RefStep::Bot;
    return next.kind == RefStep::NW || next.kind == RefStep::Top;
  };

  std::vector<std::vector<RefStep>> out;
  std::vector<RefStep> cur;
  auto rec = [&](auto&& self, int alpha) -> void {
    if (alpha == Z.m) {
      out.push_back(cur);
      return;
    }
    for (const RefStep& st : classes) {
      if (alpha > 0 && !allowed(cur.back(), st)) continue;
      cur.push_back(st);
      self(self, alpha + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int refined_sigma(const std::vector<RefStep>& sel) {
  int s = 0;
  for (size_t a = 1; a < sel.size(); ++a)
    if (sel[a].kind == RefStep::NW || sel[a].kind == RefStep::Top) ++s;
  return s;
}

ZEdge refined_edge(const DistZigZag& Z, int alpha, const RefStep& st) {
  int d = -(Z.k + Z.l);
  int t = Z.t(), tp = Z.tp();
  switch (st.kind) {
    case RefStep::SW: {
      int c = t - 2 * alpha;
      return {{true, c}, {false, c + d}};
    }
    case RefStep::NW: {
      int c = tp - 2 * alpha;
      return {{false, c}, {true, c + d}};
    }
    case RefStep::Top: {
      int c = t - 2 * alpha - 2 * st.idx;
      return {{true, c}, {true, c + 2}};
    }
    case RefStep::Bot: {
      int c = tp - 2 * alpha - 2 * st.idx;
      return {{false, c}, {false, c + 2}};
    }
  }
  throw InputError("bad refined step");
}

std::map<ZEdge, int> selection_multiplicities(
    const DistZigZag& Z, const std::vector<RefStep>& sel) {
  std::map<ZEdge, int> mu;
  for (int a = 0; a < static_cast<int>(sel.size()); ++a)
    ++mu[refined_edge(Z, a, sel[a])];
  return mu;
}

MLaurent coarse_selection_sum(const DistZigZag& Z) {
  MLaurent sum;
  for (auto& sel : coarse_selections(Z.m)) {
    MLaurent prod = MLaurent::constant(QRat(1));
    for (int a = 0; a < Z.m && !prod.is_zero(); ++a)
      prod *= coarse_delta(Z, a, sel[a]);
    if (coarse_sigma(sel) % 2)
      sum -= prod;
    else
      sum += prod;
  }
  return sum;
}

MLaurent refined_selection_sum(const DistZigZag& Z) {
  MLaurent sum;
  for (auto& sel : refined_selections(Z)) {
    MLaurent prod = MLaurent::constant(QRat(1));
    for (int a = 0; a < Z.m; ++a)
      prod *= edge_delta(refined_edge(Z, a, sel[a]));
    if (refined_sigma(sel) % 2)
      sum -= prod;
    else
      sum += prod;
  }
  return sum;
}

void verify_selection_identity(const DistZigZag& Z) {
  MLaurent c = coarse_selection_sum(Z);
  if (!c.is_zero())
    throw MathError("coarse selection sum is nonzero: " + c.str());
  MLaurent r = refined_selection_sum(Z);
  if (!r.is_zero())
    throw MathError("refined selection sum is nonzero: " + r.str());
}

// ---------------------------------------------------------------------------
// topological orders

namespace {

struct TopoState {
  std::vector<ZVert> verts;
  std::map<ZVert, int> indeg;
  std::map<ZVert, std::vector<ZVert>> succ;
};

TopoState topo_init(const std::vector<ZVert>& verts,
                    const std::vector<ZEdge>& edges) {
  TopoState st;
  st.verts = verts;
  for (auto& v : verts) st.indeg[v] = 0;
  for (auto& e : edges) {
    if (!st.indeg.count(e.src) || !st.indeg.count(e.dst))
      throw InputError("edge endpoint outside the vertex set");
    ++st.indeg[e.dst];
    st.succ[e.src].push_back(e.dst);
  }
  return st;
}

}  // namespace

std::vector<ZVert> topological_order(const std::vector<ZVert>& verts,
                                     const std::vector<ZEdge>& edges) {
  TopoState st = topo_init(verts, edges);
  std::set<ZVert> avail;
  for (auto& [v, d] : st.indeg)
    if (d == 0) avail.insert(v);
  std::vector<ZVert> out;
  while (!avail.empty()) {
    ZVert v = *avail.begin();
    avail.erase(avail.begin());
    out.push_back(v);
    for (auto& w : st.succ[v])
      if (--st.indeg[w] == 0) avail.insert(w);
  }
  if (out.size() != verts.size())
    throw MathError("edge set contains an oriented cycle");
  return out;
}

std::vector<std::vector<ZVert>> topological_orders(
    const std::vector<ZVert>& verts, const std::vector<ZEdge>& edges,
    int limit) {
  TopoState st = topo_init(verts, edges);
  std::vector<std::vector<ZVert>> out;
  std::vector<ZVert> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    if (cur.size() == verts.size()) {
      out.push_back(cur);
      return;
    }
    std::vector<ZVert> avail;
    for (auto& [v, d] : st.indeg)
      if (d == 0) avail.push_back(v);
    for (auto& v : avail) {
      st.indeg[v] = -1;  // mark taken
      for (auto& w : st.succ[v]) --st.indeg[w];
      cur.push_back(v);
      self(self);
      cur.pop_back();
      for (auto& w : st.succ[v]) ++st.indeg[w];
      st.indeg[v] = 0;
    }
  };
  rec(rec);
  return out;
}

}  // namespace qloop
