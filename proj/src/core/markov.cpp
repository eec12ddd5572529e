#include "sigmaper/markov.hpp"

#include "sigmaper/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sigma {

void MarkovSystem::finalize() {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.k < b.k;
  });
  out.assign(vertices.size(), {});
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) out[edges[i].from].push_back(i);
}

std::vector<int> MarkovSystem::edges_between(int from, int to) const {
  std::vector<int> r;
  for (int e : out[from])
    if (edges[e].to == to) r.push_back(e);
  return r;
}

void append_edges(MarkovSystem& g, int v, const SPoint& img_lo, const SPoint& img_hi, const ChartLocator& loc) {
  const BasicInterval& I = g.vertices[v];
  SInterval arc(img_lo, img_hi);
  Q L = arc.length();
  if (L == 0) return;
  Q lenI = I.length();
  Q scale = L / lenI;
  Q acc = 0;
  for (const auto& seg : arc.segments()) {
    Q lo = std::min(seg.from, seg.to), hi = std::max(seg.from, seg.to);
    std::vector<Q> pts{lo};
    for (auto& b : loc.breaks(seg.branch, seg.base, lo, hi)) pts.push_back(b);
    pts.push_back(hi);
    bool fwd = seg.forward();
    std::size_t n = pts.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      // Pieces in travel order.
      const Q& plo = fwd ? pts[i] : pts[n - 1 - i];
      const Q& phi = fwd ? pts[i + 1] : pts[n - i];
      auto [J, k] = loc.piece(seg.branch, seg.base, plo, phi);
      Q s0 = acc + (fwd ? Q(plo - seg.from) : Q(seg.from - phi));
      Q s1 = s0 + (phi - plo);
      Q sh = seg.branch ? Q(0) : Q(k);
      Edge e;
      e.from = v;
      e.to = J;
      e.k = k;
      e.sign = fwd ? 1 : -1;
      e.full = (s0 == 0 && s1 == L);
      e.cyl_lo = I.lo + s0 / scale;
      e.cyl_hi = I.lo + s1 / scale;
      if (fwd) {
        e.alpha = scale;
        e.beta = plo - sh - s0 - I.lo * scale;
      } else {
        e.alpha = -scale;
        e.beta = phi - sh + s0 + I.lo * scale;
      }
      g.edges.push_back(e);
    }
    acc += seg.length();
  }
}

MarkovGraph markov_graph(const Lifting& F) {
  MarkovGraph g;
  g.degree = F.degree();
  const BasicPartition& P = F.partition();
  g.vertices = P.intervals();
  ChartLocator loc;
  loc.breaks = [&P](bool branch, long, const Q& lo, const Q& hi) { return P.breaks(branch, lo, hi); };
  loc.piece = [&P](bool branch, long base, const Q& lo, const Q& hi) { return P.piece(branch, base, lo, hi); };
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) append_edges(g, v, F.image_lo(v), F.image_hi(v), loc);
  g.finalize();
  return g;
}

std::set<long> covers(const Lifting& F, int I, int J) {
  MarkovGraph g = markov_graph(F);
  std::set<long> ks;
  for (int e : g.edges_between(I, J)) ks.insert(g.edges[e].k);
  return ks;
}

std::set<int> signed_cover(const Lifting& F, int I, bool I_reversed, int J, bool J_reversed, long k) {
  MarkovGraph g = markov_graph(F);
  std::set<int> signs;
  for (int e : g.edges_between(I, J)) {
    if (g.edges[e].k != k) continue;
    int s = g.edges[e].sign;
    if (I_reversed) s = -s;
    if (J_reversed) s = -s;
    signs.insert(s);
  }
  return signs;
}

std::vector<int> loop_vertices(const MarkovSystem& g, const std::vector<int>& loop) {
  if (loop.empty()) throw Error(ErrorCode::NotALoop, "empty edge list");
  std::vector<int> vs;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    int e = loop[i];
    if (e < 0 || e >= static_cast<int>(g.edges.size())) throw Error(ErrorCode::NotALoop, "edge index out of range");
    const Edge& cur = g.edges[e];
    const Edge& next = g.edges[loop[(i + 1) % loop.size()]];
    if (cur.to != next.from) throw Error(ErrorCode::NotALoop, "edges do not chain at position " + std::to_string(i));
    vs.push_back(cur.from);
  }
  return vs;
}

int loop_sign(const MarkovSystem& g, const std::vector<int>& loop, const std::vector<bool>& reversed) {
  loop_vertices(g, loop);
  int s = 1;
  for (int e : loop) {
    const Edge& E = g.edges[e];
    int es = E.sign;
    auto flipped = [&](int v) { return v < static_cast<int>(reversed.size()) && reversed[v]; };
    if (flipped(E.from)) es = -es;
    if (flipped(E.to)) es = -es;
    s *= es;
  }
  return s;
}

long loop_displacement(const MarkovSystem& g, const std::vector<int>& loop) {
  loop_vertices(g, loop);
  long m = 0;
  for (int e : loop) m += g.edges[e].k;
  return m;
}

std::string to_dot(const MarkovSystem& g) {
  std::ostringstream os;
  os << "digraph markov {\n";
  for (const auto& v : g.vertices) os << "  " << v.name << ";\n";
  for (const auto& e : g.edges)
    os << "  " << g.vertices[e.from].name << " -> " << g.vertices[e.to].name << " [label=\"" << e.k << "/"
       << (e.sign > 0 ? "+" : "-") << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sigma
