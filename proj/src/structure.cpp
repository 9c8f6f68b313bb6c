#include <algorithm>
#include <numeric>
#include <string>

#include "lks/embedding.hpp"

namespace lks {

std::size_t literal_cut_degree(const ConstantSchedule& s) { return static_cast<std::size_t>(ceil_int(Rational(100) / s.tau)); }

namespace {

VertexList big_set(const Graph& g, Vertex k, const ConstantSchedule& s) {
  VertexList out;
  const Rational bound = (1 + s.eps) * k;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (Rational(static_cast<long long>(g.degree(v))) >= bound) out.push_back(v);
  }
  return out;
}

std::vector<char> base_mask(Vertex n, const SparseDecomposition& d) {
  std::vector<char> m(n, 0);
  for (Vertex v : d.psi) m[v] = 1;
  for (Vertex v : d.expander.vertices) m[v] = 1;
  for (Vertex v : d.cells.small_cells) m[v] = 1;
  return m;
}

std::size_t cluster_floor(const ConstantSchedule& s, Vertex k) {
  return static_cast<std::size_t>(std::max<std::int64_t>(1, floor_int(s.mu * k)));
}

RegularityVerdict recheck(const Graph& g, const RegularPair& p, const Rational& eta) {
  RegOptions opt;
  if (p.a.size() > kExactSideLimit || p.b.size() > kExactSideLimit) opt.mode = RegMode::kSampled;
  return check_regular_pair(BipartitePair(g, p.a, p.b), eta, opt);
}

std::string list(const VertexList& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

// Pairs between L and vertices not yet in Q_0 u V(M).
void augment(const Graph& g, const std::vector<char>& in_l, std::vector<char>& covered, std::vector<char>& in_m,
             std::vector<RegularPair>& matching, std::size_t m0, const Rational& eta) {
  for (Vertex s = 0; s < g.n(); ++s) {
    if (covered[s] || in_l[s]) continue;
    auto open_rest = [&](Vertex u) { return !covered[u] && !in_l[u] && !in_m[u]; };
    VertexList a;
    for (Vertex u : g.neighbors(s)) {
      if (in_l[u] && !in_m[u]) a.push_back(u);
    }
    if (a.size() < m0) continue;
    std::vector<std::size_t> reach(g.n(), 0);
    for (Vertex u : a) {
      for (Vertex w : g.neighbors(u)) reach[u] += open_rest(w) ? 1 : 0;
    }
    std::stable_sort(a.begin(), a.end(), [&](Vertex x, Vertex y) { return reach[x] > reach[y]; });
    a.resize(m0);
    const auto in_a = indicator(g.n(), a);
    VertexList others;
    for (Vertex u : a) {
      for (Vertex w : g.neighbors(u)) {
        if (w != s && open_rest(w)) others.push_back(w);
      }
    }
    others = sorted_unique(others);
    std::stable_sort(others.begin(), others.end(),
                     [&](Vertex x, Vertex y) { return g.degree_into(x, in_a) > g.degree_into(y, in_a); });
    VertexList b{s};
    for (Vertex w : others) {
      if (b.size() == m0) break;
      b.push_back(w);
    }
    if (b.size() < m0) continue;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    RegularPair p{a, b, density(BipartitePair(g, a, b)), {}};
    if (p.density <= 0) continue;
    p.verdict = recheck(g, p, eta);
    if (!p.verdict.regular) continue;
    for (Vertex v : a) in_m[v] = 1;
    for (Vertex v : b) in_m[v] = covered[v] = 1;
    matching.push_back(std::move(p));
  }
}

struct Peeler {
  const Graph& g;
  const std::vector<char>& q0;  // Psi u V(G_exp) u frak_A u L u V(M)
  std::size_t cut;
  Rational x_need;
  Rational y_need;
  std::vector<std::string>* trace;

  // Removes violators one at a time; true when both sides survive.
  bool run(std::vector<char>& in_x, std::vector<char>& in_y) const {
    for (;;) {
      std::size_t nx = 0, ny = 0;
      Vertex worst = kNoVertex;
      double worst_score = 0;
      std::string why;
      for (Vertex v = 0; v < g.n(); ++v) {
        if (!in_x[v] && !in_y[v]) continue;
        (in_x[v] ? nx : ny) += 1;
        std::size_t cross = 0, q = 0;
        for (Vertex u : g.neighbors(v)) {
          if (in_x[v] ? in_y[u] : in_x[u]) ++cross;
          if (q0[u] && !in_x[u] && !in_y[u]) ++q;
        }
        const Rational& need = in_x[v] ? x_need : y_need;
        double score = 0;
        std::string item;
        if (Rational(static_cast<long long>(q)) < need) {
          score += to_double((need - static_cast<long long>(q)) / need);
          item = in_x[v] ? "ii" : "iii";
        }
        if (cross < cut) {
          score += 1.0 + static_cast<double>(cut - cross) / static_cast<double>(cut);
          item += item.empty() ? "i" : "+i";
        }
        if (score > worst_score) {
          worst_score = score;
          worst = v;
          why = item;
        }
      }
      if (nx == 0 || ny == 0) {
        if (trace) trace->push_back("side emptied");
        return false;
      }
      if (worst == kNoVertex) return true;
      if (trace) trace->push_back("drop " + std::to_string(worst) + (in_x[worst] ? " from X (" : " from Y (") + why + ")");
      in_x[worst] = in_y[worst] = 0;
    }
  }
};

std::optional<std::pair<VertexList, VertexList>> search_xy(const Graph& g, const VertexList& cand,
                                                           const std::vector<char>& q0, std::size_t cut,
                                                           const Rational& x_need, const Rational& y_need, int seeds,
                                                           std::vector<std::string>& trace) {
  const Peeler peel{g, q0, cut, x_need, y_need, &trace};
  const auto in_cand = indicator(g.n(), cand);
  auto collect = [&](const std::vector<char>& m) {
    VertexList out;
    for (Vertex v : cand) {
      if (m[v]) out.push_back(v);
    }
    return out;
  };
  // Max-cut split of G[cand], larger side as X.
  std::vector<char> side(g.n(), 0);
  for (std::size_t i = 0; i < cand.size(); ++i) side[cand[i]] = static_cast<char>(i % 2);
  for (int pass = 0; pass < 8; ++pass) {
    bool moved = false;
    for (Vertex v : cand) {
      std::size_t same = 0, other = 0;
      for (Vertex u : g.neighbors(v)) {
        if (!in_cand[u]) continue;
        (side[u] == side[v] ? same : other) += 1;
      }
      if (same > other) {
        side[v] ^= 1;
        moved = true;
      }
    }
    if (!moved) break;
  }
  std::vector<char> in_x(g.n(), 0), in_y(g.n(), 0);
  std::size_t count0 = 0;
  for (Vertex v : cand) count0 += side[v] == 0;
  const char x_side = count0 * 2 >= cand.size() ? 0 : 1;
  for (Vertex v : cand) (side[v] == x_side ? in_x : in_y)[v] = 1;
  trace.push_back("split " + std::to_string(cand.size()) + " candidates");
  if (peel.run(in_x, in_y)) return std::make_pair(collect(in_x), collect(in_y));

  // Seed and grow: x, its best cut neighbours as Y, and just enough of Y's
  // neighbours to give Y its cut degree.
  VertexList by_degree = cand;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int tried = 0;
  for (Vertex x : by_degree) {
    if (tried++ >= seeds) break;
    VertexList ys;
    for (Vertex u : g.neighbors(x)) {
      if (in_cand[u]) ys.push_back(u);
    }
    if (ys.size() < cut) continue;
    std::stable_sort(ys.begin(), ys.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    ys.resize(cut);
    std::fill(in_x.begin(), in_x.end(), 0);
    std::fill(in_y.begin(), in_y.end(), 0);
    for (Vertex y : ys) in_y[y] = 1;
    in_x[x] = 1;
    std::size_t nx = 1;
    for (Vertex w : by_degree) {
      if (nx >= cut) break;
      if (in_x[w] || in_y[w]) continue;
      if (g.degree_into(w, in_y) >= cut) {
        in_x[w] = 1;
        ++nx;
      }
    }
    trace.push_back("seed " + std::to_string(x));
    if (peel.run(in_x, in_y)) return std::make_pair(collect(in_x), collect(in_y));
  }
  return std::nullopt;
}

}  // namespace

VertexList structure_q(Vertex n, const SparseDecomposition& d, const VertexList& big_l,
                       const std::vector<RegularPair>& matching, const VertexList& x, const VertexList& y) {
  std::vector<char> m = base_mask(n, d);
  for (Vertex v : big_l) m[v] = 1;
  for (const auto& p : matching) {
    for (Vertex v : p.a) m[v] = 1;
    for (Vertex v : p.b) m[v] = 1;
  }
  for (Vertex v : x) m[v] = 0;
  for (Vertex v : y) m[v] = 0;
  VertexList out;
  for (Vertex v = 0; v < n; ++v) {
    if (m[v]) out.push_back(v);
  }
  return out;
}

StructureResult find_global_structure(const Graph& g, const SparseDecomposition& d, Vertex k,
                                      const ConstantSchedule& s, const StructureOptions& options) {
  StructureResult out;
  const VertexList big_l = big_set(g, k, s);
  if (big_l.empty()) {
    out.reason = "empty-L";
    return out;
  }
  const std::size_t cut = options.cut_degree.value_or(literal_cut_degree(s));
  const std::size_t m0 = cluster_floor(s, k);
  const auto in_l = indicator(g.n(), big_l);
  std::vector<char> covered = base_mask(g.n(), d);
  for (Vertex v : big_l) covered[v] = 1;
  std::vector<char> in_m(g.n(), 0);
  std::vector<RegularPair> matching;
  for (const auto& p : d.reg.pairs) {
    if (p.density <= 0 || !p.verdict.regular || p.a.size() < m0 || p.b.size() < m0) continue;
    bool clash = false, reaches = false;
    for (const VertexList* side : {&p.a, &p.b}) {
      for (Vertex v : *side) {
        clash |= in_m[v] != 0;
        reaches |= !covered[v];
      }
    }
    if (clash || !reaches) continue;
    for (const VertexList* side : {&p.a, &p.b}) {
      for (Vertex v : *side) in_m[v] = covered[v] = 1;
    }
    matching.push_back(p);
  }
  out.trace.push_back("M from G_reg: " + std::to_string(matching.size()));
  if (options.augment) augment(g, in_l, covered, in_m, matching, m0, s.eta);
  out.trace.push_back("M after augmenting: " + std::to_string(matching.size()));

  const Rational x_need = (1 + s.eps / 2) * k;
  const Rational y_need = x_need / 2;
  for (;;) {
    std::vector<char> q0 = base_mask(g.n(), d);
    for (Vertex v : big_l) q0[v] = 1;
    std::fill(in_m.begin(), in_m.end(), 0);
    for (const auto& p : matching) {
      for (Vertex v : p.a) q0[v] = in_m[v] = 1;
      for (Vertex v : p.b) q0[v] = in_m[v] = 1;
    }
    VertexList cand;
    for (Vertex v : big_l) {
      if (!in_m[v]) cand.push_back(v);
    }
    if (auto xy = search_xy(g, cand, q0, cut, x_need, y_need, options.seeds, out.trace)) {
      GlobalStructure gs;
      gs.big_l = big_l;
      gs.x_set = std::move(xy->first);
      gs.y_set = std::move(xy->second);
      gs.matching = matching;
      gs.cut_degree = cut;
      gs.q_set = structure_q(g.n(), d, big_l, matching, gs.x_set, gs.y_set);
      out.structure = std::move(gs);
      return out;
    }
    if (matching.empty()) break;
    matching.pop_back();
    out.trace.push_back("dropped last M pair");
  }
  out.reason = "peeling-failed";
  return out;
}

StructureReport verify_global_structure(const Graph& g, const SparseDecomposition& d, const GlobalStructure& gs,
                                        Vertex k, const ConstantSchedule& s) {
  StructureReport r;
  auto fail = [&](const std::string& item, const std::string& witness) {
    r.pass = false;
    r.violations.push_back({item, witness});
  };
  for (const VertexList* set : {&gs.x_set, &gs.y_set, &gs.big_l, &gs.q_set}) {
    for (Vertex v : *set) {
      if (v < 0 || v >= g.n()) {
        fail("sets", "vertex " + std::to_string(v) + " out of range");
        return r;
      }
    }
  }
  const VertexList big_l = big_set(g, k, s);
  if (sorted_unique(gs.big_l) != big_l) fail("sets", "stored L differs from {v : deg(v) >= (1+eps)k}");
  const auto in_l = indicator(g.n(), big_l);
  const auto in_x = indicator(g.n(), gs.x_set);
  const auto in_y = indicator(g.n(), gs.y_set);
  if (gs.x_set.empty()) fail("sets", "X is empty");
  if (gs.y_set.empty()) fail("sets", "Y is empty");
  for (Vertex v : gs.x_set) {
    if (!in_l[v]) fail("sets", "X-vertex " + std::to_string(v) + " not in L");
    if (in_y[v]) fail("sets", "vertex " + std::to_string(v) + " in X and Y");
  }
  for (Vertex v : gs.y_set) {
    if (!in_l[v]) fail("sets", "Y-vertex " + std::to_string(v) + " not in L");
  }
  for (Vertex v : gs.x_set) {
    const std::size_t c = g.degree_into(v, in_y);
    if (c < gs.cut_degree) fail("i", "X-vertex " + std::to_string(v) + " has " + std::to_string(c) + " < " + std::to_string(gs.cut_degree) + " neighbours in Y");
  }
  for (Vertex v : gs.y_set) {
    const std::size_t c = g.degree_into(v, in_x);
    if (c < gs.cut_degree) fail("i", "Y-vertex " + std::to_string(v) + " has " + std::to_string(c) + " < " + std::to_string(gs.cut_degree) + " neighbours in X");
  }
  const VertexList q = structure_q(g.n(), d, big_l, gs.matching, gs.x_set, gs.y_set);
  if (sorted_unique(gs.q_set) != q) fail("Q", "stored Q differs from the recomputed set");
  const auto in_q = indicator(g.n(), q);
  const Rational x_need = (1 + s.eps / 2) * k;
  const Rational y_need = x_need / 2;
  for (Vertex v : gs.x_set) {
    const auto c = static_cast<long long>(g.degree_into(v, in_q));
    if (Rational(c) < x_need) fail("ii", "X-vertex " + std::to_string(v) + " has degree " + std::to_string(c) + " < " + to_string(x_need) + " into Q");
  }
  for (Vertex v : gs.y_set) {
    const auto c = static_cast<long long>(g.degree_into(v, in_q));
    if (Rational(c) < y_need) fail("iii", "Y-vertex " + std::to_string(v) + " has degree " + std::to_string(c) + " < " + to_string(y_need) + " into Q");
  }
  const std::size_t m0 = cluster_floor(s, k);
  std::vector<int> owner(g.n(), -1);
  for (std::size_t i = 0; i < gs.matching.size(); ++i) {
    const RegularPair& p = gs.matching[i];
    const std::string tag = "pair " + std::to_string(i);
    bool ok_sides = true;
    for (const VertexList* side : {&p.a, &p.b}) {
      if (side->size() < m0) fail("M", tag + " has a cluster of " + std::to_string(side->size()) + " < " + std::to_string(m0) + " vertices");
      for (Vertex v : *side) {
        if (v < 0 || v >= g.n()) {
          fail("M", tag + " vertex out of range");
          ok_sides = false;
          continue;
        }
        if (in_x[v] || in_y[v]) fail("iv", tag + " uses " + std::to_string(v) + " from X u Y");
        if (owner[v] != -1) {
          fail("M", tag + " overlaps pair " + std::to_string(owner[v]) + " at " + std::to_string(v));
          ok_sides = false;
        }
        owner[v] = static_cast<int>(i);
      }
    }
    if (!ok_sides || p.a.empty() || p.b.empty()) continue;
    const Rational density = lks::density(BipartitePair(g, p.a, p.b));
    if (density <= 0) fail("M", tag + " has zero density");
    if (density != p.density) fail("M", tag + " stores density " + to_string(p.density) + ", actual " + to_string(density));
    const RegularityVerdict v = recheck(g, p, s.eta);
    if (!v.regular) {
      std::string w = v.witness ? " witness " + list(v.witness->u) + " x " + list(v.witness->w) : std::string();
      fail("M", tag + " is not eta-regular" + w);
    }
  }
  return r;
}

Json structure_to_json(const GlobalStructure& gs) {
  Json m = Json::array();
  for (const auto& p : gs.matching) m.push_back(regular_pair_to_json(p));
  return {{"big_l", gs.big_l}, {"x", gs.x_set}, {"y", gs.y_set}, {"matching", m}, {"q", gs.q_set}, {"cut_degree", gs.cut_degree}};
}

GlobalStructure structure_from_json(const Json& j) {
  for (const char* key : {"big_l", "x", "y", "matching", "q", "cut_degree"}) {
    if (!j.contains(key)) throw Error("schema", std::string("structure lacks \"") + key + "\"");
  }
  GlobalStructure gs;
  gs.big_l = j.at("big_l").get<VertexList>();
  gs.x_set = j.at("x").get<VertexList>();
  gs.y_set = j.at("y").get<VertexList>();
  for (const auto& p : j.at("matching")) gs.matching.push_back(regular_pair_from_json(p));
  gs.q_set = j.at("q").get<VertexList>();
  gs.cut_degree = j.at("cut_degree").get<std::size_t>();
  return gs;
}

}  // namespace lks
