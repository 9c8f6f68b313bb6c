#include "lks/tree_partition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <optional>
#include <string>

namespace lks {

namespace {

struct Pieces {
  std::vector<VertexList> comps;
  std::vector<std::vector<Edge>> attachments;  // (w, s) per component
};

Pieces split(const RootedTree& t, const std::vector<char>& in_w) {
  Pieces out;
  std::vector<int> comp_of(t.n(), -1);
  for (Vertex start : t.bfs_order()) {
    if (in_w[start] || comp_of[start] >= 0) continue;
    const int id = static_cast<int>(out.comps.size());
    VertexList members;
    std::vector<Edge> attach;
    std::deque<Vertex> queue{start};
    comp_of[start] = id;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (Vertex u : t.neighbors(v)) {
        if (in_w[u]) {
          attach.emplace_back(u, v);
        } else if (comp_of[u] < 0) {
          comp_of[u] = id;
          queue.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::sort(attach.begin(), attach.end());
    out.comps.push_back(std::move(members));
    out.attachments.push_back(std::move(attach));
  }
  return out;
}

Vertex lca(const RootedTree& t, Vertex a, Vertex b) {
  while (t.depth(a) > t.depth(b)) a = t.parent(a);
  while (t.depth(b) > t.depth(a)) b = t.parent(b);
  while (a != b) {
    a = t.parent(a);
    b = t.parent(b);
  }
  return a;
}

VertexList preorder(const RootedTree& t) {
  VertexList order;
  std::vector<Vertex> stack{t.root()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto ch = t.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

// Adds lca(w_i, w_{i+1}) for W listed in preorder, which closes W under LCA.
void close_under_lca(const RootedTree& t, std::vector<char>& in_w) {
  VertexList listed;
  for (Vertex v : preorder(t)) {
    if (in_w[v]) listed.push_back(v);
  }
  for (std::size_t i = 1; i < listed.size(); ++i) in_w[lca(t, listed[i - 1], listed[i])] = 1;
}

// For a component attached above through (parent(top), top) and below through
// (w, parent(w)), returns {top, lower endpoint}. Either may be kNoVertex.
std::pair<Vertex, Vertex> attachment_ends(const RootedTree& t, const std::vector<Edge>& attach) {
  Vertex top = kNoVertex;
  Vertex lower = kNoVertex;
  for (const auto& [w, s] : attach) {
    if (t.parent(s) == w) {
      top = s;
    } else {
      lower = s;
    }
  }
  return {top, lower};
}

struct Oriented {
  TreePartition partition;
  std::size_t b_volume = 0;
};

Oriented orient(const RootedTree& t, std::vector<char> in_w, int a_class) {
  for (int round = 0; round <= t.n(); ++round) {
    const Pieces pieces = split(t, in_w);
    bool changed = false;
    for (std::size_t c = 0; c < pieces.comps.size(); ++c) {
      const auto& attach = pieces.attachments[c];
      if (attach.size() != 2) continue;
      if (t.side(attach[0].first) == a_class) continue;
      // Internal piece between two B-class cut vertices: cut it at both ends.
      const auto [top, lower] = attachment_ends(t, attach);
      if (top != kNoVertex) in_w[top] = 1;
      if (lower != kNoVertex) in_w[lower] = 1;
      changed = true;
    }
    if (!changed) break;
  }

  Oriented out;
  for (Vertex v = 0; v < t.n(); ++v) {
    if (!in_w[v]) continue;
    (t.side(v) == a_class ? out.partition.w_a : out.partition.w_b).push_back(v);
  }
  Pieces pieces = split(t, in_w);
  for (std::size_t c = 0; c < pieces.comps.size(); ++c) {
    Subtree s{std::move(pieces.comps[c]), std::move(pieces.attachments[c]), false};
    s.internal = s.attachments.size() == 2;
    const bool to_b = s.attachments.size() == 1 && t.side(s.attachments[0].first) != a_class;
    if (to_b) {
      out.b_volume += s.vertices.size();
      out.partition.trees_b.push_back(std::move(s));
    } else {
      out.partition.trees_a.push_back(std::move(s));
    }
  }
  return out;
}

std::string edge_str(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

TreePartition partition_tree(const RootedTree& t, const Rational& tau, Vertex k) {
  if (tau <= 0 || tau >= 1) throw Error("bad-tau", "tau must lie in (0,1), got " + to_string(tau));
  if (t.num_edges() != static_cast<std::size_t>(k)) {
    throw Error("edge-count", "tree has " + std::to_string(t.num_edges()) + " edges, expected k=" + std::to_string(k));
  }
  const Rational piece_bound = tau * k;
  if (piece_bound < 2) throw Error("tau-too-small", "tau*k = " + to_string(piece_bound) + " < 2");

  // Chop branches bottom-up once they reach tau*k vertices.
  std::vector<char> in_w(t.n(), 0);
  std::vector<std::size_t> pending(t.n(), 0);
  const VertexList& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::size_t size = 1;
    for (Vertex c : t.children(v)) size += in_w[c] ? 0 : pending[c];
    if (Rational(size) >= piece_bound) {
      in_w[v] = 1;
      pending[v] = 0;
    } else {
      pending[v] = size;
    }
  }
  close_under_lca(t, in_w);

  // Pieces touching cut vertices of both classes get cut next to the lower one.
  for (int round = 0; round <= t.n(); ++round) {
    const Pieces pieces = split(t, in_w);
    bool changed = false;
    for (std::size_t c = 0; c < pieces.comps.size(); ++c) {
      const auto& attach = pieces.attachments[c];
      if (attach.size() < 2) continue;
      if (attach.size() > 2) {
        close_under_lca(t, in_w);
        changed = true;
        continue;
      }
      if (t.side(attach[0].first) == t.side(attach[1].first)) continue;
      const auto [top, lower] = attachment_ends(t, attach);
      in_w[lower != kNoVertex ? lower : top] = 1;
      changed = true;
    }
    if (!changed) break;
  }

  std::optional<Oriented> best;
  for (int a_class : {0, 1}) {
    Oriented candidate = orient(t, in_w, a_class);
    if (2 * candidate.b_volume >= static_cast<std::size_t>(k)) continue;
    if (!best || candidate.partition.cut_size() < best->partition.cut_size() ||
        (candidate.partition.cut_size() == best->partition.cut_size() && candidate.b_volume < best->b_volume)) {
      best = std::move(candidate);
    }
  }
  if (!best) throw Error("partition-failed", "no orientation keeps the T_B volume below k/2");
  return std::move(best->partition);
}

PartitionReport check_partition(const RootedTree& t, const TreePartition& p, const Rational& tau, Vertex k) {
  PartitionReport report;
  auto fail = [&](std::string item, std::string witness) {
    report.pass = false;
    report.violations.push_back({std::move(item), std::move(witness)});
  };

  const Vertex n = t.n();
  // Owner of every vertex: -2 unassigned, -1 in W, otherwise the piece index
  // (T_A pieces first, then T_B).
  std::vector<int> owner(n, -2);
  auto claim = [&](Vertex v, int who) {
    if (v < 0 || v >= n) {
      fail("structure", "vertex " + std::to_string(v) + " out of range");
      return;
    }
    if (owner[v] != -2) fail("structure", "vertex " + std::to_string(v) + " listed twice");
    owner[v] = who;
  };
  for (Vertex v : p.w_a) claim(v, -1);
  for (Vertex v : p.w_b) claim(v, -1);
  std::vector<const Subtree*> pieces;
  for (const auto& s : p.trees_a) pieces.push_back(&s);
  for (const auto& s : p.trees_b) pieces.push_back(&s);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (Vertex v : pieces[i]->vertices) claim(v, static_cast<int>(i));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] == -2) fail("structure", "vertex " + std::to_string(v) + " not covered");
  }
  if (!report.pass) return report;

  std::vector<char> in_wa(n, 0), in_wb(n, 0);
  for (Vertex v : p.w_a) in_wa[v] = 1;
  for (Vertex v : p.w_b) in_wb[v] = 1;

  // Real attachments and piece-to-piece edges, straight from the tree.
  std::vector<std::set<Edge>> real_attach(pieces.size());
  for (const auto& [u, v] : t.edges()) {
    const int ou = owner[u];
    const int ov = owner[v];
    if (ou >= 0 && ov >= 0 && ou != ov) fail("b", "tree edge " + edge_str(u, v) + " joins two subtrees");
    if (ou >= 0 && ov == -1) real_attach[ou].insert({v, u});
    if (ov >= 0 && ou == -1) real_attach[ov].insert({u, v});
  }

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Subtree& s = *pieces[i];
    const std::set<Edge> listed(s.attachments.begin(), s.attachments.end());
    if (listed != real_attach[i]) fail("structure", "attachment list of subtree " + std::to_string(i) + " differs from the tree");
    if (s.internal != (real_attach[i].size() == 2)) {
      fail("structure", "internal flag of subtree " + std::to_string(i) + " is wrong");
    }
    // Connectivity inside the piece.
    if (!s.vertices.empty()) {
      std::set<Vertex> seen{s.vertices.front()};
      std::deque<Vertex> queue{s.vertices.front()};
      while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : t.neighbors(v)) {
          if (owner[u] == static_cast<int>(i) && seen.insert(u).second) queue.push_back(u);
        }
      }
      if (seen.size() != s.vertices.size()) fail("structure", "subtree " + std::to_string(i) + " is not connected");
    } else {
      fail("structure", "subtree " + std::to_string(i) + " is empty");
    }
    if (Rational(s.vertices.size()) >= tau * k) {
      fail("a", "subtree with " + std::to_string(s.vertices.size()) + " vertices containing " +
                    std::to_string(s.vertices.front()) + " has order >= tau*k = " + to_string(tau * k));
    }
  }

  const std::size_t cut = p.w_a.size() + p.w_b.size();
  if (Rational(cut) * tau >= 100) fail("c", "|W| = " + std::to_string(cut) + " >= 100/tau");

  auto check_one_class = [&](const VertexList& side, const char* name) {
    for (Vertex v : side) {
      if (t.side(v) != t.side(side.front())) {
        fail("d", std::string(name) + " has vertices " + std::to_string(side.front()) + " and " + std::to_string(v) +
                      " in different classes");
        return;
      }
    }
  };
  check_one_class(p.w_a, "W_A");
  check_one_class(p.w_b, "W_B");
  if (!p.w_a.empty() && !p.w_b.empty() && t.side(p.w_a.front()) == t.side(p.w_b.front())) {
    fail("d", "W_A and W_B share a bipartition class (" + std::to_string(p.w_a.front()) + ", " +
                  std::to_string(p.w_b.front()) + ")");
  }

  std::size_t b_volume = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::set<Vertex> touched;
    for (const auto& [w, s] : real_attach[i]) touched.insert(w);
    const bool is_b = i >= p.trees_a.size();
    const Vertex sample = pieces[i]->vertices.front();
    if (is_b) {
      b_volume += pieces[i]->vertices.size();
      if (touched.size() != 1 || !in_wb[*touched.begin()]) {
        fail("e", "T_B subtree containing " + std::to_string(sample) + " touches " + std::to_string(touched.size()) +
                      " cut vertices" + (touched.empty() || in_wb[*touched.begin()] ? "" : " outside W_B"));
      }
    } else {
      if (touched.size() > 2) {
        fail("f", "T_A subtree containing " + std::to_string(sample) + " touches " + std::to_string(touched.size()) + " cut vertices");
      }
      for (Vertex w : touched) {
        if (!in_wa[w]) fail("f", "T_A subtree containing " + std::to_string(sample) + " touches " + std::to_string(w) + " outside W_A");
      }
    }
  }
  if (2 * b_volume >= static_cast<std::size_t>(k)) {
    fail("g", "T_B trees hold " + std::to_string(b_volume) + " vertices, not < k/2 = " + to_string(Rational(k, 2)));
  }
  return report;
}

namespace {

Json subtrees_to_json(const std::vector<Subtree>& trees, Json& attachments, Json& internal) {
  Json out = Json::array();
  for (const auto& s : trees) {
    out.push_back(s.vertices);
    Json a = Json::array();
    for (const auto& [w, v] : s.attachments) a.push_back({w, v});
    attachments.push_back(a);
    internal.push_back(s.internal);
  }
  return out;
}

std::vector<Subtree> subtrees_from_json(const Json& trees, const Json* attachments) {
  std::vector<Subtree> out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    Subtree s;
    s.vertices = sorted_unique(trees[i].get<VertexList>());
    if (attachments && i < attachments->size()) {
      for (const auto& e : (*attachments)[i]) s.attachments.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    s.internal = s.attachments.size() == 2;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Json partition_to_json(const TreePartition& p) {
  Json attach_a = Json::array(), attach_b = Json::array(), internal_a = Json::array(), internal_b = Json::array();
  Json j;
  j["w_a"] = p.w_a;
  j["w_b"] = p.w_b;
  j["trees_a"] = subtrees_to_json(p.trees_a, attach_a, internal_a);
  j["trees_b"] = subtrees_to_json(p.trees_b, attach_b, internal_b);
  j["attachments"] = {{"a", attach_a}, {"b", attach_b}};
  j["internal_a"] = internal_a;
  return j;
}

TreePartition partition_from_json(const Json& j) {
  for (const char* key : {"w_a", "w_b", "trees_a", "trees_b"}) {
    if (!j.contains(key)) throw Error("schema", std::string("partition JSON lacks \"") + key + "\"");
  }
  TreePartition p;
  p.w_a = sorted_unique(j.at("w_a").get<VertexList>());
  p.w_b = sorted_unique(j.at("w_b").get<VertexList>());
  const Json* attach_a = nullptr;
  const Json* attach_b = nullptr;
  if (j.contains("attachments")) {
    attach_a = &j.at("attachments").at("a");
    attach_b = &j.at("attachments").at("b");
  }
  p.trees_a = subtrees_from_json(j.at("trees_a"), attach_a);
  p.trees_b = subtrees_from_json(j.at("trees_b"), attach_b);
  return p;
}

}  // namespace lks
