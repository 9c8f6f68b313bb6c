#include <algorithm>
#include <map>
#include <string>

#include "lks/embedding.hpp"

namespace lks {

std::string to_string(Tag t) {
  switch (t) {
    case Tag::kNone: return "none";
    case Tag::kGreedy: return "greedy";
    case Tag::kAvoiding: return "avoiding";
    case Tag::kExpander: return "expander";
    case Tag::kRegular: return "regular";
    case Tag::kHub: return "hub";
  }
  return "none";
}

namespace {

Tag parse_tag(const std::string& s) {
  for (Tag t : {Tag::kGreedy, Tag::kAvoiding, Tag::kExpander, Tag::kRegular, Tag::kHub}) {
    if (to_string(t) == s) return t;
  }
  if (s == "none") return Tag::kNone;
  throw Error("schema", "unknown strategy tag " + s);
}

}  // namespace

EmbeddingState::EmbeddingState(Vertex tree_n, Vertex host_n)
    : mapping_(tree_n, kNoVertex), used_(host_n, 0), log_(tree_n, Tag::kNone) {}

VertexList EmbeddingState::used_set() const {
  VertexList out;
  for (Vertex v = 0; v < host_n(); ++v) {
    if (used_[v]) out.push_back(v);
  }
  return out;
}

void EmbeddingState::place(Vertex x, Vertex v, Tag tag) {
  if (x < 0 || x >= tree_n() || v < 0 || v >= host_n()) throw Error("state", "vertex out of range");
  if (mapping_[x] != kNoVertex) throw Error("state", "tree vertex " + std::to_string(x) + " already mapped");
  if (used_[v]) throw Error("state", "host vertex " + std::to_string(v) + " already used");
  mapping_[x] = v;
  used_[v] = 1;
  log_[x] = tag;
  ++mapped_;
}

void EmbeddingState::unplace(Vertex x) {
  if (mapping_[x] == kNoVertex) return;
  used_[mapping_[x]] = 0;
  mapping_[x] = kNoVertex;
  log_[x] = Tag::kNone;
  --mapped_;
}

EmbeddingState EmbeddingState::from_parts(std::vector<Vertex> mapping, std::vector<char> used, std::vector<Tag> log) {
  EmbeddingState s;
  s.mapped_ = static_cast<std::size_t>(std::count_if(mapping.begin(), mapping.end(), [](Vertex v) { return v != kNoVertex; }));
  s.mapping_ = std::move(mapping);
  s.used_ = std::move(used);
  s.log_ = std::move(log);
  return s;
}

EmbeddingReport validate_embedding(const Graph& g, const RootedTree& t, const EmbeddingState& state,
                                   bool require_complete) {
  EmbeddingReport r;
  auto fail = [&](const std::string& item, const std::string& witness) {
    r.pass = false;
    r.violations.push_back(item + ": " + witness);
  };
  if (state.tree_n() != t.n() || state.host_n() != g.n()) {
    fail("shape", "state sized " + std::to_string(state.tree_n()) + "x" + std::to_string(state.host_n()) +
                      ", expected " + std::to_string(t.n()) + "x" + std::to_string(g.n()));
    return r;
  }
  std::vector<Vertex> owner(g.n(), kNoVertex);
  for (Vertex x = 0; x < t.n(); ++x) {
    const Vertex v = state.image(x);
    if (v == kNoVertex) {
      if (!require_complete) {
        if (state.tag(x) != Tag::kNone) fail("log", "unmapped tree vertex " + std::to_string(x) + " carries a tag");
        continue;
      }
      fail("complete", "tree vertex " + std::to_string(x) + " unmapped");
      continue;
    }
    if (v < 0 || v >= g.n()) {
      fail("range", "tree vertex " + std::to_string(x) + " -> " + std::to_string(v));
      continue;
    }
    if (owner[v] != kNoVertex) {
      fail("injective", "tree vertices " + std::to_string(owner[v]) + " and " + std::to_string(x) + " -> " +
                            std::to_string(v));
    } else {
      owner[v] = x;
    }
    if (state.tag(x) == Tag::kNone) fail("log", "tree vertex " + std::to_string(x) + " has no strategy tag");
  }
  for (const auto& [a, b] : t.edges()) {
    const Vertex u = state.image(a);
    const Vertex w = state.image(b);
    if (u < 0 || w < 0 || u >= g.n() || w >= g.n()) continue;
    if (!g.has_edge(u, w)) {
      fail("edge", "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") -> non-edge (" + std::to_string(u) +
                       "," + std::to_string(w) + ")");
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (state.is_used(v) != (owner[v] != kNoVertex)) {
      fail("used", "host vertex " + std::to_string(v) + (state.is_used(v) ? " marked used without preimage"
                                                                           : " is an image but not marked used"));
    }
  }
  return r;
}

GreedyResult embed_greedy_min_degree(const Graph& g, const RootedTree& t, Vertex k) {
  if (t.num_edges() != static_cast<std::size_t>(k)) {
    throw Error("edge-count", "tree has " + std::to_string(t.num_edges()) + " edges, expected " + std::to_string(k));
  }
  GreedyResult out;
  out.state = EmbeddingState(t.n(), g.n());
  if (g.n() == 0) {
    out.stuck = t.root();
    return out;
  }
  Vertex best = 0;
  for (Vertex v = 1; v < g.n(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  out.state.place(t.root(), best, Tag::kGreedy);
  for (Vertex x : t.bfs_order()) {
    if (x == t.root()) continue;
    const Vertex p = out.state.image(t.parent(x));
    Vertex pick = kNoVertex;
    for (Vertex u : g.neighbors(p)) {
      if (out.state.is_used(u)) continue;
      if (pick == kNoVertex || g.degree(u) > g.degree(pick)) pick = u;
    }
    if (pick == kNoVertex) {
      out.stuck = x;
      return out;
    }
    out.state.place(x, pick, Tag::kGreedy);
  }
  out.ok = true;
  return out;
}

Json embedding_to_json(const EmbeddingState& state, bool valid) {
  Json mapping = Json::array();
  Json per_vertex = Json::array();
  std::map<std::string, int> counts;
  for (Vertex x = 0; x < state.tree_n(); ++x) {
    if (state.is_mapped(x)) mapping.push_back({x, state.image(x)});
    per_vertex.push_back(to_string(state.tag(x)));
    if (state.is_mapped(x)) ++counts[to_string(state.tag(x))];
  }
  return {{"mapping", mapping}, {"strategy_log", {{"per_vertex", per_vertex}, {"counts", counts}}}, {"valid", valid}};
}

EmbeddingState embedding_from_json(const Json& j, Vertex host_n) {
  if (!j.contains("mapping") || !j.contains("strategy_log")) throw Error("schema", "embedding needs mapping and strategy_log");
  const Json& tags = j.at("strategy_log").at("per_vertex");
  const Vertex tree_n = static_cast<Vertex>(tags.size());
  std::vector<Vertex> mapping(tree_n, kNoVertex);
  std::vector<char> used(host_n, 0);
  std::vector<Tag> log(tree_n, Tag::kNone);
  for (Vertex x = 0; x < tree_n; ++x) log[x] = parse_tag(tags[x].get<std::string>());
  for (const auto& pair : j.at("mapping")) {
    const Vertex x = pair.at(0).get<Vertex>();
    const Vertex v = pair.at(1).get<Vertex>();
    if (x < 0 || x >= tree_n) throw Error("schema", "tree vertex out of range");
    mapping[x] = v;
    if (v >= 0 && v < host_n) used[v] = 1;
  }
  return EmbeddingState::from_parts(std::move(mapping), std::move(used), std::move(log));
}

Json failure_to_json(const EmbedFailure& f) {
  return {{"stage", f.stage}, {"subtree", f.subtree}, {"trail", f.trail}, {"reason", f.reason}};
}

Json hub_check_to_json(const HubCheck& h) {
  return {{"u_size", h.u_size},         {"u_cap_psi", h.u_cap_psi},  {"u_minus_psi", h.u_minus_psi},
          {"u_tilde", h.u_tilde},       {"lhs", to_string(h.lhs)},   {"rhs", to_string(h.rhs)},
          {"applicable", h.applicable}, {"holds", h.holds}};
}

}  // namespace lks
