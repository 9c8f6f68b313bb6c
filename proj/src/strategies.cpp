#include <algorithm>
#include <deque>
#include <string>

#include "lks/embedding.hpp"

namespace lks {

namespace {

bool is_blocked(const PlacementRules& r, Vertex v) { return r.blocked != nullptr && (*r.blocked)[v] != 0; }

bool is_open(const EmbeddingState& st, const PlacementRules& r, Vertex v) { return !st.is_used(v) && !is_blocked(r, v); }

bool can_return(const Graph& g, const EmbeddingState& st, const PlacementRules& r, Vertex v) {
  if (r.return_set == nullptr) return true;
  for (Vertex u : g.neighbors(v)) {
    if ((*r.return_set)[u] && !st.is_used(u)) return true;
  }
  return false;
}

Vertex parent_in(const RootedTree& t, const PieceTask& piece, Vertex x) { return x == piece.order.front() ? piece.attach : t.parent(x); }

void rollback(EmbeddingState& st, const PieceTask& piece) {
  for (Vertex x : piece.order) st.unplace(x);
}

StepResult failure(std::string error, Json detail = Json::object()) { return {false, std::move(error), std::move(detail)}; }

Rational as_rational(std::size_t v) { return Rational(static_cast<long long>(v)); }

std::size_t open_count(const Graph& g, const EmbeddingState& st, const PlacementRules& r, Vertex v,
                       const std::vector<char>* within = nullptr) {
  std::size_t c = 0;
  for (Vertex u : g.neighbors(v)) {
    if (is_open(st, r, u) && (within == nullptr || (*within)[u])) ++c;
  }
  return c;
}

}  // namespace

PieceTask make_piece(const RootedTree& t, const VertexList& vertices, const std::vector<char>& in_w) {
  if (vertices.empty()) throw Error("bad-piece", "empty piece");
  const auto in_piece = indicator(t.n(), vertices);
  PieceTask task;
  Vertex root = kNoVertex;
  for (Vertex v : vertices) {
    if (v == t.root() || !in_piece[t.parent(v)]) {
      if (root != kNoVertex || v == t.root()) throw Error("bad-piece", "piece must hang below exactly one mapped vertex");
      root = v;
    }
    for (Vertex c : t.children(v)) {
      if (in_w[c]) {
        if (task.pre_tail != kNoVertex) throw Error("bad-piece", "piece has more than one tail");
        task.pre_tail = v;
      }
    }
  }
  task.attach = t.parent(root);
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    task.order.push_back(x);
    for (Vertex c : t.children(x)) {
      if (in_piece[c]) queue.push_back(c);
    }
  }
  if (task.order.size() != vertices.size()) throw Error("bad-piece", "piece is not connected");
  return task;
}

StepResult embed_in_dense_spot(EmbeddingState& state, const Graph& g, const SparseDecomposition& d,
                               const RootedTree& t, const PieceTask& piece, Vertex anchor_image,
                               const ConstantSchedule& s, Vertex k, const PlacementRules& rules) {
  const auto in_small = indicator(g.n(), d.cells.small_cells);
  const std::size_t room = open_count(g, state, rules, anchor_image, &in_small);
  if (as_rational(room) < s.beta * k) return failure("precondition", {{"frak_a_neighbours", room}});
  const Rational touch = s.gamma * s.gamma * k;
  std::vector<std::vector<int>> spots_of(g.n());
  for (std::size_t i = 0; i < d.spots.size(); ++i) {
    for (const VertexList* side : {&d.spots[i].side_a, &d.spots[i].side_b}) {
      for (Vertex v : *side) spots_of[v].push_back(static_cast<int>(i));
    }
  }
  int attempts = 0;
  for (Vertex u : g.neighbors(anchor_image)) {
    if (!in_small[u] || !is_open(state, rules, u)) continue;
    for (int di : spots_of[u]) {
      const DenseSpot& spot = d.spots[di];
      std::size_t hit = 0;
      for (const VertexList* side : {&spot.side_a, &spot.side_b}) {
        for (Vertex v : *side) hit += state.is_used(v) ? 1 : 0;
      }
      if (as_rational(hit) > touch) continue;
      if (++attempts > 64) break;
      std::vector<VertexList> adj(g.n());
      for (const auto& [a, b] : spot.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      auto free_in_spot = [&](Vertex v) {
        std::size_t c = 0;
        for (Vertex w : adj[v]) c += is_open(state, rules, w) ? 1 : 0;
        return c;
      };
      bool ok = true;
      for (Vertex x : piece.order) {
        Vertex pick = kNoVertex;
        if (x == piece.order.front()) {
          if (x != piece.pre_tail || can_return(g, state, rules, u)) pick = u;
        } else {
          std::size_t best = 0;
          for (Vertex w : adj[state.image(parent_in(t, piece, x))]) {
            if (!is_open(state, rules, w)) continue;
            if (x == piece.pre_tail && !can_return(g, state, rules, w)) continue;
            const std::size_t f = free_in_spot(w);
            if (pick == kNoVertex || f > best) {
              pick = w;
              best = f;
            }
          }
        }
        if (pick == kNoVertex) {
          ok = false;
          break;
        }
        state.place(x, pick, Tag::kAvoiding);
      }
      if (ok) return {true, "", {{"spot", di}, {"root_image", u}}};
      rollback(state, piece);
    }
    if (attempts > 64) break;
  }
  return failure("avoiding-exhausted", {{"attempts", attempts}});
}

StepResult embed_in_expander(EmbeddingState& state, const Graph& g, const Graph& g_exp, const RootedTree& t,
                             const PieceTask& piece, Vertex anchor_image, const ConstantSchedule& s, Vertex k,
                             const PlacementRules& rules, EmbedTrace* trace) {
  std::vector<char> in_exp(g.n(), 0);
  for (Vertex v = 0; v < g_exp.n(); ++v) in_exp[v] = g_exp.degree(v) > 0;
  const Rational half = s.rho * k / 2;
  const Rational third = s.rho * k / 3;
  if (trace) trace->expander_u_bound = third;
  const std::size_t room = open_count(g, state, rules, anchor_image, &in_exp);
  if (as_rational(room) < half) return failure("precondition", {{"exp_neighbours", room}});
  for (Vertex x : piece.order) {
    const bool is_root = x == piece.order.front();
    const Vertex p = is_root ? anchor_image : state.image(parent_in(t, piece, x));
    const Graph& host = is_root ? g : g_exp;
    Vertex pick = kNoVertex;
    std::size_t pick_free = 0, pick_u = 0;
    bool blocked_by_return = false;
    for (Vertex c : host.neighbors(p)) {
      if (!in_exp[c] || !is_open(state, rules, c)) continue;
      std::size_t free = 0, in_u = 0;
      for (Vertex w : g_exp.neighbors(c)) {
        if (state.is_used(w)) {
          in_u += w != p ? 1 : 0;
        } else if (!is_blocked(rules, w)) {
          ++free;
        }
      }
      if (as_rational(free) < half || as_rational(in_u) >= third) continue;
      if (x == piece.pre_tail && !can_return(g, state, rules, c)) {
        blocked_by_return = true;
        continue;
      }
      if (pick == kNoVertex || free > pick_free || (free == pick_free && in_u < pick_u)) {
        pick = c;
        pick_free = free;
        pick_u = in_u;
      }
    }
    if (pick == kNoVertex) {
      // Certificate: the pair (U, N_v) that blocked every candidate.
      VertexList nv;
      for (Vertex c : host.neighbors(p)) {
        if (in_exp[c] && is_open(state, rules, c)) nv.push_back(c);
      }
      rollback(state, piece);
      std::size_t u_exp = 0, cross = 0, min_deg = nv.empty() ? 0 : g_exp.n();
      for (Vertex v = 0; v < g.n(); ++v) u_exp += state.is_used(v) && in_exp[v] ? 1 : 0;
      for (Vertex c : nv) {
        std::size_t into_u = 0;
        for (Vertex w : g_exp.neighbors(c)) into_u += state.is_used(w) ? 1 : 0;
        cross += into_u;
        min_deg = std::min<std::size_t>(min_deg, into_u);
      }
      Json cert{{"tree_vertex", x},   {"parent_image", p},     {"u_in_exp", u_exp},
                {"n_v", nv.size()},   {"cross_edges", cross},  {"min_degree_into_u", min_deg}};
      if (u_exp > 0 && !nv.empty()) cert["density"] = to_string(Rational(static_cast<long long>(cross), static_cast<long long>(u_exp * nv.size())));
      return failure(blocked_by_return ? "no-return" : "expander-stuck", cert);
    }
    if (trace) trace->expander_u_degree.push_back(pick_u);
    state.place(x, pick, Tag::kExpander);
  }
  return {true, "", Json::object()};
}

StepResult embed_in_regular_pair(EmbeddingState& state, const Graph& g, const RegularPair& pair, const RootedTree& t,
                                 const PieceTask& piece, Vertex anchor_image, const Rational& eta, Vertex k,
                                 const PlacementRules& rules) {
  (void)k;
  const Rational& d = pair.density;
  if (d <= 2 * eta) return failure("precondition", {{"density", to_string(d)}});
  const VertexList* side[2] = {&pair.a, &pair.b};
  std::vector<char> in_side[2] = {indicator(g.n(), pair.a), indicator(g.n(), pair.b)};
  auto free_of = [&](int i) {
    std::size_t c = 0;
    for (Vertex v : *side[i]) c += is_open(state, rules, v) ? 1 : 0;
    return c;
  };
  const std::size_t order = piece.order.size();
  for (int i = 0; i < 2; ++i) {
    const auto sz = static_cast<long long>(side[i]->size());
    if (Rational(static_cast<long long>(free_of(i)), sz) < 2 * eta + Rational(static_cast<long long>(order), sz)) {
      return failure("pair-full", {{"cluster", i}, {"free", free_of(i)}, {"size", sz}, {"order", order}});
    }
  }
  int start = -1;
  std::size_t best = 0;
  for (int i = 0; i < 2; ++i) {
    const std::size_t seen = open_count(g, state, rules, anchor_image, &in_side[i]);
    if (as_rational(seen) >= (d - eta) * static_cast<long long>(free_of(i)) && seen > 0 && (start < 0 || seen > best)) {
      start = i;
      best = seen;
    }
  }
  if (start < 0) return failure("precondition", {{"reason", "anchor sees too little of both clusters"}});
  std::vector<int> level(t.n(), 0);
  for (Vertex x : piece.order) {
    level[x] = x == piece.order.front() ? start : 1 - level[parent_in(t, piece, x)];
  }
  for (Vertex x : piece.order) {
    const int here = level[x];
    const Vertex p = x == piece.order.front() ? anchor_image : state.image(parent_in(t, piece, x));
    const Rational need = (d - eta) * static_cast<long long>(free_of(1 - here));
    Vertex pick = kNoVertex;
    std::size_t pick_cross = 0;
    bool blocked_by_return = false;
    for (Vertex c : g.neighbors(p)) {
      if (!in_side[here][c] || !is_open(state, rules, c)) continue;
      const std::size_t cross = open_count(g, state, rules, c, &in_side[1 - here]);
      if (as_rational(cross) < need) continue;
      if (x == piece.pre_tail && !can_return(g, state, rules, c)) {
        blocked_by_return = true;
        continue;
      }
      if (pick == kNoVertex || cross > pick_cross) {
        pick = c;
        pick_cross = cross;
      }
    }
    if (pick == kNoVertex) {
      rollback(state, piece);
      return failure(blocked_by_return ? "no-return" : "pair-stuck", {{"tree_vertex", x}});
    }
    state.place(x, pick, Tag::kRegular);
  }
  return {true, "", Json::object()};
}

HubResult embed_via_hub(const EmbeddingState& state, const Graph& g_prime, const std::vector<char>& in_psi,
                        std::size_t child_count, Vertex anchor_image, const ConstantSchedule& s, Vertex k,
                        const PlacementRules& rules, EmbedTrace* trace) {
  HubResult out;
  HubCheck& h = out.check;
  std::vector<std::size_t> deg_u(g_prime.n(), 0);
  for (Vertex v = 0; v < g_prime.n(); ++v) {
    if (!state.is_used(v)) continue;
    ++h.u_size;
    (in_psi[v] ? h.u_cap_psi : h.u_minus_psi) += 1;
    for (Vertex w : g_prime.neighbors(v)) ++deg_u[w];
  }
  const Rational lambda_k = s.lambda * k;
  if (!in_psi[anchor_image] || as_rational(h.u_cap_psi) >= lambda_k / 2) {
    out.error = "hub-precondition";
    if (trace) trace->hub.push_back(h);
    return out;
  }
  std::vector<char> tilde(g_prime.n(), 0);
  for (Vertex v = 0; v < g_prime.n(); ++v) {
    if (as_rational(deg_u[v]) >= lambda_k) {
      tilde[v] = 1;
      ++h.u_tilde;
    }
  }
  h.lhs = as_rational(h.u_tilde) * lambda_k / 2;
  h.rhs = s.omega_star * k * static_cast<long long>(h.u_minus_psi);
  h.applicable = h.u_tilde > 0;
  h.holds = !h.applicable || h.lhs < h.rhs;
  if (trace) trace->hub.push_back(h);
  VertexList cand;
  for (Vertex u : g_prime.neighbors(anchor_image)) {
    if (is_open(state, rules, u) && !tilde[u]) cand.push_back(u);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
    if (in_psi[a] != in_psi[b]) return in_psi[a] < in_psi[b];  // keep Psi usage rare
    return g_prime.degree(a) > g_prime.degree(b);
  });
  if (cand.size() < child_count) {
    out.error = "hub-exhausted";
    return out;
  }
  cand.resize(child_count);
  out.children = std::move(cand);
  out.ok = true;
  return out;
}

StepResult embed_piece_via_hub(EmbeddingState& state, const Graph& g, const SparseDecomposition& d,
                               const RootedTree& t, const PieceTask& piece, Vertex anchor_image,
                               const ConstantSchedule& s, Vertex k, const PlacementRules& rules, EmbedTrace* trace) {
  const Graph& gp = d.gap.g_prime;
  const auto in_psi = indicator(g.n(), d.psi);
  const auto in_piece = indicator(t.n(), piece.order);
  const Vertex root = piece.order.front();
  Vertex root_image = kNoVertex;
  if (in_psi[anchor_image]) {
    const HubResult h = embed_via_hub(state, gp, in_psi, 1, anchor_image, s, k, rules, trace);
    if (!h.ok) return failure(h.error);
    root_image = h.children[0];
  } else {
    for (Vertex u : g.neighbors(anchor_image)) {
      if (in_psi[u] && is_open(state, rules, u)) {
        root_image = u;
        break;
      }
    }
    if (root_image == kNoVertex) return failure("hub-unavailable");
  }
  if (root == piece.pre_tail && !can_return(g, state, rules, root_image)) return failure("no-return");
  state.place(root, root_image, Tag::kHub);
  for (Vertex x : piece.order) {
    VertexList kids;
    for (Vertex c : t.children(x)) {
      if (in_piece[c]) kids.push_back(c);
    }
    if (kids.empty()) continue;
    const Vertex v = state.image(x);
    VertexList images;
    if (in_psi[v]) {
      const HubResult h = embed_via_hub(state, gp, in_psi, kids.size(), v, s, k, rules, trace);
      if (!h.ok) {
        rollback(state, piece);
        return failure(h.error, {{"tree_vertex", x}});
      }
      images = h.children;
    } else {
      std::vector<std::size_t> deg_u(g.n(), 0);
      for (Vertex u = 0; u < g.n(); ++u) {
        if (!state.is_used(u)) continue;
        for (Vertex w : gp.neighbors(u)) ++deg_u[w];
      }
      const Rational lambda_k = s.lambda * k;
      VertexList cand;
      for (Vertex u : g.neighbors(v)) {
        if (is_open(state, rules, u)) cand.push_back(u);
      }
      std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
        const bool ta = as_rational(deg_u[a]) >= lambda_k, tb = as_rational(deg_u[b]) >= lambda_k;
        if (ta != tb) return ta < tb;
        if (in_psi[a] != in_psi[b]) return in_psi[a] < in_psi[b];
        return g.degree(a) > g.degree(b);
      });
      if (cand.size() < kids.size()) {
        rollback(state, piece);
        return failure("hub-exhausted", {{"tree_vertex", x}});
      }
      cand.resize(kids.size());
      images = std::move(cand);
    }
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (kids[i] == piece.pre_tail && !can_return(g, state, rules, images[i])) {
        // Give the pre-tail vertex a sibling image that can return, if any.
        std::size_t j = i + 1;
        while (j < kids.size() && !can_return(g, state, rules, images[j])) ++j;
        if (j == kids.size()) {
          rollback(state, piece);
          return failure("no-return", {{"tree_vertex", kids[i]}});
        }
        std::swap(images[i], images[j]);
      }
      state.place(kids[i], images[i], Tag::kHub);
    }
  }
  return {true, "", Json::object()};
}

}  // namespace lks
