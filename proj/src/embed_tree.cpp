#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "lks/embedding.hpp"

namespace lks {

namespace {

struct Attempt {
  Tag tag;
  std::function<StepResult()> run;
};

}  // namespace

EmbedOutcome embed_tree(const Graph& g, const RootedTree& t, Vertex k, const ConstantSchedule& s,
                        const EmbedOptions& options) {
  if (t.num_edges() != static_cast<std::size_t>(k)) {
    throw Error("edge-count", "tree has " + std::to_string(t.num_edges()) + " edges, expected " + std::to_string(k));
  }
  validate_schedule(s);
  EmbedOutcome out;
  out.state = EmbeddingState(t.n(), g.n());
  auto finish = [&]() -> EmbedOutcome& {
    const EmbeddingReport r = validate_embedding(g, t, out.state);
    out.success = r.pass;
    if (!r.pass) {
      out.soundness_breach = true;
      out.failure = EmbedFailure{"validate", -1, r.violations, "produced embedding failed validation"};
    }
    return out;
  };
  auto fail = [&](std::string stage, std::string reason, int subtree = -1, std::vector<std::string> trail = {}) -> EmbedOutcome& {
    out.success = false;
    out.failure = EmbedFailure{std::move(stage), subtree, std::move(trail), std::move(reason)};
    return out;
  };

  if (g.n() > 0 && g.min_degree() >= static_cast<std::size_t>(k)) {
    out.fast_path = true;
    GreedyResult gr = embed_greedy_min_degree(g, t, k);
    out.state = std::move(gr.state);
    if (!gr.ok) return fail("greedy", "stuck at tree vertex " + std::to_string(gr.stuck));
    return finish();
  }

  SparseDecomposition d;
  try {
    d = decompose(g, k, s, options.decompose);
  } catch (const Error& e) {
    return fail("decompose", e.what());
  }
  const ConstantSchedule& ds = d.schedule;

  const Rational tree_tau = std::max(Rational(1, 4), Rational(2, std::max<Vertex>(k, 1)));
  if (tree_tau >= 1) return fail("partition", "tree too small to partition (k=" + std::to_string(k) + ")");
  TreePartition tp;
  try {
    tp = partition_tree(t, tree_tau, k);
  } catch (const Error& e) {
    return fail("partition", e.what());
  }

  StructureOptions so = options.structure;
  if (!so.cut_degree) so.cut_degree = tp.cut_size();
  const StructureResult sr = find_global_structure(g, d, k, ds, so);
  if (!sr.structure) return fail("structure", sr.reason, -1, sr.trace);
  const GlobalStructure& gs = *sr.structure;

  const Vertex root = tp.w_a.empty() ? tp.w_b.front() : tp.w_a.front();
  const RootedTree rt = t.rerooted(root);
  VertexList w_all = tp.w_a;
  w_all.insert(w_all.end(), tp.w_b.begin(), tp.w_b.end());
  const auto in_w = indicator(t.n(), w_all);
  const auto in_wa = indicator(t.n(), tp.w_a);
  const auto in_x = indicator(g.n(), gs.x_set);
  const auto in_y = indicator(g.n(), gs.y_set);
  std::vector<char> blocked(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) blocked[v] = in_x[v] || in_y[v];
  auto target = [&](Vertex w) -> const std::vector<char>& { return in_wa[w] ? in_x : in_y; };

  std::vector<const Subtree*> pieces;
  for (const auto& p : tp.trees_a) pieces.push_back(&p);
  for (const auto& p : tp.trees_b) pieces.push_back(&p);
  std::vector<int> piece_of(t.n(), -1);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (Vertex v : pieces[i]->vertices) piece_of[v] = static_cast<int>(i);
  }

  // Places a cut vertex on an unused vertex of its target set next to `from`
  // (anywhere in the set when `from` is kNoVertex).
  auto place_cut = [&](Vertex w, Vertex from) {
    const auto& set = target(w);
    const auto& other = in_wa[w] ? in_y : in_x;
    Vertex pick = kNoVertex;
    std::size_t best = 0;
    auto consider = [&](Vertex v) {
      if (!set[v] || out.state.is_used(v)) return;
      std::size_t room = 0;
      for (Vertex u : g.neighbors(v)) room += other[u] && !out.state.is_used(u) ? 1 : 0;
      if (pick == kNoVertex || room > best) {
        pick = v;
        best = room;
      }
    };
    if (from == kNoVertex) {
      for (Vertex v = 0; v < g.n(); ++v) consider(v);
    } else {
      for (Vertex v : g.neighbors(from)) consider(v);
    }
    if (pick != kNoVertex) out.state.place(w, pick, Tag::kGreedy);
    return pick != kNoVertex;
  };

  if (!place_cut(root, kNoVertex)) return fail("cut-edges", "no free vertex for the root cut vertex");
  const auto in_small = indicator(g.n(), d.cells.small_cells);
  std::vector<char> in_exp(g.n(), 0);
  for (Vertex v : d.expander.vertices) in_exp[v] = 1;
  const auto in_psi = indicator(g.n(), d.psi);
  std::vector<const RegularPair*> pairs;
  for (const auto& p : gs.matching) pairs.push_back(&p);
  for (const auto& p : d.reg.pairs) pairs.push_back(&p);

  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop_front();
    for (Vertex c : rt.children(w)) {
      if (in_w[c]) {
        if (!place_cut(c, out.state.image(w))) {
          return fail("cut-edges", "no free neighbour for cut vertex " + std::to_string(c) + " next to " +
                                       std::to_string(out.state.image(w)));
        }
        queue.push_back(c);
        continue;
      }
      const int pi = piece_of[c];
      const PieceTask task = make_piece(rt, pieces[pi]->vertices, in_w);
      Vertex tail = kNoVertex;
      if (task.pre_tail != kNoVertex) {
        for (Vertex z : rt.children(task.pre_tail)) {
          if (in_w[z]) tail = z;
        }
      }
      PlacementRules rules{&blocked, tail == kNoVertex ? nullptr : &target(tail)};
      const Vertex anchor = out.state.image(w);

      auto count_open = [&](const std::vector<char>& within) {
        std::size_t n = 0;
        for (Vertex u : g.neighbors(anchor)) n += within[u] && !out.state.is_used(u) && !blocked[u] ? 1 : 0;
        return Rational(static_cast<long long>(n));
      };
      std::vector<Attempt> attempts;
      if (count_open(in_small) >= ds.beta * k) {
        attempts.push_back({Tag::kAvoiding, [&] { return embed_in_dense_spot(out.state, g, d, rt, task, anchor, ds, k, rules); }});
      }
      if (count_open(in_exp) >= ds.rho * k / 2) {
        attempts.push_back({Tag::kExpander, [&] {
                              return embed_in_expander(out.state, g, d.expander.g_exp, rt, task, anchor, ds, k, rules, &out.trace);
                            }});
      }
      // Probe pairs: only a pair whose preconditions hold counts as reachable.
      std::vector<const RegularPair*> reachable;
      for (const RegularPair* p : pairs) {
        EmbeddingState probe = out.state;
        const StepResult r = embed_in_regular_pair(probe, g, *p, rt, task, anchor, ds.eta, k, rules);
        if (r.ok || (r.error != "precondition" && r.error != "pair-full")) reachable.push_back(p);
      }
      if (!reachable.empty()) {
        attempts.push_back({Tag::kRegular, [&] {
                              StepResult last;
                              for (const RegularPair* p : reachable) {
                                last = embed_in_regular_pair(out.state, g, *p, rt, task, anchor, ds.eta, k, rules);
                                if (last.ok) return last;
                              }
                              return last;
                            }});
      }
      bool hub_ok = in_psi[anchor] != 0;
      for (Vertex u : g.neighbors(anchor)) hub_ok |= in_psi[u] && !out.state.is_used(u) && !blocked[u];
      if (hub_ok) {
        attempts.push_back({Tag::kHub, [&] { return embed_piece_via_hub(out.state, g, d, rt, task, anchor, ds, k, rules, &out.trace); }});
      }
      if (attempts.empty()) return fail("subtree", "no applicable strategy at anchor " + std::to_string(anchor), pi);
      std::vector<std::string> trail;
      bool placed = false;
      for (std::size_t i = 0; i < attempts.size() && i < 2 && !placed; ++i) {
        const StepResult r = attempts[i].run();
        trail.push_back(to_string(attempts[i].tag) + (r.ok ? ": ok" : ": " + r.error));
        placed = r.ok;
      }
      if (!placed) return fail("subtree", "strategies exhausted", pi, trail);
      if (tail != kNoVertex) {
        if (!place_cut(tail, out.state.image(task.pre_tail))) {
          return fail("tail-return", "no free return vertex for cut vertex " + std::to_string(tail), pi, trail);
        }
        queue.push_back(tail);
      }
    }
  }
  return finish();
}

}  // namespace lks
