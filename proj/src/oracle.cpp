#include <algorithm>
#include <chrono>
#include <numeric>

#include "lks/embedding.hpp"

namespace lks {

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::kYes: return "yes";
    case OracleVerdict::kNo: return "no";
    case OracleVerdict::kTimeout: return "timeout";
  }
  return "no";
}

namespace {

Vertex centroid(const RootedTree& t) {
  std::vector<Vertex> size(t.n(), 1);
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != t.root()) size[t.parent(*it)] += size[*it];
  }
  Vertex best = t.root();
  Vertex best_part = t.n();
  for (Vertex v = 0; v < t.n(); ++v) {
    Vertex part = t.n() - size[v];
    for (Vertex c : t.children(v)) part = std::max(part, size[c]);
    if (part < best_part) {
      best_part = part;
      best = v;
    }
  }
  return best;
}

class Search {
 public:
  Search(const Graph& g, const RootedTree& t, std::chrono::milliseconds cap)
      : g_(g), deadline_(std::chrono::steady_clock::now() + cap), image_(t.n(), kNoVertex), used_(g.n(), 0) {
    const RootedTree r = t.rerooted(centroid(t));
    std::vector<Vertex> size(r.n(), 1);
    const auto& bfs = r.bfs_order();
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
      if (*it != r.root()) size[r.parent(*it)] += size[*it];
    }
    // Preorder with the largest child first.
    std::vector<Vertex> stack{r.root()};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      order_.push_back(x);
      std::vector<Vertex> kids(r.children(x).begin(), r.children(x).end());
      std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return size[a] != size[b] ? size[a] < size[b] : a > b; });
      for (Vertex c : kids) stack.push_back(c);
    }
    parent_.resize(r.n());
    children_.resize(r.n());
    need_.resize(r.n());
    for (Vertex x = 0; x < r.n(); ++x) {
      parent_[x] = x == r.root() ? kNoVertex : r.parent(x);
      children_[x] = r.children(x).size();
      need_[x] = r.degree(x);
    }
  }

  OracleResult run() {
    OracleResult out;
    if (order_.size() > static_cast<std::size_t>(g_.n())) {
      out.verdict = OracleVerdict::kNo;
      return out;
    }
    const Vertex root = order_[0];
    bool found = false;
    for (Vertex v = 0; v < g_.n() && !found && !timed_out_; ++v) {
      if (!fits(root, v)) continue;
      assign(root, v);
      found = extend(1);
      if (!found) release(root, v);
    }
    out.nodes = nodes_;
    if (found) {
      out.verdict = OracleVerdict::kYes;
      out.mapping = image_;
    } else {
      out.verdict = timed_out_ ? OracleVerdict::kTimeout : OracleVerdict::kNo;
    }
    return out;
  }

 private:
  bool fits(Vertex x, Vertex v) const {
    if (used_[v] || g_.degree(v) < need_[x]) return false;
    std::size_t free = 0;
    for (Vertex u : g_.neighbors(v)) {
      if (!used_[u] && ++free >= children_[x]) return true;
    }
    return free >= children_[x];
  }

  void assign(Vertex x, Vertex v) {
    image_[x] = v;
    used_[v] = 1;
  }
  void release(Vertex x, Vertex v) {
    image_[x] = kNoVertex;
    used_[v] = 0;
  }

  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    if ((++nodes_ & 1023u) == 0 && std::chrono::steady_clock::now() > deadline_) timed_out_ = true;
    if (timed_out_) return false;
    const Vertex x = order_[i];
    for (Vertex v : g_.neighbors(image_[parent_[x]])) {
      if (!fits(x, v)) continue;
      assign(x, v);
      if (extend(i + 1)) return true;
      release(x, v);
      if (timed_out_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> children_;
  std::vector<std::size_t> need_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

OracleResult oracle_contains(const Graph& g, const RootedTree& t, std::chrono::milliseconds time_cap) {
  if (t.n() == 0) return {OracleVerdict::kYes, {}, 0};
  return Search(g, t, time_cap).run();
}

}  // namespace lks
