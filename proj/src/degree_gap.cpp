#include <algorithm>

#include "lks/decomposition.hpp"

namespace lks {

namespace {

Rational power_of_four(int i) {
  Rational r = 1;
  for (int j = 0; j < i; ++j) r *= 4;
  return r;
}

std::vector<Edge> incident_edges(const Graph& g, const std::vector<char>& marked) {
  std::vector<Edge> out;
  for (const auto& [u, v] : g.edges()) {
    if (marked[u] || marked[v]) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace

DegreeGap find_degree_gap(const Graph& g, Vertex k, const ConstantSchedule& s) {
  if (k < 1) throw Error("bad-k", "k must be positive");
  const Vertex n = g.n();
  const int bands = static_cast<int>(ceil_int(1 / s.eps)) + 1;
  const Rational budget = s.eps * k * n;

  auto in_band = [&](std::size_t deg, int i) {
    const Rational d(deg);
    return d >= power_of_four(i) * k && d < power_of_four(i + 1) * k;
  };

  DegreeGap out;
  int chosen = -1;
  int least = 1;
  Rational least_total = -1;
  for (int i = 1; i <= bands; ++i) {
    std::size_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (in_band(g.degree(v), i)) total += g.degree(v);
    }
    if (least_total < 0 || Rational(total) < least_total) {
      least_total = total;
      least = i;
    }
    if (Rational(total) <= budget) {
      chosen = i;
      break;
    }
  }
  out.pigeonhole_ok = chosen >= 0;
  out.band = chosen >= 0 ? chosen : least;
  out.omega_star = power_of_four(out.band);
  out.omega_star_star = power_of_four(out.band + 1);

  Graph current = g;
  std::vector<Edge> deleted;
  for (int round = 0;; ++round) {
    std::vector<char> marked(n, 0);
    bool any = false;
    for (Vertex v = 0; v < n; ++v) {
      if (current.degree(v) > 0 && in_band(current.degree(v), out.band)) {
        marked[v] = 1;
        any = true;
      }
    }
    if (!any) break;
    if (round > bands) {
      throw Error("gap-repair-diverged", "vertices still in band [" + to_string(out.omega_star) + "k, " +
                                             to_string(out.omega_star_star) + "k) after " + std::to_string(round) +
                                             " rounds");
    }
    if (round > 0) ++out.repair_rounds;
    const std::vector<Edge> cut = incident_edges(current, marked);
    deleted.insert(deleted.end(), cut.begin(), cut.end());
    current = current.without_edges(cut);
  }
  std::sort(deleted.begin(), deleted.end());
  out.deleted = std::move(deleted);
  out.g_prime = std::move(current);
  for (Vertex v = 0; v < n; ++v) {
    if (Rational(out.g_prime.degree(v)) >= out.omega_star_star * k) out.psi.push_back(v);
  }
  out.within_bound = Rational(out.deleted.size()) <= 2 * s.eps * k * n;
  return out;
}

}  // namespace lks
