#include "lks/regularity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

namespace lks {

namespace {

using Wide = __int128;

struct Ratio {
  Wide p;
  Wide q;
};

Ratio as_ratio(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  if (boost::multiprecision::abs(num) > kMax || den > kMax) throw Error("bad-eta", "eta has too large a numerator or denominator");
  return {static_cast<Wide>(num.convert_to<std::int64_t>()), static_cast<Wide>(den.convert_to<std::int64_t>())};
}

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

// |e/(u*s) - E/(na*nb)| >= eta, all integers.
bool violates(Wide e, Wide u, Wide s, Wide total, Wide na, Wide nb, const Ratio& eta) {
  return wide_abs(total * u * s - e * na * nb) * eta.q >= eta.p * na * nb * u * s;
}

// Smallest subset size strictly above eta * size.
std::size_t admissible_min(std::size_t size, const Ratio& eta) {
  return static_cast<std::size_t>((eta.p * static_cast<Wide>(size)) / eta.q) + 1;
}

RegularityVerdict base_verdict(const BipartitePair& pair, const Rational& eta, RegMode mode) {
  RegularityVerdict v;
  v.method = mode;
  v.eta = eta;
  v.pair_density = density(pair);
  return v;
}

void attach_witness(RegularityVerdict& v, const Graph& g, Witness w) {
  const auto in_w = indicator(g.n(), w.w);
  std::size_t e = 0;
  for (Vertex u : w.u) e += g.degree_into(u, in_w);
  v.regular = false;
  v.witness_density = Rational(e, w.u.size() * w.w.size());
  v.witness = std::move(w);
}

RegularityVerdict check_exact(const BipartitePair& pair, const Rational& eta) {
  const auto& a = pair.side_a();
  const auto& b = pair.side_b();
  if (a.size() > kExactSideLimit || b.size() > kExactSideLimit) {
    throw Error("exact-budget", "exact mode needs both sides <= 14, got " + std::to_string(a.size()) + " and " +
                                    std::to_string(b.size()));
  }
  RegularityVerdict v = base_verdict(pair, eta, RegMode::kExact);
  const Ratio r = as_ratio(eta);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const Graph& g = pair.host();

  std::vector<std::uint32_t> row(na, 0);  // row[i]: neighbors of a[i] in B as a bitmask
  Wide total = 0;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      if (g.has_edge(a[i], b[j])) row[i] |= 1u << j;
    }
    total += std::popcount(row[i]);
  }
  const std::size_t min_u = admissible_min(na, r);
  const std::size_t min_w = admissible_min(nb, r);
  if (min_u > na || min_w > nb) return v;

  std::vector<int> deg(nb);
  std::vector<std::size_t> order(nb);
  for (std::uint32_t mask = 1; mask < (1u << na); ++mask) {
    const std::size_t u = std::popcount(mask);
    if (u < min_u) continue;
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t i = 0; i < na; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = 0; j < nb; ++j) deg[j] += row[i] >> j & 1u;
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
    for (std::size_t s = min_w; s <= nb; ++s) {
      Wide top = 0, bottom = 0;
      for (std::size_t t = 0; t < s; ++t) {
        top += deg[order[t]];
        bottom += deg[order[nb - 1 - t]];
      }
      for (const bool use_top : {true, false}) {
        if (!violates(use_top ? top : bottom, u, s, total, na, nb, r)) continue;
        Witness w;
        for (std::size_t i = 0; i < na; ++i) {
          if (mask >> i & 1u) w.u.push_back(a[i]);
        }
        for (std::size_t t = 0; t < s; ++t) w.w.push_back(b[order[use_top ? t : nb - 1 - t]]);
        std::sort(w.w.begin(), w.w.end());
        attach_witness(v, g, std::move(w));
        return v;
      }
    }
  }
  return v;
}

RegularityVerdict check_sampled(const BipartitePair& pair, const Rational& eta, const RegOptions& options) {
  RegularityVerdict v = base_verdict(pair, eta, RegMode::kSampled);
  const Ratio r = as_ratio(eta);
  const auto& a = pair.side_a();
  const auto& b = pair.side_b();
  const Graph& g = pair.host();
  const std::size_t lo_a = std::max(admissible_min(a.size(), r), (a.size() + 1) / 2);
  const std::size_t lo_b = std::max(admissible_min(b.size(), r), (b.size() + 1) / 2);
  if (lo_a > a.size() || lo_b > b.size()) return v;
  const Wide total = pair.cross_edges();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size_a(lo_a, a.size());
  std::uniform_int_distribution<std::size_t> size_b(lo_b, b.size());
  std::vector<char> in_w(g.n(), 0);
  for (int sample = 0; sample < options.samples; ++sample) {
    Witness w;
    std::sample(a.begin(), a.end(), std::back_inserter(w.u), size_a(rng), rng);
    std::sample(b.begin(), b.end(), std::back_inserter(w.w), size_b(rng), rng);
    for (Vertex x : w.w) in_w[x] = 1;
    Wide e = 0;
    for (Vertex x : w.u) e += g.degree_into(x, in_w);
    for (Vertex x : w.w) in_w[x] = 0;
    if (violates(e, w.u.size(), w.w.size(), total, a.size(), b.size(), r)) {
      attach_witness(v, g, std::move(w));
      return v;
    }
  }
  return v;
}

RegularityVerdict check_certificate(const BipartitePair& pair, const Rational& eta) {
  RegularityVerdict v = base_verdict(pair, eta, RegMode::kCertificate);
  const Ratio r = as_ratio(eta);
  const auto& a = pair.side_a();
  const Graph& g = pair.host();
  const Wide na = a.size();
  const Wide nb = pair.side_b().size();
  const Wide total = pair.cross_edges();
  const auto in_b = indicator(g.n(), pair.side_b());

  Wide bad_vertices = 0;
  std::vector<std::vector<char>> nbr(a.size(), std::vector<char>(g.n(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Wide deg = g.degree_into(a[i], in_b);
    if (wide_abs(deg * na - total) * r.q >= r.p * na * nb) ++bad_vertices;
    for (Vertex x : g.neighbors(a[i])) nbr[i][x] = in_b[x];
  }
  Wide bad_pairs = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j) continue;
      Wide codeg = 0;
      for (Vertex x : g.neighbors(a[j])) codeg += nbr[i][x];
      if (wide_abs(codeg * na * na * nb - total * total) * r.q >= r.p * na * na * nb * nb) ++bad_pairs;
    }
  }
  v.regular = bad_vertices * r.q <= r.p * na && bad_pairs * r.q <= r.p * na * na;
  return v;
}

}  // namespace

std::string to_string(RegMode m) {
  switch (m) {
    case RegMode::kExact:
      return "exact";
    case RegMode::kSampled:
      return "sampled";
    case RegMode::kCertificate:
      return "degree-certificate";
  }
  return "?";
}

void validate_partition(const Partition& p, Vertex n) {
  std::vector<char> seen(n, 0);
  auto mark = [&](Vertex v) {
    if (v < 0 || v >= n) throw Error("bad-partition", "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw Error("bad-partition", "vertex " + std::to_string(v) + " appears twice");
    seen[v] = 1;
  };
  for (const auto& c : p.classes) {
    for (Vertex v : c) mark(v);
  }
  for (Vertex v : p.exceptional) mark(v);
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) throw Error("bad-partition", "vertex " + std::to_string(v) + " not covered");
  }
}

RegularityVerdict check_regular_pair(const BipartitePair& pair, const Rational& eta, const RegOptions& options) {
  if (pair.side_a().empty() || pair.side_b().empty()) throw Error("empty-side", "regularity needs two nonempty sides");
  if (eta <= 0) throw Error("bad-eta", "eta must be positive");
  if (eta >= 1) return base_verdict(pair, eta, options.mode);  // no subsets qualify
  switch (options.mode) {
    case RegMode::kExact:
      return check_exact(pair, eta);
    case RegMode::kSampled:
      return check_sampled(pair, eta, options);
    case RegMode::kCertificate:
      return check_certificate(pair, eta);
  }
  return base_verdict(pair, eta, options.mode);
}

bool witness_is_valid(const BipartitePair& pair, const Rational& eta, const Witness& w) {
  const auto in_a = indicator(pair.host().n(), pair.side_a());
  const auto in_b = indicator(pair.host().n(), pair.side_b());
  const VertexList u = sorted_unique(w.u);
  const VertexList ww = sorted_unique(w.w);
  if (u.size() != w.u.size() || ww.size() != w.w.size()) return false;
  for (Vertex x : u) {
    if (!in_a[x]) return false;
  }
  for (Vertex x : ww) {
    if (!in_b[x]) return false;
  }
  if (Rational(u.size()) <= eta * pair.side_a().size() || Rational(ww.size()) <= eta * pair.side_b().size()) return false;
  const Rational gap = density(pair) - density(BipartitePair(pair.host(), u, ww));
  return (gap < 0 ? -gap : gap) >= eta;
}

Rational energy(const Partition& p, const Graph& g) {
  validate_partition(p, g.n());
  const Vertex n = g.n();
  if (n == 0) return 0;
  std::vector<int> class_of(n);
  std::vector<std::int64_t> size;
  for (const auto& c : p.classes) {
    for (Vertex v : c) class_of[v] = static_cast<int>(size.size());
    size.push_back(static_cast<std::int64_t>(c.size()));
  }
  for (Vertex v : p.exceptional) {
    class_of[v] = static_cast<int>(size.size());
    size.push_back(1);
  }
  std::map<std::pair<int, int>, std::int64_t> count;
  for (const auto& [u, v] : g.edges()) {
    ++count[{class_of[u], class_of[v]}];
    ++count[{class_of[v], class_of[u]}];
  }
  Rational total = 0;
  for (const auto& [key, e] : count) total += Rational(e * e, size[key.first] * size[key.second]);
  return total / (static_cast<std::int64_t>(n) * n);
}

Partition refine_by_witnesses(const Partition& p, std::span<const RefineWitness> witnesses, std::size_t min_class) {
  std::vector<std::vector<const VertexList*>> touching(p.classes.size());
  auto attach = [&](int c, const VertexList& subset) {
    if (c < 0 || c >= static_cast<int>(p.classes.size())) throw Error("bad-witness", "class index " + std::to_string(c) + " out of range");
    const auto& cls = p.classes[c];
    for (Vertex v : subset) {
      if (!std::binary_search(cls.begin(), cls.end(), v)) {
        throw Error("bad-witness", "vertex " + std::to_string(v) + " is not in class " + std::to_string(c));
      }
    }
    touching[c].push_back(&subset);
  };
  for (const auto& w : witnesses) {
    attach(w.class_u, w.u);
    attach(w.class_w, w.w);
  }

  Partition out;
  out.exceptional = p.exceptional;
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    std::map<std::vector<bool>, VertexList> atoms;
    for (Vertex v : p.classes[c]) {
      std::vector<bool> signature;
      for (const VertexList* s : touching[c]) signature.push_back(std::binary_search(s->begin(), s->end(), v));
      atoms[signature].push_back(v);
    }
    std::vector<VertexList> pieces;
    for (auto& [sig, members] : atoms) pieces.push_back(std::move(members));
    std::sort(pieces.begin(), pieces.end(), [](const VertexList& x, const VertexList& y) { return x.front() < y.front(); });
    for (auto& piece : pieces) {
      if (piece.size() < min_class) {
        out.exceptional.insert(out.exceptional.end(), piece.begin(), piece.end());
      } else {
        out.classes.push_back(std::move(piece));
      }
    }
  }
  std::sort(out.exceptional.begin(), out.exceptional.end());
  return out;
}

Json partition_to_json(const Partition& p) { return {{"classes", p.classes}, {"exceptional", p.exceptional}}; }

Partition cluster_partition_from_json(const Json& j) {
  if (!j.contains("classes") || !j.contains("exceptional")) throw Error("schema", "partition JSON needs classes and exceptional");
  Partition p;
  for (const auto& c : j.at("classes")) p.classes.push_back(sorted_unique(c.get<VertexList>()));
  p.exceptional = sorted_unique(j.at("exceptional").get<VertexList>());
  return p;
}

Json verdict_to_json(const RegularityVerdict& v) {
  Json j{{"regular", v.regular},
         {"method", to_string(v.method)},
         {"eta", to_string(v.eta)},
         {"pair_density", to_string(v.pair_density)}};
  if (v.witness) {
    j["witness"] = {{"u", v.witness->u}, {"w", v.witness->w}};
    j["witness_density"] = to_string(v.witness_density);
  }
  return j;
}

Json regular_pair_to_json(const RegularPair& p) {
  return {{"a", p.a}, {"b", p.b}, {"density", to_string(p.density)}, {"verdict", verdict_to_json(p.verdict)}};
}

RegularPair regular_pair_from_json(const Json& j) {
  RegularPair rp;
  rp.a = j.at("a").get<VertexList>();
  rp.b = j.at("b").get<VertexList>();
  rp.density = parse_rational(j.at("density").get<std::string>());
  const Json& v = j.at("verdict");
  rp.verdict.regular = v.at("regular").get<bool>();
  rp.verdict.eta = parse_rational(v.at("eta").get<std::string>());
  rp.verdict.pair_density = rp.density;
  const std::string method = v.value("method", "exact");
  rp.verdict.method = method == "sampled" ? RegMode::kSampled
                      : method == "degree-certificate" ? RegMode::kCertificate
                                                       : RegMode::kExact;
  if (v.contains("witness")) {
    rp.verdict.witness = Witness{v.at("witness").at("u").get<VertexList>(), v.at("witness").at("w").get<VertexList>()};
    rp.verdict.witness_density = parse_rational(v.at("witness_density").get<std::string>());
  }
  return rp;
}

}  // namespace lks
