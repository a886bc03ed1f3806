#include "arbor/generators.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "arbor/error.h"
#include "arbor/random.h"

namespace arbor {

namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) Fail(ErrorKind::kParameter, message);
}

void CheckCommon(const GenParams& p, int min_n) {
  Require(p.n >= min_n && p.n <= (1 << 20),
          "n must be in [" + std::to_string(min_n) + ", 2^20]");
  Require(p.m >= 0 && p.m <= (1 << 24), "m must be in [0, 2^24]");
  Require(p.max_cap >= 1 && p.max_cap <= kMaxCapacity, "max-cap must be in [1, 2^40]");
}

class Builder {
 public:
  Builder(const GenParams& p, std::uint64_t stream)
      : rng_(MakeRng(p.seed, {stream})), cap_(1, p.max_cap) {
    out_.n = p.n;
  }

  Vertex Uniform(Vertex lo, Vertex hi) {
    return std::uniform_int_distribution<Vertex>(lo, hi)(rng_);
  }
  void Arc(Vertex t, Vertex h) { out_.edges.push_back({t, h, cap_(rng_)}); }
  // Random arc between distinct vertices with head != source.
  void RandomArc() {
    const Vertex h = Uniform(1, out_.n - 1);
    Vertex t = Uniform(0, out_.n - 2);
    if (t >= h) ++t;
    Arc(t, h);
  }
  std::mt19937_64& rng() { return rng_; }
  GeneratedGraph Take() { return std::move(out_); }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<Capacity> cap_;
  GeneratedGraph out_;
};

}  // namespace

GeneratedGraph RandomGnm(const GenParams& p) {
  CheckCommon(p, 2);
  Builder b(p, 1);
  for (int j = 0; j < p.m; ++j) b.RandomArc();
  return b.Take();
}

GeneratedGraph DagLayered(const GenParams& p) {
  CheckCommon(p, 2);
  Require(p.layers >= 1 && p.layers <= p.n - 1, "layers must be in [1, n - 1]");
  Builder b(p, 2);
  std::vector<int> layer(p.n, 0);
  // Layer j >= 1 gets at least one vertex; the rest are spread at random.
  for (Vertex v = 1; v < p.n; ++v) {
    layer[v] = v <= p.layers ? v : b.Uniform(1, p.layers);
  }
  std::sort(layer.begin() + 1, layer.end());
  int arcs = 0;
  for (Vertex v = 1; v < p.n; ++v) {
    Vertex t = b.Uniform(0, v - 1);
    while (layer[t] >= layer[v]) t = b.Uniform(0, v - 1);
    b.Arc(t, v);
    ++arcs;
  }
  for (; arcs < p.m; ++arcs) {
    Vertex t = b.Uniform(0, p.n - 1);
    Vertex h = b.Uniform(1, p.n - 1);
    while (layer[t] == layer[h]) {
      t = b.Uniform(0, p.n - 1);
      h = b.Uniform(1, p.n - 1);
    }
    if (layer[t] > layer[h]) std::swap(t, h);
    b.Arc(t, h);
  }
  return b.Take();
}

GeneratedGraph TwoCliquesBridge(const GenParams& p) {
  CheckCommon(p, 5);
  const int q = (p.n - 1) / 2;
  Require(p.bridges >= 1 && p.bridges <= q * q, "bridges must be in [1, q^2]");
  Builder b(p, 3);
  const auto clique = [&](Vertex first) {
    for (Vertex u = first; u < first + q; ++u) {
      for (Vertex v = first; v < first + q; ++v) {
        if (u != v) b.Arc(u, v);
      }
    }
  };
  for (Vertex v = 1; v <= q; ++v) b.Arc(0, v);
  clique(1);
  clique(1 + q);
  for (int j = 0; j < p.bridges; ++j) {
    b.Arc(b.Uniform(1, q), b.Uniform(q + 1, 2 * q));
    b.Arc(b.Uniform(q + 1, 2 * q), b.Uniform(1, q));
  }
  // An odd leftover vertex hangs off the source.
  for (Vertex v = 2 * q + 1; v < p.n; ++v) {
    b.Arc(0, v);
    b.Arc(v, 1);
  }
  return b.Take();
}

GeneratedGraph CyclePlusChords(const GenParams& p) {
  CheckCommon(p, 3);
  Require(p.chords >= 0 && p.chords <= (1 << 24), "chords must be nonnegative");
  Builder b(p, 4);
  b.Arc(0, 1);
  for (Vertex v = 1; v < p.n; ++v) b.Arc(v, v + 1 < p.n ? v + 1 : 1);
  for (int j = 0; j < p.chords; ++j) b.RandomArc();
  return b.Take();
}

GeneratedGraph KnownPacking(const GenParams& p) {
  GenParams unit = p;
  unit.max_cap = 1;
  CheckCommon(unit, 2);
  Require(p.k >= 1 && p.k <= 4096, "k must be in [1, 4096]");
  Builder b(unit, 5);
  std::vector<Vertex> order(p.n - 1);
  for (int t = 0; t < p.k; ++t) {
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), b.rng());
    for (int j = 0; j < p.n - 1; ++j) {
      const int parent = b.Uniform(-1, j - 1);
      b.Arc(parent < 0 ? 0 : order[parent], order[j]);
    }
  }
  for (int j = p.k * (p.n - 1); j < p.m; ++j) b.RandomArc();
  return b.Take();
}

const std::vector<std::string>& GeneratorKinds() {
  static const std::vector<std::string> kinds = {
      "random_gnm", "dag_layered", "two_cliques_bridge", "cycle_plus_chords",
      "known_packing"};
  return kinds;
}

GeneratedGraph Generate(const std::string& kind, const GenParams& p) {
  if (kind == "random_gnm") return RandomGnm(p);
  if (kind == "dag_layered") return DagLayered(p);
  if (kind == "two_cliques_bridge") return TwoCliquesBridge(p);
  if (kind == "cycle_plus_chords") return CyclePlusChords(p);
  if (kind == "known_packing") return KnownPacking(p);
  Fail(ErrorKind::kParameter, "unknown generator '" + kind + "'");
}

}  // namespace arbor
