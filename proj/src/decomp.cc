#include "arbor/decomp.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "arbor/error.h"
#include "arbor/maxflow.h"
#include "arbor/random.h"

namespace arbor {

int LogTrials(int n, int multiplier) {
  const double raw = multiplier * std::log2(static_cast<double>(std::max(n, 2)));
  return std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));
}

int LevelBound(Capacity total) {
  if (total <= 1) return 1;
  int bits = 0;
  while ((Capacity{1} << bits) < total) ++bits;
  return bits + 1;
}

namespace {

struct Violation {
  VertexSet side;
  CutValue cut;
  Capacity small_volume = 0;

  Capacity Boundary() const { return std::min(cut.delta, cut.rho); }
};

// a is strictly sparser than b.
bool Sparser(const Violation& a, const Violation& b) {
  return static_cast<__int128>(a.Boundary()) * b.small_volume <
         static_cast<__int128>(b.Boundary()) * a.small_volume;
}

class Certifier {
 public:
  Certifier(const Graph& g, const std::vector<Capacity>& volume, Rational phi,
            int trials)
      : g_(g), volume_(volume), phi_(phi), trials_(trials) {
    if (static_cast<__int128>(g.total_capacity() + 1) * phi.den() >
        (static_cast<__int128>(1) << 62)) {
      Fail(ErrorKind::kScale, "capacities too large for the expansion target");
    }
  }

  std::optional<Violation> FindViolation(const std::vector<Vertex>& members,
                                         std::mt19937_64& rng) {
    members_ = VertexSet::Of(g_.n(), members);
    member_volume_ = 0;
    for (Vertex v : members) member_volume_ += volume_[v];
    best_.reset();

    Vertex hub = members.front();
    for (Vertex v : members) {
      if (volume_[v] > volume_[hub]) hub = v;
    }
    for (Vertex v : members) {
      if (v == hub) continue;
      Consider(MaxFlow(StCutProblem(g_, hub, v)).sink_side.Complement());
      Consider(MaxFlow(StCutProblem(g_, v, hub)).sink_side.Complement());
    }

    std::vector<Vertex> weighted;
    for (Vertex v : members) {
      if (volume_[v] > 0) weighted.push_back(v);
    }
    if (weighted.size() >= 2) {
      for (int trial = 0; trial < trials_; ++trial) {
        std::shuffle(weighted.begin(), weighted.end(), rng);
        VertexSet half(g_.n());
        Capacity half_volume = 0;
        for (Vertex v : weighted) {
          if (2 * (half_volume + volume_[v]) <= member_volume_) {
            half.Insert(v);
            half_volume += volume_[v];
          }
        }
        if (half_volume == 0) continue;
        BisectionFlow(half, half_volume, /*forward=*/true);
        BisectionFlow(half, half_volume, /*forward=*/false);
      }
    }
    return best_;
  }

  bool Violates(Capacity boundary, Capacity small_volume) const {
    return static_cast<__int128>(boundary) * phi_.den() <
           static_cast<__int128>(phi_.num()) * small_volume;
  }

 private:
  // Routes phi-scaled volume from one side of the bisection to the other.
  // Any shortfall exposes a cut violating the expansion inequality.
  void BisectionFlow(const VertexSet& half, Capacity half_volume, bool forward) {
    FlowProblem p(g_);
    p.capacity_scale = phi_.den();
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!members_.Contains(v)) continue;
      const bool in_sources = half.Contains(v) == forward;
      const Capacity amount = phi_.num() * volume_[v];
      if (in_sources) {
        p.source_supply[v] = amount;
      } else {
        p.sink_capacity[v] = amount;
      }
    }
    const FlowResult r = MaxFlow(p);
    if (r.value < phi_.num() * half_volume) Consider(r.sink_side.Complement());
  }

  void Consider(const VertexSet& side) {
    Capacity inside = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (members_.Contains(v) && side.Contains(v)) inside += volume_[v];
    }
    const Capacity small = std::min(inside, member_volume_ - inside);
    if (small == 0) return;
    Violation candidate{side, CutValues(g_, side), small};
    if (!Violates(candidate.Boundary(), small)) return;
    if (!best_ || Sparser(candidate, *best_)) best_ = std::move(candidate);
  }

  const Graph& g_;
  const std::vector<Capacity>& volume_;
  Rational phi_;
  int trials_;
  VertexSet members_;
  Capacity member_volume_ = 0;
  std::optional<Violation> best_;
};

// Recursive certify-or-cut inside one SCC; returns the cut edges.
EdgeSet CertifyOrCut(const Graph& g, const std::vector<Vertex>& component,
                     const std::vector<Capacity>& volume, Rational phi,
                     int trials, std::mt19937_64& rng, int* rounds) {
  EdgeSet cut(g.m());
  Certifier certifier(g, volume, phi, trials);
  std::deque<std::vector<Vertex>> work = {component};
  while (!work.empty()) {
    std::vector<Vertex> members = std::move(work.front());
    work.pop_front();
    Capacity member_volume = 0;
    for (Vertex v : members) member_volume += volume[v];
    if (members.size() < 2 || member_volume == 0) continue;
    ++*rounds;
    auto violation = certifier.FindViolation(members, rng);
    if (!violation) continue;

    const VertexSet inside = VertexSet::Of(g.n(), members);
    const bool cut_out = certifier.Violates(violation->cut.delta,
                                            violation->small_volume);
    const bool cut_in = certifier.Violates(violation->cut.rho,
                                           violation->small_volume);
    EdgeSet outside_edges = EdgeSet::Full(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
      const Vertex u = g.tail(e), w = g.head(e);
      if (!inside.Contains(u) || !inside.Contains(w)) continue;
      outside_edges.Erase(e);
      const bool from_side = violation->side.Contains(u);
      const bool to_side = violation->side.Contains(w);
      if ((cut_out && from_side && !to_side) || (cut_in && !from_side && to_side)) {
        cut.Insert(e);
      }
    }
    EdgeSet removed = outside_edges;
    removed |= cut;
    const Partition split = Scc(g, removed);
    for (const auto& sub : split.components) {
      if (sub.size() >= 2 && inside.Contains(sub.front())) work.push_back(sub);
    }
  }
  return cut;
}

}  // namespace

DecompResult Decompose(const Graph& g, const EdgeSet& terminals,
                       Rational phi_target, const DecompOptions& options) {
  if (phi_target <= Rational(0) || phi_target > Rational(1)) {
    Fail(ErrorKind::kParameter,
         "phi_target must lie in (0, 1], got " + phi_target.ToString());
  }
  DecompResult result{EdgeSet(g.m()), phi_target, 0};
  if (CapacityOf(g, terminals) == 0) return result;

  const Degrees degrees = RestrictedDegrees(g, terminals);
  std::vector<Capacity> volume(g.n());
  for (Vertex v = 0; v < g.n(); ++v) volume[v] = degrees.Deg(v);

  const int trials = LogTrials(g.n(), options.trials_multiplier);
  const Partition initial = Scc(g, EdgeSet(g.m()));
  for (int c = 0; c < initial.size(); ++c) {
    const auto& members = initial.components[c];
    if (members.size() < 2) continue;
    const VertexSet inside = initial.ComponentSet(c);
    Capacity budget = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (terminals.Contains(e) && inside.Contains(g.tail(e)) &&
          inside.Contains(g.head(e))) {
        budget += g.capacity(e);
      }
    }
    Rational phi = phi_target;
    for (int attempt = 0;; ++attempt) {
      Check(attempt < 128, "expansion target underflow while enforcing halving");
      auto rng = MakeRng(options.seed, {static_cast<std::uint64_t>(c),
                                        static_cast<std::uint64_t>(attempt)});
      EdgeSet cut = CertifyOrCut(g, members, volume, phi, trials, rng,
                                 &result.rounds);
      if (2 * CapacityOf(g, cut) <= budget) {
        result.cut_edges |= cut;
        break;
      }
      phi = phi * Rational(1, 2);
    }
    result.achieved_phi = std::min(result.achieved_phi, phi);
  }
  Check(2 * CapacityOf(g, result.cut_edges) <= CapacityOf(g, terminals),
        "decomposition exceeded its halving budget");
  return result;
}

EdgeSet Hierarchy::EdgesAbove(int i) const {
  EdgeSet out(static_cast<int>(top_level.size()));
  for (EdgeId e = 0; e < static_cast<int>(top_level.size()); ++e) {
    if (top_level[e] > i) out.Insert(e);
  }
  return out;
}

Hierarchy BuildHierarchy(const Graph& g, Rational phi_target,
                         const DecompOptions& options) {
  Hierarchy h;
  h.phi_target = phi_target;
  const int max_levels = LevelBound(g.total_capacity()) + 1;
  EdgeSet current = EdgeSet::Full(g.m());
  h.levels.push_back(current);
  for (int i = 1;; ++i) {
    DecompOptions level_options = options;
    level_options.seed = options.seed * 0x9E3779B97F4A7C15ULL + i;
    DecompResult r = Decompose(g, current, phi_target, level_options);
    h.achieved_phi.push_back(r.achieved_phi);
    if (r.cut_edges.Empty()) break;
    if (i + 1 > max_levels ||
        2 * CapacityOf(g, r.cut_edges) > CapacityOf(g, current)) {
      Fail(ErrorKind::kHalvingViolation,
           "level " + std::to_string(i + 1) + " breaks the halving bound");
    }
    current = r.cut_edges;
    h.levels.push_back(current);
  }
  h.top_level.assign(g.m(), 0);
  for (int i = 1; i <= h.num_levels(); ++i) {
    for (EdgeId e = 0; e < g.m(); ++e) {
      if (h.Level(i).Contains(e)) h.top_level[e] = i;
    }
  }
  h.partitions.push_back(Partition::Singletons(g.n()));
  for (int i = 1; i <= h.num_levels(); ++i) {
    h.partitions.push_back(Scc(g, h.EdgesAbove(i)));
  }
  return h;
}

std::optional<std::string> CheckHierarchy(const Graph& g, const Hierarchy& h) {
  const int levels = h.num_levels();
  if (levels < 1) return "hierarchy has no levels";
  if (static_cast<int>(h.partitions.size()) != levels + 1) {
    return "expected one partition per level 0..L";
  }
  EdgeSet covered(g.m());
  for (const auto& level : h.levels) {
    if (level.Universe() != g.m()) return "level edge set built for another graph";
    covered |= level;
  }
  if (covered.Size() != g.m()) return "levels do not cover every edge";
  for (int i = 1; i < levels; ++i) {
    if (2 * CapacityOf(g, h.Level(i + 1)) > CapacityOf(g, h.Level(i))) {
      return "c(E_" + std::to_string(i + 1) + ") exceeds half of c(E_" +
             std::to_string(i) + ")";
    }
  }
  if (levels > LevelBound(g.total_capacity())) {
    return "L = " + std::to_string(levels) + " exceeds ceil(log2 c(E)) + 1";
  }
  if (h.partitions[0].size() != g.n()) return "level-0 partition is not all singletons";
  for (int i = 1; i <= levels; ++i) {
    EdgeSet above(g.m());
    for (int j = i + 1; j <= levels; ++j) above |= h.Level(j);
    if (Scc(g, above).component_of != h.partitions[i].component_of) {
      return "level-" + std::to_string(i) + " partition is not SCC(G - E_{>i})";
    }
  }
  for (int i = 0; i < levels; ++i) {
    const Partition& lower = h.partitions[i];
    const Partition& upper = h.partitions[i + 1];
    for (const auto& comp : lower.components) {
      for (Vertex v : comp) {
        if (upper.ComponentOf(v) != upper.ComponentOf(comp.front())) {
          return "level-" + std::to_string(i) + " partition does not refine level " +
                 std::to_string(i + 1);
        }
      }
    }
  }
  for (int i = 0; i <= levels; ++i) {
    const Partition& p = h.partitions[i];
    if (p.components[p.ComponentOf(g.source())].size() != 1) {
      return "source is not a singleton at level " + std::to_string(i);
    }
  }
  return std::nullopt;
}

}  // namespace arbor
