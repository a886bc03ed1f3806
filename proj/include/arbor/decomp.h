#ifndef ARBOR_DECOMP_H_
#define ARBOR_DECOMP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arbor/graph.h"
#include "arbor/rational.h"

namespace arbor {

struct DecompOptions {
  std::uint64_t seed = 1;
  // Certification trials per component: ceil(trials_multiplier * log2 n).
  int trials_multiplier = 4;
};

struct DecompResult {
  EdgeSet cut_edges;
  // Weakest expansion target any component had to fall back to.
  Rational achieved_phi;
  int rounds = 0;
};

// Terminal-set expander decomposition. Returns cut edges B with
// 2 c(B) <= c(terminals) such that, inside every SCC C of G minus B, no
// violated cut was found for
//   min(delta(T), rho(T)) >= phi * min(vol(C & T), vol(C \ T)),
// volumes taken over terminal-edge degrees. Violations are searched by
// pairwise minimum cuts and by random volume-bisection flow demands; each
// violation cuts the sparse direction(s) inside C and recurses. Components
// whose cuts would break the halving budget retry with phi halved.
DecompResult Decompose(const Graph& g, const EdgeSet& terminals,
                       Rational phi_target, const DecompOptions& options = {});

// Level sets E_1..E_L built by repeated decomposition, with the SCC
// partitions of G minus E_{>i} for i = 0..L.
struct Hierarchy {
  std::vector<EdgeSet> levels;        // levels[i - 1] is E_i
  std::vector<Partition> partitions;  // partitions[i] for i = 0..L
  std::vector<Rational> achieved_phi;  // per level i = 1..L
  std::vector<int> top_level;          // largest i with e in E_i
  Rational phi_target;

  int num_levels() const { return static_cast<int>(levels.size()); }
  const EdgeSet& Level(int i) const { return levels[i - 1]; }
  const Partition& PartitionAt(int i) const { return partitions[i]; }
  // e in E_{>i}; every edge is above level 0.
  bool Above(EdgeId e, int i) const { return top_level[e] > i; }
  EdgeSet EdgesAbove(int i) const;
};

Hierarchy BuildHierarchy(const Graph& g, Rational phi_target,
                         const DecompOptions& options = {});

// Structural invariants: union covers E, halving, level-count bound,
// partitions equal the SCCs of G minus E_{>i}, laminar refinement, and the
// source a singleton. Returns the first violation.
std::optional<std::string> CheckHierarchy(const Graph& g, const Hierarchy& h);

// ceil(log2(total)) + 1, with 1 for total <= 1.
int LevelBound(Capacity total);

}  // namespace arbor

#endif  // ARBOR_DECOMP_H_
