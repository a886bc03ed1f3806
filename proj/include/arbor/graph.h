#ifndef ARBOR_GRAPH_H_
#define ARBOR_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace arbor {

using Vertex = int;
using EdgeId = int;
using Capacity = std::int64_t;

// Capacities above this bound are rejected so that capacity sums, scaled by
// expansion denominators, stay inside 64-bit arithmetic.
inline constexpr Capacity kMaxCapacity = Capacity{1} << 40;

// Membership bitmap over a dense index universe [0, universe).
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe) : bits_(universe, 0) {}

  static IndexSet Of(int universe, std::span<const int> members) {
    IndexSet set(universe);
    for (int x : members) set.Insert(x);
    return set;
  }
  static IndexSet Full(int universe) {
    IndexSet set(universe);
    for (auto& b : set.bits_) b = 1;
    return set;
  }

  int Universe() const { return static_cast<int>(bits_.size()); }
  bool Contains(int x) const { return bits_[x] != 0; }
  void Insert(int x) { bits_[x] = 1; }
  void Erase(int x) { bits_[x] = 0; }

  int Size() const {
    int count = 0;
    for (char b : bits_) count += b;
    return count;
  }
  bool Empty() const { return Size() == 0; }

  std::vector<int> Members() const {
    std::vector<int> out;
    for (int i = 0; i < Universe(); ++i) {
      if (bits_[i]) out.push_back(i);
    }
    return out;
  }

  IndexSet Complement() const {
    IndexSet out(Universe());
    for (int i = 0; i < Universe(); ++i) out.bits_[i] = !bits_[i];
    return out;
  }

  IndexSet& operator|=(const IndexSet& other) {
    for (int i = 0; i < Universe(); ++i) bits_[i] |= other.bits_[i];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& other) {
    for (int i = 0; i < Universe(); ++i) bits_[i] &= other.bits_[i];
    return *this;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<char> bits_;
};

struct EdgeTag {};
struct VertexTag {};
using EdgeSet = IndexSet<EdgeTag>;
using VertexSet = IndexSet<VertexTag>;

struct RawEdge {
  Vertex tail = 0;
  Vertex head = 0;
  Capacity capacity = 1;
};

struct NormalizeReport {
  int dropped_self_loops = 0;
  int dropped_into_source = 0;
  // original_index[e] is the position of normalized edge e in the raw input.
  std::vector<int> original_index;
};

// Immutable directed multigraph with integer capacities and a distinguished
// source that has no incoming edges. Build one with Normalize().
class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  int m() const { return static_cast<int>(tail_.size()); }
  Vertex source() const { return source_; }
  Capacity max_capacity() const { return max_capacity_; }
  Capacity total_capacity() const { return total_capacity_; }
  bool unit_capacities() const { return max_capacity_ == 1; }

  Vertex tail(EdgeId e) const { return tail_[e]; }
  Vertex head(EdgeId e) const { return head_[e]; }
  Capacity capacity(EdgeId e) const { return capacity_[e]; }

  std::span<const EdgeId> out_edges(Vertex v) const { return out_edges_[v]; }
  std::span<const EdgeId> in_edges(Vertex v) const { return in_edges_[v]; }

  std::vector<RawEdge> Edges() const;

  friend Graph Normalize(int n, Vertex source, std::span<const RawEdge> edges,
                         NormalizeReport* report);

 private:
  int n_ = 0;
  Vertex source_ = 0;
  Capacity max_capacity_ = 1;
  Capacity total_capacity_ = 0;
  std::vector<Vertex> tail_;
  std::vector<Vertex> head_;
  std::vector<Capacity> capacity_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::vector<std::vector<EdgeId>> in_edges_;
};

// Drops self-loops and edges into `source`, keeping the order of the rest.
// Throws kMalformedInput on out-of-range ids, nonpositive capacities, or
// capacities above kMaxCapacity.
Graph Normalize(int n, Vertex source, std::span<const RawEdge> edges,
                NormalizeReport* report = nullptr);

Capacity CapacityOf(const Graph& g, const EdgeSet& edges);

// Vertex partition with components numbered by their smallest member.
struct Partition {
  std::vector<int> component_of;
  std::vector<std::vector<Vertex>> components;

  int size() const { return static_cast<int>(components.size()); }
  int ComponentOf(Vertex v) const { return component_of[v]; }
  VertexSet ComponentSet(int c) const;
  static Partition Singletons(int n);
};

// Strongly connected components of g with the edges of `removed` deleted.
Partition Scc(const Graph& g, const EdgeSet& removed);

// Topological order of the condensation of g minus `removed`. The source's
// component comes first; remaining ties go to the smallest component id.
std::vector<int> SccTopoOrder(const Graph& g, const Partition& partition,
                              const EdgeSet& removed);

struct CutValue {
  Capacity delta = 0;  // capacity leaving S
  Capacity rho = 0;    // capacity entering S
};

CutValue CutValues(const Graph& g, const VertexSet& s);

struct Degrees {
  std::vector<Capacity> in;
  std::vector<Capacity> out;

  Capacity Deg(Vertex v) const { return in[v] + out[v]; }
  Capacity Volume(const VertexSet& s) const;
  Capacity Volume(std::span<const Vertex> vertices) const;
};

// Capacity-weighted degrees counting only the edges of `f`.
Degrees RestrictedDegrees(const Graph& g, const EdgeSet& f);

// Vertices reachable from `from` along edges of g (optionally restricted).
VertexSet Reachable(const Graph& g, Vertex from,
                    const EdgeSet* allowed = nullptr);

}  // namespace arbor

#endif  // ARBOR_GRAPH_H_
