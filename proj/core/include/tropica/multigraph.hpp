#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropica::graphs {

/// A finite multigraph in half-edge (flag) form.
///
/// Bounded edge `e` owns half-edges `2e` (at `edge(e).first`) and `2e + 1`
/// (at `edge(e).second`); leg `j` owns half-edge `2 * num_edges() + j`.
/// The involution pairs the two half-edges of an edge and fixes leg
/// half-edges. Loops are edges whose two half-edges sit on the same vertex.
/// Legs carry a positive label, or 0 when the graph's legs are unlabeled.
class Multigraph {
public:
  struct Leg {
    int vertex = 0;
    int label = 0;
    friend bool operator==(const Leg&, const Leg&) = default;
  };

  Multigraph() = default;
  explicit Multigraph(int num_vertices);

  int add_vertex(int genus = 0);
  int add_edge(int u, int v);
  int add_leg(int v, int label = 0);
  void set_genus(int v, int genus);

  int num_vertices() const { return static_cast<int>(genus_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_legs() const { return static_cast<int>(legs_.size()); }
  int num_half_edges() const { return 2 * num_edges() + num_legs(); }

  const std::pair<int, int>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const Leg& leg(int j) const { return legs_[static_cast<std::size_t>(j)]; }
  const std::vector<Leg>& legs() const { return legs_; }
  int genus(int v) const { return genus_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& genera() const { return genus_; }

  // Half-edge view.
  int vertex_of(int h) const;
  int partner(int h) const;
  bool is_leg(int h) const { return h >= 2 * num_edges(); }
  int leg_label_of(int h) const;
  std::vector<int> half_edges_at(int v) const;

  bool is_loop(int e) const { return edge(e).first == edge(e).second; }
  bool has_loop() const;
  bool has_parallel_edges() const;
  /// Edge multiplicity between u and v (loops counted once each).
  int multiplicity(int u, int v) const;

  int valence(int v) const;
  int num_components() const;
  bool is_connected() const { return num_components() == 1; }
  /// #edges - #vertices + #components.
  int first_betti() const;
  /// first_betti() + sum of vertex genera.
  int total_genus() const;
  int genus_sum() const;

  /// Throws ArgumentError when an endpoint is out of range, a genus is
  /// negative, or a vertex of a multi-vertex graph is isolated.
  void validate() const;

  /// Relabels vertices: new index of old vertex v is `perm[v]`. Edge and leg order is kept.
  Multigraph permute_vertices(const std::vector<int>& perm) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
  std::vector<int> genus_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Leg> legs_;
};

/// Line-oriented text form:
///   V <n> E <m> L <k>
///   e <v1> <v2>        one per bounded edge, in edge order
///   l <v> <label>      one per leg, in leg order
///   g <v> <genus>      one per positive-genus vertex, increasing v
std::string to_text(const Multigraph& g);
Multigraph from_text(std::string_view text);

/// Contracts bounded edge `e`: its endpoints merge (the merged vertex takes the
/// smaller index and the summed genus), all other edges and legs keep their
/// relative order. Throws LoopContractionError for a loop and ArgumentError
/// for an out-of-range id.
Multigraph contract_edge(const Multigraph& g, int e);

/// Contracts the edge containing half-edge `h`; a leg half-edge is rejected with ArgumentError.
Multigraph contract_flag(const Multigraph& g, int h);

}  // namespace tropica::graphs
