#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drgforge/bitset.hpp"
#include "drgforge/graph.hpp"
#include "drgforge/group.hpp"

namespace drgforge {

/// Layers N_0..N_d around a base vertex.
struct DistancePartition {
  int base = 0;
  std::vector<VertexSet> layers;
  std::vector<int> distance;  // per vertex

  int diameter() const { return static_cast<int>(layers.size()) - 1; }
  std::vector<int> layer_sizes() const;
};

/// Throws Disconnected.
DistancePartition distance_partition(const Graph& graph, int base);

/// {b_0,...,b_{d-1}; c_1,...,c_d}. a_i = k - b_i - c_i with c_0 = b_d = 0.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  int diameter() const { return static_cast<int>(b.size()); }
  int valency() const { return b.empty() ? 0 : b.front(); }
  int b_at(int i) const { return i < diameter() ? b[i] : 0; }
  int c_at(int i) const { return i == 0 ? 0 : c[i - 1]; }
  int a_at(int i) const { return valency() - b_at(i) - c_at(i); }
  int lambda() const { return a_at(1); }
  int mu() const { return c_at(2); }

  /// k_0..k_d from k_{i+1} = k_i b_i / c_{i+1}. Throws InvalidArray when a
  /// quotient is not integral.
  std::vector<long long> layer_sizes() const;
  long long vertex_count() const;

  /// Throws InvalidArray: c_1 = 1, b/c non-negative, a_i >= 0, integral k_i.
  void validate() const;

  /// "{8,7,4,1;1,4,7,8}"
  std::string to_string() const;
  static IntersectionArray parse(std::string_view text);

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

enum class BaseMode {
  Single,  // base vertex 0 only; exact for vertex-transitive graphs
  All,     // every base vertex, arrays must coincide
};

struct StructureReport {
  bool is_drg = false;
  std::optional<IntersectionArray> array;
  int order = 0;
  int valency = 0;
  int diameter = 0;
  bool bipartite = false;
  // Imprimitivity data below is only computed for distance-regular graphs.
  bool antipodal = false;
  std::optional<int> antipodal_index;
  bool primitive = false;
};

/// Intersection numbers seen from one base, or nullopt when some layer has
/// two vertices with different counts. Serial building block.
std::optional<IntersectionArray> base_intersection_array(const Graph& graph, int base);

/// Throws Disconnected and NotRegular. In All mode the bases are checked in
/// parallel with `threads` workers (0 = runtime default) and combined in
/// vertex order.
StructureReport check_distance_regular(const Graph& graph, BaseMode mode = BaseMode::All,
                                       int threads = 0);
/// Cayley graphs are vertex-transitive, so Single is the default here.
StructureReport check_distance_regular(const CayleyGraph& graph,
                                       BaseMode mode = BaseMode::Single, int threads = 0);

/// Row-major |V|x|V| distances (BFS from every vertex). Throws Disconnected.
std::vector<int> all_pairs_distances(const Graph& graph);

bool is_bipartite(const Graph& graph);

/// Group-ring route: the class sums of the distance layers around the
/// identity multiply with coefficients constant on every layer.
/// Throws Disconnected.
bool distance_module_oracle(const CayleyGraph& graph);

struct HalvedGraphs {
  Graph first;   // contains vertex 0
  Graph second;
  std::vector<int> first_vertices;
  std::vector<int> second_vertices;
};

/// Distance-2 graph restricted to each colour class. Throws NotBipartite
/// (and Disconnected).
HalvedGraphs halved_graphs(const Graph& graph);

struct AntipodalQuotient {
  Graph graph;
  std::vector<std::vector<int>> classes;  // ordered by smallest member
};

/// Classes of d(u,v) in {0, d}; class graph adjacent when some edge crosses.
/// Requires diameter >= 2. Throws NotAntipodal (and Disconnected).
AntipodalQuotient antipodal_quotient(const Graph& graph);

/// Cay(G/B, S/B) for a normal subgroup B; cosets ordered by smallest member.
/// Throws NotNormal.
Graph coset_quotient(const CayleyGraph& graph, const Subgroup& block);

enum class NamedKind {
  Complete,
  Cycle,
  CompleteBipartiteMinusMatching,
  CompleteMultipartite,
  ConferenceParameters,
  Other,
};

struct NamedGraph {
  NamedKind kind = NamedKind::Other;
  int parts = 0;      // t for K_{t x m}, 2 for K_{m,m}-mK_2
  int part_size = 0;  // m
  int order = 0;
  bool prime_order = false;  // conference parameters on a prime number of vertices

  std::string to_string() const;
  friend bool operator==(const NamedGraph&, const NamedGraph&) = default;
};

/// Precedence: Complete > Cycle > K_{m,m}-mK_2 > K_{t x m} > conference.
NamedGraph recognize_named(const Graph& graph);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // decreasing
  std::vector<long long> multiplicities;
};

/// Eigenvalues of the tridiagonal intersection matrix with multiplicities
/// m(theta) = |V| / sum_i k_i u_i(theta)^2. Throws InvalidArray when the
/// array is malformed, `order` disagrees with sum k_i, or a multiplicity is
/// not integral.
SpectrumReport intersection_matrix_spectrum(const IntersectionArray& array, long long order);

}  // namespace drgforge
