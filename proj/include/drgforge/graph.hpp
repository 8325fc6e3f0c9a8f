#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drgforge/bitset.hpp"
#include "drgforge/group.hpp"
#include "drgforge/residue.hpp"

namespace drgforge {

/// Simple undirected graph on vertices 0..order-1 with one bit-row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return order_; }
  int words_per_row() const { return words_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (data_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U; }
  std::span<const Word> row(int v) const { return {data_.data() + row_offset(v), static_cast<std::size_t>(words_)}; }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Valency when regular, otherwise nullopt.
  std::optional<int> valency() const;
  /// Symmetric adjacency with an empty diagonal.
  bool is_simple() const;

  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(int v) const { return static_cast<std::size_t>(v) * words_; }
  void set_bit(int u, int v) { data_[row_offset(u) + (v >> 6)] |= Word{1} << (v & 63); }

  int order_ = 0;
  int words_ = 0;
  std::vector<Word> data_;
};

/// Breadth-first reachability from vertex 0.
bool is_connected(const Graph& graph);

/// (R, T) over the rho-modulus of a family: S = rho^R ∪ rho^T tau.
/// Cyclic uses R only; CyclicTimesZ2 reads T as the (t, 1) elements.
struct ConnectionSpec {
  GroupFamily family;
  ResidueSet r;
  ResidueSet t;
};

/// Order of rho for the family (m, n or 2n).
int rho_modulus(const GroupFamily& family);

/// Throws ZeroInR, BadClosure or EmptyConnection with a diagnostic naming the
/// missing residue.
void validate(const ConnectionSpec& spec);

std::vector<Element> connection_set(const Group& group, const ConnectionSpec& spec);

class CayleyGraph {
 public:
  const Group& group() const { return group_; }
  std::span<const Element> connection() const { return connection_; }
  const Graph& graph() const { return graph_; }
  const std::optional<ConnectionSpec>& spec() const { return spec_; }
  int order() const { return graph_.order(); }
  int valency() const { return static_cast<int>(connection_.size()); }

 private:
  friend CayleyGraph build_cayley(const Group& group, std::span<const Element> connection);
  friend CayleyGraph build_from_spec(const ConnectionSpec& spec);

  CayleyGraph(Group group, std::vector<Element> connection, Graph graph)
      : group_(std::move(group)), connection_(std::move(connection)), graph_(std::move(graph)) {}

  Group group_;
  std::vector<Element> connection_;
  Graph graph_;
  std::optional<ConnectionSpec> spec_;
};

/// Cay(G, S): g ~ h iff g^-1 h in S. Throws IdentityInSet, NotInverseClosed.
CayleyGraph build_cayley(const Group& group, std::span<const Element> connection);
CayleyGraph build_from_spec(const ConnectionSpec& spec);

CayleyGraph build_sd(int n, const ResidueSet& r, const ResidueSet& t);
CayleyGraph build_psd(int n, const ResidueSet& r, const ResidueSet& t);
/// Dih(n, R, T) over D_n; T arbitrary.
CayleyGraph build_dihedrant(int n, const ResidueSet& r, const ResidueSet& t);
/// Dic(n, R, T) over Dic_n; T = n + T.
CayleyGraph build_dicirculant(int n, const ResidueSet& r, const ResidueSet& t);
CayleyGraph build_circulant(int m, const ResidueSet& r);

/// N(v) read off the adjacency rows.
std::vector<Element> neighborhood(const CayleyGraph& graph, Element v);

/// Closed-form neighbourhood for SD/PSD specs:
///   N(rho^i)     = rho^(i+R) ∪ rho^(i+T) tau
///   N(rho^i tau) = rho^(i+uT) ∪ rho^(i+uR) tau,  u = n-1 (SD) or n+1 (PSD).
std::vector<Element> neighborhood_formula(const ConnectionSpec& spec, Element v);

bool is_connected(const CayleyGraph& graph);
/// <S> = G via subgroup closure.
bool generates_group(const Group& group, std::span<const Element> set);

}  // namespace drgforge
