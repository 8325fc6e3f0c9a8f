#include "drgforge/graph.hpp"

#include <algorithm>

#include "drgforge/error.hpp"

namespace drgforge {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::string closure_rule(const GroupFamily& f) {
  const std::string n = std::to_string(f.n);
  switch (f.kind) {
    case FamilyKind::SemiDihedral: return "t -> (" + n + "+1)t";
    case FamilyKind::PseudoSemiDihedral: return "t -> (" + n + "-1)t";
    case FamilyKind::Dicyclic: return "t -> " + n + "+t";
    case FamilyKind::CyclicTimesZ2: return "t -> -t";
    default: return "inversion";
  }
}

}  // namespace

Graph::Graph(int order) : order_(order), words_(words_for(order)) {
  if (order < 1) throw Error(ErrorCode::InvalidParameter, "graph order must be positive");
  data_.assign(static_cast<std::size_t>(order_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  set_bit(u, v);
  set_bit(v, u);
}

int Graph::degree(int v) const {
  int d = 0;
  for (Word w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    Word bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::optional<int> Graph::valency() const {
  const int k = degree(0);
  for (int v = 1; v < order_; ++v) {
    if (degree(v) != k) return std::nullopt;
  }
  return k;
}

bool Graph::is_simple() const {
  for (int u = 0; u < order_; ++u) {
    if (adjacent(u, u)) return false;
    for (int v = u + 1; v < order_; ++v) {
      if (adjacent(u, v) != adjacent(v, u)) return false;
    }
  }
  return true;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

bool is_connected(const Graph& graph) {
  const int n = graph.order();
  VertexSet seen(n);
  std::vector<int> queue{0};
  seen.set(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : graph.neighbors(queue[head])) {
      if (!seen.test(w)) {
        seen.set(w);
        queue.push_back(w);
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

// ---------------------------------------------------------------------------

int rho_modulus(const GroupFamily& family) { return Group(family).modulus(); }

void validate(const ConnectionSpec& spec) {
  const Group group(spec.family);
  const int m = group.modulus();
  if (spec.r.modulus() != m) {
    throw Error(ErrorCode::ModulusMismatch, "R must be a subset of Z_" + std::to_string(m));
  }
  if (spec.t.modulus() != m) {
    throw Error(ErrorCode::ModulusMismatch, "T must be a subset of Z_" + std::to_string(m));
  }
  if (spec.r.contains(0)) throw Error(ErrorCode::ZeroInR, "R contains 0");
  for (int x : spec.r.members()) {
    if (!spec.r.contains(mod(-x, m))) {
      throw Error(ErrorCode::BadClosure, "R is not inverse-closed: missing " + std::to_string(mod(-x, m)));
    }
  }
  if (!group.has_tau() && !spec.t.empty()) {
    throw Error(ErrorCode::BadClosure, "T must be empty for the cyclic family");
  }
  for (int x : spec.t.members()) {
    const int y = group.exponent(group.inv(group.rho_tau(x)));
    if (!spec.t.contains(y)) {
      throw Error(ErrorCode::BadClosure, "T is not closed under " + closure_rule(spec.family) +
                                             ": missing " + std::to_string(y));
    }
  }
  if (spec.r.empty() && spec.t.empty()) {
    throw Error(ErrorCode::EmptyConnection, "R and T are both empty (edgeless graph)");
  }
}

std::vector<Element> connection_set(const Group& group, const ConnectionSpec& spec) {
  std::vector<Element> s;
  for (int x : spec.r.members()) s.push_back(group.rho(x));
  for (int x : spec.t.members()) s.push_back(group.rho_tau(x));
  return s;
}

CayleyGraph build_cayley(const Group& group, std::span<const Element> connection) {
  std::vector<Element> s(connection.begin(), connection.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<char> in_s(group.order(), 0);
  for (Element g : s) {
    if (!group.contains(g)) throw Error(ErrorCode::MixedGroups, "connection element outside group");
    in_s[g.index] = 1;
  }
  if (in_s[0]) throw Error(ErrorCode::IdentityInSet, "the identity is in S");
  for (Element g : s) {
    const Element gi = group.inv(g);
    if (!in_s[gi.index]) {
      throw Error(ErrorCode::NotInverseClosed,
                  "S is not inverse-closed: " + group.format(g) + " has inverse " + group.format(gi) +
                      " outside S");
    }
  }
  Graph graph(group.order());
  for (int g = 0; g < group.order(); ++g) {
    for (Element x : s) {
      const int h = group.mul({g}, x).index;
      if (g < h) graph.add_edge(g, h);
    }
  }
  return CayleyGraph(group, std::move(s), std::move(graph));
}

CayleyGraph build_from_spec(const ConnectionSpec& spec) {
  validate(spec);
  const Group group(spec.family);
  const auto s = connection_set(group, spec);
  CayleyGraph g = build_cayley(group, s);
  g.spec_ = spec;
  return g;
}

CayleyGraph build_sd(int n, const ResidueSet& r, const ResidueSet& t) {
  return build_from_spec({{FamilyKind::SemiDihedral, n}, r, t});
}

CayleyGraph build_psd(int n, const ResidueSet& r, const ResidueSet& t) {
  return build_from_spec({{FamilyKind::PseudoSemiDihedral, n}, r, t});
}

CayleyGraph build_dihedrant(int n, const ResidueSet& r, const ResidueSet& t) {
  return build_from_spec({{FamilyKind::Dihedral, n}, r, t});
}

CayleyGraph build_dicirculant(int n, const ResidueSet& r, const ResidueSet& t) {
  return build_from_spec({{FamilyKind::Dicyclic, n}, r, t});
}

CayleyGraph build_circulant(int m, const ResidueSet& r) {
  return build_from_spec({{FamilyKind::Cyclic, m}, r, ResidueSet(m)});
}

std::vector<Element> neighborhood(const CayleyGraph& graph, Element v) {
  std::vector<Element> out;
  for (int w : graph.graph().neighbors(v.index)) out.push_back({w});
  return out;
}

std::vector<Element> neighborhood_formula(const ConnectionSpec& spec, Element v) {
  const auto kind = spec.family.kind;
  if (kind != FamilyKind::SemiDihedral && kind != FamilyKind::PseudoSemiDihedral) {
    throw Error(ErrorCode::InvalidParameter, "closed-form neighbourhood is defined for sd/psd only");
  }
  const Group group(spec.family);
  const int n = spec.family.n;
  const int u = kind == FamilyKind::SemiDihedral ? n - 1 : n + 1;
  const int i = group.exponent(v);
  std::vector<Element> out;
  if (!group.in_tau_coset(v)) {
    for (int x : spec.r.members()) out.push_back(group.rho(i + x));
    for (int x : spec.t.members()) out.push_back(group.rho_tau(i + x));
  } else {
    for (int x : spec.t.members()) out.push_back(group.rho(i + static_cast<long long>(u) * x));
    for (int x : spec.r.members()) out.push_back(group.rho_tau(i + static_cast<long long>(u) * x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const CayleyGraph& graph) { return is_connected(graph.graph()); }

bool generates_group(const Group& group, std::span<const Element> set) {
  return generated_subgroup(group, set, "<S>").order() == group.order();
}

}  // namespace drgforge
