#include "drgforge/drg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

#include "drgforge/error.hpp"
#include "drgforge/group_algebra.hpp"
#include "drgforge/residue.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drgforge {

std::vector<int> DistancePartition::layer_sizes() const {
  std::vector<int> out;
  for (const auto& layer : layers) out.push_back(layer.count());
  return out;
}

DistancePartition distance_partition(const Graph& graph, int base) {
  const int n = graph.order();
  if (base < 0 || base >= n) throw Error(ErrorCode::InvalidParameter, "base vertex out of range");
  DistancePartition p;
  p.base = base;
  p.distance.assign(n, -1);
  VertexSet seen(n);
  VertexSet frontier(n);
  frontier.set(base);
  seen.set(base);
  p.distance[base] = 0;
  int reached = 1;
  int level = 0;
  while (!frontier.none()) {
    p.layers.push_back(frontier);
    VertexSet next(n);
    auto nw = next.words();
    for (int v : frontier.members()) {
      const auto row = graph.row(v);
      for (std::size_t w = 0; w < nw.size(); ++w) nw[w] |= row[w];
    }
    const auto sw = seen.words();
    for (std::size_t w = 0; w < nw.size(); ++w) nw[w] &= ~sw[w];
    ++level;
    for (int v : next.members()) p.distance[v] = level;
    reached += next.count();
    seen |= next;
    frontier = std::move(next);
  }
  if (reached != n) {
    throw Error(ErrorCode::Disconnected, "graph is disconnected (" + std::to_string(reached) + " of " +
                                             std::to_string(n) + " vertices reachable)");
  }
  return p;
}

// ---------------------------------------------------------------------------

std::vector<long long> IntersectionArray::layer_sizes() const {
  std::vector<long long> k{1};
  for (int i = 0; i < diameter(); ++i) {
    const long long num = k.back() * b[i];
    if (c[i] <= 0 || num % c[i] != 0) {
      throw Error(ErrorCode::InvalidArray, "k_" + std::to_string(i + 1) + " is not integral in " + to_string());
    }
    k.push_back(num / c[i]);
  }
  return k;
}

long long IntersectionArray::vertex_count() const {
  long long total = 0;
  for (long long x : layer_sizes()) total += x;
  return total;
}

void IntersectionArray::validate() const {
  const std::string text = to_string();
  if (b.empty() || b.size() != c.size()) {
    throw Error(ErrorCode::InvalidArray, "b and c must have the same positive length: " + text);
  }
  if (c.front() != 1) throw Error(ErrorCode::InvalidArray, "c_1 must be 1: " + text);
  for (int i = 0; i < diameter(); ++i) {
    if (b[i] <= 0 || c[i] <= 0) throw Error(ErrorCode::InvalidArray, "entries must be positive: " + text);
  }
  for (int i = 0; i <= diameter(); ++i) {
    if (a_at(i) < 0) throw Error(ErrorCode::InvalidArray, "a_" + std::to_string(i) + " < 0 in " + text);
  }
  (void)layer_sizes();
}

std::string IntersectionArray::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

IntersectionArray IntersectionArray::parse(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.size() < 2 || trimmed.front() != '{' || trimmed.back() != '}') {
    throw Error(ErrorCode::InvalidArray, "expected {b0,...;c1,...}, got '" + std::string(text) + "'");
  }
  trimmed = trimmed.substr(1, trimmed.size() - 2);
  const auto semi = trimmed.find(';');
  if (semi == std::string_view::npos) throw Error(ErrorCode::InvalidArray, "missing ';' in array");
  IntersectionArray a;
  for (long long x : parse_int_list(trimmed.substr(0, semi))) a.b.push_back(static_cast<int>(x));
  for (long long x : parse_int_list(trimmed.substr(semi + 1))) a.c.push_back(static_cast<int>(x));
  a.validate();
  return a;
}

// ---------------------------------------------------------------------------

std::optional<IntersectionArray> base_intersection_array(const Graph& graph, int base) {
  const DistancePartition p = distance_partition(graph, base);
  const int d = p.diameter();
  IntersectionArray array;
  array.b.resize(d);
  array.c.resize(d);
  for (int i = 0; i <= d; ++i) {
    int ci = -1;
    int ai = -1;
    int bi = -1;
    for (int v : p.layers[i].members()) {
      const auto row = graph.row(v);
      const int c = i > 0 ? and_count(row, p.layers[i - 1].words()) : 0;
      const int a = and_count(row, p.layers[i].words());
      const int b = i < d ? and_count(row, p.layers[i + 1].words()) : 0;
      if (ci < 0) {
        ci = c;
        ai = a;
        bi = b;
      } else if (c != ci || a != ai || b != bi) {
        return std::nullopt;
      }
    }
    if (i < d) array.b[i] = bi;
    if (i > 0) array.c[i - 1] = ci;
  }
  return array;
}

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

bool connected_relation(int n, const std::function<bool(int, int)>& related) {
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && related(u, v)) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return static_cast<int>(queue.size()) == n;
}

/// Classes of the relation d(u,v) in {0, d}, or nullopt when it is not an
/// equivalence with equal class sizes.
std::optional<std::vector<std::vector<int>>> antipodal_classes(const std::vector<int>& dist, int n,
                                                               int diameter) {
  std::vector<VertexSet> cls(n, VertexSet(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int duv = dist[static_cast<std::size_t>(u) * n + v];
      if (duv == 0 || duv == diameter) cls[u].set(v);
    }
  }
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> classes;
  for (int u = 0; u < n; ++u) {
    for (int v : cls[u].members()) {
      if (!(cls[v] == cls[u])) return std::nullopt;
    }
    if (owner[u] >= 0) continue;
    classes.push_back(cls[u].members());
    for (int v : classes.back()) owner[v] = static_cast<int>(classes.size()) - 1;
  }
  for (const auto& c : classes) {
    if (c.size() != classes.front().size()) return std::nullopt;
  }
  return classes;
}

}  // namespace

std::vector<int> all_pairs_distances(const Graph& graph) {
  const int n = graph.order();
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    const auto p = distance_partition(graph, u);
    std::copy(p.distance.begin(), p.distance.end(), dist.begin() + static_cast<std::ptrdiff_t>(u) * n);
  }
  return dist;
}

bool is_bipartite(const Graph& graph) {
  const int n = graph.order();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : graph.neighbors(u)) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

StructureReport check_distance_regular(const Graph& graph, BaseMode mode, int threads) {
  const int n = graph.order();
  const auto k = graph.valency();
  if (!k) throw Error(ErrorCode::NotRegular, "graph is not regular");
  if (!is_connected(graph)) throw Error(ErrorCode::Disconnected, "graph is disconnected");

  StructureReport report;
  report.order = n;
  report.valency = *k;

  if (mode == BaseMode::Single) {
    report.array = base_intersection_array(graph, 0);
    report.is_drg = report.array.has_value();
    report.diameter = distance_partition(graph, 0).diameter();
  } else {
    std::vector<std::optional<IntersectionArray>> arrays(n);
    std::vector<int> eccentricity(n, 0);
    const int workers = resolve_threads(threads);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4) if (workers > 1)
    for (int v = 0; v < n; ++v) {
      arrays[v] = base_intersection_array(graph, v);
      eccentricity[v] = distance_partition(graph, v).diameter();
    }
    report.diameter = *std::max_element(eccentricity.begin(), eccentricity.end());
    report.is_drg = true;
    for (int v = 0; v < n && report.is_drg; ++v) {
      if (!arrays[v] || !(*arrays[v] == *arrays[0])) report.is_drg = false;
    }
    if (report.is_drg) report.array = arrays[0];
  }
  if (!report.is_drg) report.array.reset();

  report.bipartite = is_bipartite(graph);
  if (!report.is_drg) return report;

  const int d = report.diameter;
  const auto dist = all_pairs_distances(graph);
  if (d >= 2) {
    if (auto classes = antipodal_classes(dist, n, d)) {
      report.antipodal = true;
      report.antipodal_index = static_cast<int>(classes->front().size());
    }
  }
  report.primitive = true;
  for (int i = 1; i <= d && report.primitive; ++i) {
    report.primitive = connected_relation(
        n, [&](int u, int v) { return dist[static_cast<std::size_t>(u) * n + v] == i; });
  }
  return report;
}

StructureReport check_distance_regular(const CayleyGraph& graph, BaseMode mode, int threads) {
  return check_distance_regular(graph.graph(), mode, threads);
}

bool distance_module_oracle(const CayleyGraph& graph) {
  const Group& group = graph.group();
  const DistancePartition p = distance_partition(graph.graph(), group.identity().index);
  std::vector<std::vector<Element>> layers;
  std::vector<GroupRingElement> sums;
  for (const auto& layer : p.layers) {
    std::vector<Element> elems;
    for (int v : layer.members()) elems.push_back({v});
    sums.push_back(GroupRingElement::from_set(group, elems));
    layers.push_back(std::move(elems));
  }
  for (const auto& x : sums) {
    for (const auto& y : sums) {
      const GroupRingElement product = x * y;
      for (const auto& layer : layers) {
        const auto first = product.coefficient(layer.front());
        for (Element g : layer) {
          if (product.coefficient(g) != first) return false;
        }
      }
    }
  }
  return true;
}

HalvedGraphs halved_graphs(const Graph& graph) {
  if (!is_connected(graph)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  if (!is_bipartite(graph)) throw Error(ErrorCode::NotBipartite, "graph is not bipartite");
  const auto p = distance_partition(graph, 0);
  HalvedGraphs h;
  for (int v = 0; v < graph.order(); ++v) {
    (p.distance[v] % 2 == 0 ? h.first_vertices : h.second_vertices).push_back(v);
  }
  auto build = [&](const std::vector<int>& part) {
    Graph g(static_cast<int>(part.size()));
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        if (and_count(graph.row(part[i]), graph.row(part[j])) > 0) {
          g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
    return g;
  };
  h.first = build(h.first_vertices);
  h.second = build(h.second_vertices);
  return h;
}

AntipodalQuotient antipodal_quotient(const Graph& graph) {
  const int n = graph.order();
  const auto dist = all_pairs_distances(graph);
  const int d = *std::max_element(dist.begin(), dist.end());
  if (d < 2) throw Error(ErrorCode::NotAntipodal, "diameter " + std::to_string(d) + " < 2");
  auto classes = antipodal_classes(dist, n, d);
  if (!classes) {
    throw Error(ErrorCode::NotAntipodal, "distance-{0," + std::to_string(d) + "} relation is not an equivalence");
  }
  std::vector<int> owner(n);
  for (std::size_t c = 0; c < classes->size(); ++c) {
    for (int v : (*classes)[c]) owner[v] = static_cast<int>(c);
  }
  AntipodalQuotient q{Graph(static_cast<int>(classes->size())), std::move(*classes)};
  for (int u = 0; u < n; ++u) {
    for (int v : graph.neighbors(u)) {
      if (owner[u] != owner[v]) q.graph.add_edge(owner[u], owner[v]);
    }
  }
  return q;
}

Graph coset_quotient(const CayleyGraph& graph, const Subgroup& block) {
  const Group& group = graph.group();
  if (!(block.group() == group)) throw Error(ErrorCode::MixedGroups, "block subgroup from another group");
  if (!block.is_normal()) throw Error(ErrorCode::NotNormal, block.label() + " is not normal");
  std::vector<int> coset(group.order(), -1);
  std::vector<Element> reps;
  for (int g = 0; g < group.order(); ++g) {
    if (coset[g] >= 0) continue;
    for (Element b : block.members()) coset[group.mul({g}, b).index] = static_cast<int>(reps.size());
    reps.push_back({g});
  }
  Graph q(static_cast<int>(reps.size()));
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (Element s : graph.connection()) {
      const int other = coset[group.mul(reps[c], s).index];
      if (other != static_cast<int>(c)) q.add_edge(static_cast<int>(c), other);
    }
  }
  return q;
}

// ---------------------------------------------------------------------------

std::string NamedGraph::to_string() const {
  switch (kind) {
    case NamedKind::Complete: return "K_" + std::to_string(order);
    case NamedKind::Cycle: return "C_" + std::to_string(order);
    case NamedKind::CompleteBipartiteMinusMatching: {
      const auto m = std::to_string(part_size);
      return "K_{" + m + "," + m + "}-" + m + "K_2";
    }
    case NamedKind::CompleteMultipartite:
      return "K_{" + std::to_string(parts) + "x" + std::to_string(part_size) + "}";
    case NamedKind::ConferenceParameters:
      return std::string("conference(") + std::to_string(order) + (prime_order ? ", prime" : "") + ")";
    case NamedKind::Other: return "other";
  }
  return "other";
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace

NamedGraph recognize_named(const Graph& graph) {
  const int n = graph.order();
  NamedGraph named;
  named.order = n;
  const auto k = graph.valency();
  if (!k) return named;

  if (*k == n - 1) {
    named.kind = NamedKind::Complete;
    named.parts = n;
    named.part_size = 1;
    return named;
  }
  const bool connected = is_connected(graph);
  if (*k == 2 && connected && n >= 3) {
    named.kind = NamedKind::Cycle;
    return named;
  }
  if (connected && n % 2 == 0 && *k == n / 2 - 1 && is_bipartite(graph)) {
    const auto p = distance_partition(graph, 0);
    int even = 0;
    for (int v = 0; v < n; ++v) even += p.distance[v] % 2 == 0;
    if (even == n / 2) {
      named.kind = NamedKind::CompleteBipartiteMinusMatching;
      named.parts = 2;
      named.part_size = n / 2;
      return named;
    }
  }
  // Complete multipartite: "equal or non-adjacent" is an equivalence relation
  // with equal class sizes.
  {
    std::vector<VertexSet> cls(n, VertexSet(n));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (!graph.adjacent(u, v)) cls[u].set(v);
      }
    }
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v : cls[u].members()) {
        if (!(cls[v] == cls[u])) {
          ok = false;
          break;
        }
      }
    }
    const int m = cls[0].count();
    if (ok && m >= 2 && n % m == 0 && n / m >= 2) {
      named.kind = NamedKind::CompleteMultipartite;
      named.parts = n / m;
      named.part_size = m;
      return named;
    }
  }
  if (connected && n % 4 == 1 && *k == (n - 1) / 2) {
    const int lambda = (n - 5) / 4;
    const int mu = (n - 1) / 4;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        const int common = and_count(graph.row(u), graph.row(v));
        ok = common == (graph.adjacent(u, v) ? lambda : mu);
      }
    }
    if (ok) {
      named.kind = NamedKind::ConferenceParameters;
      named.prime_order = is_prime(n);
      return named;
    }
  }
  return named;
}

// ---------------------------------------------------------------------------

SpectrumReport intersection_matrix_spectrum(const IntersectionArray& array, long long order) {
  array.validate();
  const int d = array.diameter();
  const auto sizes = array.layer_sizes();
  const long long total = array.vertex_count();
  if (order != total) {
    throw Error(ErrorCode::InvalidArray, "order " + std::to_string(order) + " but the array gives " +
                                             std::to_string(total) + " vertices");
  }
  // Symmetrised tridiagonal form: same eigenvalues as the intersection matrix.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    m(i, i) = array.a_at(i);
    if (i < d) {
      const double off = std::sqrt(static_cast<double>(array.b_at(i)) * array.c_at(i + 1));
      m(i, i + 1) = off;
      m(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<double> thetas(solver.eigenvalues().data(), solver.eigenvalues().data() + d + 1);
  std::sort(thetas.begin(), thetas.end(), std::greater<>());

  SpectrumReport report;
  const double k = array.valency();
  for (double theta : thetas) {
    if (!report.eigenvalues.empty() && std::abs(report.eigenvalues.back() - theta) < 1e-9) continue;
    // Standard sequence: u_0 = 1, u_1 = theta/k,
    // c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i.
    std::vector<double> u(d + 1, 0.0);
    u[0] = 1.0;
    if (d >= 1) u[1] = theta / k;
    for (int i = 1; i < d; ++i) {
      u[i + 1] = ((theta - array.a_at(i)) * u[i] - array.c_at(i) * u[i - 1]) / array.b_at(i);
    }
    double norm = 0.0;
    for (int i = 0; i <= d; ++i) norm += static_cast<double>(sizes[i]) * u[i] * u[i];
    const double mult = static_cast<double>(order) / norm;
    if (std::abs(mult - std::round(mult)) > 1e-6) {
      throw Error(ErrorCode::InvalidArray, "non-integral multiplicity " + std::to_string(mult) +
                                               " for eigenvalue " + std::to_string(theta));
    }
    report.eigenvalues.push_back(theta);
    report.multiplicities.push_back(std::llround(mult));
  }
  return report;
}

}  // namespace drgforge
