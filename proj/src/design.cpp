#include "drgforge/design.hpp"

#include <algorithm>
#include <set>

#include "drgforge/error.hpp"
#include "drgforge/group_algebra.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drgforge {

namespace {

std::vector<Element> as_sorted_set(std::span<const Element> set) {
  std::vector<Element> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_subset(const Subgroup& ambient, std::span<const Element> set) {
  for (Element g : set) {
    if (!ambient.contains(g)) {
      throw Error(ErrorCode::NotASubset, "element index " + std::to_string(g.index) + " is not in " + ambient.label());
    }
  }
}

/// counts[g] = #{(x, y) in D^2 : x y^-1 = g}
std::vector<int> difference_counts(const Group& group, std::span<const Element> set) {
  std::vector<int> counts(group.order(), 0);
  std::vector<Element> inverses;
  inverses.reserve(set.size());
  for (Element y : set) inverses.push_back(group.inv(y));
  for (Element x : set) {
    for (Element yi : inverses) ++counts[group.mul(x, yi).index];
  }
  return counts;
}

bool is_trivial(int order, int k) { return k == order || k == order - 1 || k == 1 || k == 0; }

/// Forbidden subgroup of a relative difference set read off its difference
/// counts, or nullopt when the counts do not have that shape.
struct RdsShape {
  std::vector<Element> forbidden;
  int mu = 0;
};

std::optional<RdsShape> rds_shape(const Subgroup& ambient, const std::vector<int>& counts) {
  const Group& group = ambient.group();
  RdsShape shape{{group.identity()}, -1};
  for (Element g : ambient.members()) {
    if (g == group.identity()) continue;
    if (counts[g.index] == 0) {
      shape.forbidden.push_back(g);
    } else if (shape.mu < 0) {
      shape.mu = counts[g.index];
    } else if (counts[g.index] != shape.mu) {
      return std::nullopt;
    }
  }
  if (shape.mu < 0) return std::nullopt;
  if (!is_subgroup(group, shape.forbidden)) return std::nullopt;
  return shape;
}

}  // namespace

std::string DesignReport::parameters() const {
  auto s = [](int x) { return std::to_string(x); };
  if (kind == DesignKind::DifferenceSet) return "(" + s(n) + "," + s(k) + "," + s(lambda) + ")";
  return "(" + s(m) + "," + s(r) + "," + s(k) + "," + s(mu) + ")";
}

std::optional<DesignReport> verify_difference_set(const Subgroup& ambient, std::span<const Element> set) {
  require_subset(ambient, set);
  const Group& group = ambient.group();
  const auto d = as_sorted_set(set);
  const auto counts = difference_counts(group, d);
  int lambda = -1;
  for (Element g : ambient.members()) {
    if (g == group.identity()) continue;
    if (lambda < 0) lambda = counts[g.index];
    else if (counts[g.index] != lambda) return std::nullopt;
  }
  DesignReport report;
  report.kind = DesignKind::DifferenceSet;
  report.n = ambient.order();
  report.k = static_cast<int>(d.size());
  report.lambda = std::max(lambda, 0);
  report.ambient = ambient.label();
  report.trivial = is_trivial(report.n, report.k);
  return report;
}

bool relative_difference_set_identity(const Subgroup& ambient, const Subgroup& forbidden,
                                      std::span<const Element> set, int mu) {
  const Group& group = ambient.group();
  const auto d = as_sorted_set(set);
  const auto x = GroupRingElement::from_set(group, d);
  const GroupRingElement lhs = x * x.inverted();
  GroupRingElement rhs(group);
  rhs[group.identity()] = static_cast<std::int64_t>(d.size());
  for (Element g : ambient.members()) {
    if (!forbidden.contains(g)) rhs[g] += mu;
  }
  return lhs == rhs;
}

std::optional<DesignReport> verify_relative_difference_set(const Subgroup& ambient, const Subgroup& forbidden,
                                                           std::span<const Element> set) {
  require_subset(ambient, set);
  if (!forbidden.is_subgroup_of(ambient)) {
    throw Error(ErrorCode::NotASubgroupChain, forbidden.label() + " is not a subgroup of " + ambient.label());
  }
  if (forbidden.order() == ambient.order()) {
    throw Error(ErrorCode::NotASubgroupChain, forbidden.label() + " is not a proper subgroup of " + ambient.label());
  }
  const Group& group = ambient.group();
  const auto d = as_sorted_set(set);
  const auto counts = difference_counts(group, d);
  int mu = -1;
  for (Element g : ambient.members()) {
    if (g == group.identity()) continue;
    if (forbidden.contains(g)) {
      if (counts[g.index] != 0) return std::nullopt;
    } else if (mu < 0) {
      mu = counts[g.index];
    } else if (counts[g.index] != mu) {
      return std::nullopt;
    }
  }
  if (!relative_difference_set_identity(ambient, forbidden, d, mu)) {
    throw Error(ErrorCode::Internal, "difference counting and group-ring product disagree");
  }

  DesignReport report;
  report.kind = DesignKind::RelativeDifferenceSet;
  report.r = forbidden.order();
  report.m = ambient.order() / report.r;
  report.n = ambient.order();
  report.k = static_cast<int>(d.size());
  report.mu = mu;
  report.ambient = ambient.label();
  report.forbidden = forbidden.label();
  report.trivial = is_trivial(ambient.order(), report.k);

  // D^-1 is a relative difference set iff the counts of y^-1 x have the
  // relative-difference-set shape for some subgroup.
  std::vector<Element> inverse;
  for (Element g : d) inverse.push_back(group.inv(g));
  const auto inv_counts = difference_counts(group, inverse);
  const auto shape = rds_shape(ambient, inv_counts);
  report.symmetric = shape.has_value() && static_cast<int>(shape->forbidden.size()) < ambient.order();
  return report;
}

bool check_symmetry_condition(const Group& group, std::span<const Element> set, Element a) {
  std::vector<Element> lhs;
  std::vector<Element> rhs;
  for (Element d : set) {
    lhs.push_back(group.inv(d));
    rhs.push_back(group.mul(group.mul(a, d), a));
  }
  return as_sorted_set(lhs) == as_sorted_set(rhs);
}

std::vector<Element> left_translate(const Group& group, Element a, std::span<const Element> set) {
  std::vector<Element> out;
  const Element ai = group.inv(a);
  for (Element s : set) out.push_back(group.mul(ai, s));
  return as_sorted_set(out);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Element> representatives(const Subgroup& h, bool all) {
  const Group& group = h.group();
  if (!all) return {h.min_outside()};
  if (group.order() > 128) {
    throw Error(ErrorCode::TooLarge, "all-representatives mode is limited to order 128");
  }
  std::vector<Element> reps;
  for (Element g : group.elements()) {
    if (!h.contains(g)) reps.push_back(g);
  }
  return reps;
}

/// "<g>" for a cyclic subgroup, otherwise the member list.
std::string subgroup_label(const Group& group, std::span<const Element> members) {
  const int order = static_cast<int>(members.size());
  for (Element g : members) {
    if (group.element_order(g) == order) return "<" + group.format(g) + ">";
  }
  std::string s;
  for (Element g : members) s += (s.empty() ? "" : ",") + group.format(g);
  return "{" + s + "}";
}

std::vector<int> layer_indices(const DistancePartition& p, int i) {
  if (i >= static_cast<int>(p.layers.size())) return {};
  return p.layers[i].members();
}

}  // namespace

EquivalenceReport check_bipartite_d3_equivalence(const CayleyGraph& graph, bool all_representatives) {
  const Group& group = graph.group();
  if (!is_connected(graph)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  EquivalenceReport out;

  const auto report = check_distance_regular(graph);
  if (report.is_drg && report.bipartite && report.diameter == 3) {
    const auto& a = *report.array;
    const int k = a.valency();
    const int mu = a.mu();
    const IntersectionArray expected{{k, k - 1, k - mu}, {1, mu, k}};
    out.array = a;
    out.graph_side = a == expected && !is_trivial(group.order() / 2, k);
  }

  for (const Subgroup& h : index2_subgroups(group)) {
    bool all_ok = true;
    std::optional<DesignReport> found;
    Element used{};
    for (Element a : representatives(h, all_representatives)) {
      const auto d = left_translate(group, a, graph.connection());
      const bool inside = std::all_of(d.begin(), d.end(), [&](Element g) { return h.contains(g); });
      std::optional<DesignReport> ds;
      if (inside) ds = verify_difference_set(h, d);
      if (!ds || ds->trivial || !check_symmetry_condition(group, d, a)) {
        all_ok = false;
        break;
      }
      if (!found) {
        found = ds;
        used = a;
      }
    }
    if (all_ok && found) {
      out.design_side = true;
      out.subgroup = h.label();
      out.representative = used;
      out.design = found;
      if (out.graph_side) {
        const auto p = distance_partition(graph.graph(), 0);
        std::vector<int> expected;
        for (Element g : h.members()) {
          if (g != group.identity()) expected.push_back(g.index);
        }
        out.closing_claim = layer_indices(p, 2) == expected;
      }
      break;
    }
  }
  return out;
}

EquivalenceReport check_antipodal_d4_equivalence(const CayleyGraph& graph, bool all_representatives) {
  const Group& group = graph.group();
  if (!is_connected(graph)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  EquivalenceReport out;

  const auto report = check_distance_regular(graph);
  if (report.is_drg && report.bipartite && report.antipodal && report.diameter == 4) {
    const auto& a = *report.array;
    const int r = *report.antipodal_index;
    const int mu = a.mu();
    const IntersectionArray expected{{r * mu, r * mu - 1, (r - 1) * mu, 1}, {1, mu, r * mu - 1, r * mu}};
    out.array = a;
    out.graph_side = a == expected && group.order() == 2 * r * r * mu;
  }

  for (const Subgroup& h : index2_subgroups(group)) {
    bool all_ok = true;
    std::optional<DesignReport> found;
    std::optional<Subgroup> forbidden;
    Element used{};
    for (Element a : representatives(h, all_representatives)) {
      const auto d = left_translate(group, a, graph.connection());
      const bool inside = std::all_of(d.begin(), d.end(), [&](Element g) { return h.contains(g); });
      if (!inside) {
        all_ok = false;
        break;
      }
      const auto shape = rds_shape(h, difference_counts(group, d));
      if (!shape || shape->forbidden.size() < 2 ||
          static_cast<int>(shape->forbidden.size()) >= h.order()) {
        all_ok = false;
        break;
      }
      const Subgroup n(group, shape->forbidden, subgroup_label(group, shape->forbidden));
      const auto rds = verify_relative_difference_set(h, n, d);
      const int r = n.order();
      if (!rds || !rds->symmetric || rds->k != r * rds->mu || rds->m != r * rds->mu ||
          !check_symmetry_condition(group, d, a)) {
        all_ok = false;
        break;
      }
      if (!found) {
        found = rds;
        forbidden = n;
        used = a;
      }
    }
    if (all_ok && found) {
      out.design_side = true;
      out.subgroup = h.label();
      out.representative = used;
      out.design = found;
      if (out.graph_side) {
        const auto p = distance_partition(graph.graph(), 0);
        std::vector<int> h_minus_one;
        std::vector<int> n_minus_one;
        for (Element g : h.members()) {
          if (g != group.identity()) h_minus_one.push_back(g.index);
        }
        for (Element g : forbidden->members()) {
          if (g != group.identity()) n_minus_one.push_back(g.index);
        }
        auto even = layer_indices(p, 2);
        const auto far = layer_indices(p, 4);
        even.insert(even.end(), far.begin(), far.end());
        std::sort(even.begin(), even.end());
        out.closing_claim = even == h_minus_one && far == n_minus_one;
      }
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct DsSearch {
  const Group& group;
  std::vector<Element> pool;  // members of H except the identity, increasing
  int k;
  int lambda;
  std::vector<int> counts;
  std::vector<Element> chosen;
  std::set<std::vector<int>>* found;

  bool add(Element z) {
    bool ok = true;
    const Element zi = group.inv(z);
    for (Element x : chosen) {
      const int g1 = group.mul(z, group.inv(x)).index;
      const int g2 = group.mul(x, zi).index;
      ok &= ++counts[g1] <= lambda;
      ok &= ++counts[g2] <= lambda;
    }
    chosen.push_back(z);
    return ok;
  }

  void remove() {
    const Element z = chosen.back();
    chosen.pop_back();
    const Element zi = group.inv(z);
    for (Element x : chosen) {
      --counts[group.mul(z, group.inv(x)).index];
      --counts[group.mul(x, zi).index];
    }
  }

  void recurse(std::size_t next) {
    if (static_cast<int>(chosen.size()) == k) {
      for (Element g : pool) {
        if (counts[g.index] != lambda) return;
      }
      found->insert(canonical());
      return;
    }
    const std::size_t need = k - chosen.size();
    for (std::size_t i = next; i + need <= pool.size(); ++i) {
      if (add(pool[i])) recurse(i + 1);
      remove();
    }
  }

  std::vector<int> canonical() const {
    std::vector<int> best;
    std::vector<Element> ambient = pool;
    ambient.push_back(group.identity());
    for (Element g : ambient) {
      std::vector<int> t;
      for (Element x : chosen) t.push_back(group.mul(x, g).index);
      std::sort(t.begin(), t.end());
      if (best.empty() || t < best) best = t;
    }
    return best;
  }
};

}  // namespace

std::vector<std::vector<Element>> search_difference_sets(const Subgroup& ambient, int k, int threads) {
  const int order = ambient.order();
  if (order > 64) throw Error(ErrorCode::TooLarge, "difference-set search is limited to |H| <= 64");
  if (k < 0 || k > order) throw Error(ErrorCode::InvalidParameter, "k must lie in [0, |H|]");
  const Group& group = ambient.group();
  std::vector<std::vector<Element>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  int lambda = 0;
  if (order > 1) {
    if ((static_cast<long long>(k) * (k - 1)) % (order - 1) != 0) return out;
    lambda = k * (k - 1) / (order - 1);
  }

  std::vector<Element> pool;
  for (Element g : ambient.members()) {
    if (g != group.identity()) pool.push_back(g);
  }

  // Every difference set has a right translate containing the identity, so
  // the search fixes 1 in D and splits on the second element.
  std::set<std::vector<int>> found;
  if (k == 1) {
    found.insert({group.identity().index});
  } else {
#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#else
    const int workers = 1;
    (void)threads;
#endif
    const int branches = static_cast<int>(pool.size());
    std::vector<std::set<std::vector<int>>> partial(branches);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1) if (workers > 1)
    for (int first = 0; first < branches; ++first) {
      if (first + (k - 1) > branches) continue;
      DsSearch s{group, pool, k, lambda, std::vector<int>(group.order(), 0), {}, &partial[first]};
      s.add(group.identity());
      if (s.add(pool[first])) s.recurse(first + 1);
    }
    for (const auto& p : partial) found.insert(p.begin(), p.end());
  }
  for (const auto& indices : found) {
    std::vector<Element> d;
    for (int i : indices) d.push_back({i});
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace drgforge
