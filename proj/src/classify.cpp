#include "drgforge/classify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string_view>
#include <unordered_map>

#include "drgforge/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drgforge {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

bool is_hadamard_family(FamilyKind family) {
  return family == FamilyKind::SemiDihedral || family == FamilyKind::PseudoSemiDihedral;
}

void require_search_n(FamilyKind family, int n) {
  if (!is_hadamard_family(family)) {
    throw Error(ErrorCode::UnsupportedN, "Hadamard pairs are defined for sd and psd only");
  }
  if (!is_power_of_two(n) || n < 8 || n > 64) {
    throw Error(ErrorCode::UnsupportedN, "n must be a power of two with 8 <= n <= 64, got " + std::to_string(n));
  }
}

std::vector<int> odd_quadrature_bases(int n) {
  std::vector<int> xs;
  for (int x = 1; x < n / 2; x += 2) xs.push_back(x);
  return xs;
}

bool lex_less(const std::pair<ResidueSet, ResidueSet>& a, const std::pair<ResidueSet, ResidueSet>& b) {
  if (a.first < b.first) return true;
  if (b.first < a.first) return false;
  return a.second < b.second;
}

}  // namespace

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Complete: return "Complete";
    case CaseKind::CompleteMultipartite: return "CompleteMultipartite";
    case CaseKind::CompleteBipartiteMinusMatching: return "CompleteBipartiteMinusMatching";
    case CaseKind::DiffSetOverRho: return "DiffSetOverRho";
    case CaseKind::DiffSetOverH2: return "DiffSetOverH2";
    case CaseKind::DiffSetOverH3: return "DiffSetOverH3";
    case CaseKind::HadamardPair: return "HadamardPair";
    case CaseKind::NotDistanceRegular: return "NotDistanceRegular";
  }
  return "NotDistanceRegular";
}

std::string roman(CaseKind kind) {
  static constexpr std::string_view numerals[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", ""};
  return std::string(numerals[static_cast<int>(kind)]);
}

// ---------------------------------------------------------------------------

HadamardCertificate verify_hadamard_certificate(FamilyKind family, int n, const ResidueSet& r,
                                                const ResidueSet& t) {
  if (!is_hadamard_family(family)) {
    throw Error(ErrorCode::UnsupportedN, "Hadamard pairs are defined for sd and psd only");
  }
  if (!is_power_of_two(n) || n < 4) throw Error(ErrorCode::InvalidParameter, "n must be a power of two >= 4");
  const int m = 2 * n;
  if (r.modulus() != m || t.modulus() != m) {
    throw Error(ErrorCode::ModulusMismatch, "R and T must be residue sets modulo " + std::to_string(m));
  }
  auto violation = [](const std::string& what) { throw Error(ErrorCode::StructuralViolation, what); };

  const bool sd = family == FamilyKind::SemiDihedral;
  if (!(r == r.negated())) violation("R != -R");
  for (int x : r.members()) {
    if (x % 2 == 0) violation("R contains the even residue " + std::to_string(x));
  }
  for (int x : t.members()) {
    if (sd && x % 2 != 0) violation("T contains the odd residue " + std::to_string(x));
    if (!sd && x % 2 == 0) violation("T contains the even residue " + std::to_string(x));
  }
  if (!sd && !(t == t.negated().translated(n))) violation("T != n - T");
  if (r.size() != n / 2) violation("|R| = " + std::to_string(r.size()) + ", expected " + std::to_string(n / 2));
  if (t.size() != n / 2) violation("|T| = " + std::to_string(t.size()) + ", expected " + std::to_string(n / 2));
  if (r.intersection_size(r.translated(n)) != 0) violation("R meets n + R");
  if (t.intersection_size(t.translated(n)) != 0) violation("T meets n + T");

  HadamardCertificate cert{family, n, r, t, {}, true, std::nullopt};
  for (int i = 2; i < m; i += 2) {
    if (i == n) continue;
    const int value = r.intersection_size(r.translated(i)) + t.intersection_size(t.translated(i));
    cert.mu_check[i] = value;
    cert.accepted &= value == n / 2;
  }
  if (cert.accepted) {
    const auto graph = build_from_spec({GroupFamily{family, n}, r, t});
    const auto report = check_distance_regular(graph);
    const IntersectionArray expected{{n, n - 1, n / 2, 1}, {1, n / 2, n - 1, n}};
    if (!report.is_drg || !(report.array == expected)) {
      throw Error(ErrorCode::Internal, "certificate accepted but the graph does not have array " +
                                           expected.to_string());
    }
    cert.array = report.array;
  }
  return cert;
}

// ---------------------------------------------------------------------------

TheoremCase classify(const ConnectionSpec& spec) {
  const int n = spec.family.n;
  if (!is_hadamard_family(spec.family.kind)) {
    throw Error(ErrorCode::UnsupportedN, "classification covers the sd and psd families only");
  }
  if (n <= 4) throw Error(ErrorCode::UnsupportedN, "classification needs n = 2^r > 4");
  const CayleyGraph graph = build_from_spec(spec);
  const Group& group = graph.group();

  TheoremCase out;
  if (!is_connected(graph)) {
    out.structure.order = graph.order();
    out.structure.valency = graph.valency();
    return out;
  }
  out.structure = check_distance_regular(graph);
  const StructureReport& s = out.structure;
  if (!s.is_drg) return out;

  const NamedGraph named = recognize_named(graph.graph());
  auto no_case = [&](const std::string& why) -> TheoremCase {
    throw Error(ErrorCode::Internal, "distance-regular graph " + s.array->to_string() + " fits no case: " + why);
  };

  switch (named.kind) {
    case NamedKind::Complete:
      out.kind = CaseKind::Complete;
      out.named = named;
      return out;
    case NamedKind::CompleteBipartiteMinusMatching:
      out.kind = CaseKind::CompleteBipartiteMinusMatching;
      out.named = named;
      return out;
    case NamedKind::CompleteMultipartite: {
      // The part through the identity is the complement of S: a subgroup.
      std::vector<Element> part{group.identity()};
      std::vector<char> in_s(group.order(), 0);
      for (Element g : graph.connection()) in_s[g.index] = 1;
      for (Element g : group.elements()) {
        if (g != group.identity() && !in_s[g.index]) part.push_back(g);
      }
      const Subgroup h = generated_subgroup(group, part, "");
      if (h.order() != static_cast<int>(part.size())) return no_case("multipartite part is not a subgroup");
      out.kind = CaseKind::CompleteMultipartite;
      out.named = named;
      std::string label = "order " + std::to_string(h.order());
      for (const Subgroup& sub : index2_subgroups(group)) {
        if (sub == h) label = sub.label();
      }
      out.subgroup = label;
      return out;
    }
    default:
      break;
  }

  if (s.bipartite && s.diameter == 3) {
    const auto p = distance_partition(graph.graph(), group.identity().index);
    std::vector<Element> even;
    for (int v = 0; v < graph.order(); ++v) {
      if (p.distance[v] % 2 == 0) even.push_back({v});
    }
    for (const Subgroup& h : index2_subgroups(group)) {
      if (!std::equal(h.members().begin(), h.members().end(), even.begin(), even.end())) continue;
      const Element a = h.min_outside();
      const auto d = left_translate(group, a, graph.connection());
      const auto ds = verify_difference_set(h, d);
      if (!ds || ds->trivial || !check_symmetry_condition(group, d, a)) {
        return no_case("a^-1 S is not a non-trivial difference set in " + h.label());
      }
      if (h.label() == "<rho>") out.kind = CaseKind::DiffSetOverRho;
      else if (h.label() == "<rho^2,tau>") out.kind = CaseKind::DiffSetOverH2;
      else out.kind = CaseKind::DiffSetOverH3;
      out.subgroup = h.label();
      out.design = ds;
      return out;
    }
    return no_case("bipartition class is not an index-2 subgroup");
  }

  if (s.bipartite && s.antipodal && s.diameter == 4 && s.antipodal_index == 2) {
    try {
      auto cert = verify_hadamard_certificate(spec.family.kind, n, spec.r, spec.t);
      if (!cert.accepted) return no_case("Hadamard certificate rejected");
      out.kind = CaseKind::HadamardPair;
      out.certificate = std::move(cert);
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StructuralViolation) throw;
      return no_case(e.what());
    }
  }
  return no_case("imprimitive structure not covered");
}

std::pair<ResidueSet, ResidueSet> canonicalize(const ConnectionSpec& spec) {
  validate(spec);
  const int n = spec.family.n;
  const int m = 2 * n;
  if (spec.family.kind == FamilyKind::PseudoSemiDihedral) {
    std::pair<ResidueSet, ResidueSet> best{spec.r, spec.t};
    std::pair<ResidueSet, ResidueSet> other{spec.r, spec.t.translated(n)};
    return lex_less(other, best) ? other : best;
  }
  if (spec.family.kind != FamilyKind::SemiDihedral) {
    throw Error(ErrorCode::UnsupportedN, "canonical forms are defined for sd and psd only");
  }
  // Minimise aR first, then b + aT over the units reaching that minimum.
  std::optional<ResidueSet> best_r;
  std::vector<int> best_units;
  for (int a = 1; a < m; a += 2) {
    ResidueSet image = affine_image(spec.r, a, 0);
    if (!best_r || image < *best_r) {
      best_r = image;
      best_units = {a};
    } else if (image == *best_r) {
      best_units.push_back(a);
    }
  }
  std::optional<ResidueSet> best_t;
  for (int a : best_units) {
    const ResidueSet scaled = affine_image(spec.t, a, 0);
    for (int b = 0; b < m; b += 2) {
      ResidueSet image = scaled.translated(b);
      if (!best_t || image < *best_t) best_t = image;
    }
  }
  return {*best_r, *best_t};
}

// ---------------------------------------------------------------------------

std::vector<ResidueSet> hadamard_r_candidates(int n) {
  const auto xs = odd_quadrature_bases(n);
  const int m = 2 * n;
  std::vector<ResidueSet> out;
  const std::uint64_t count = std::uint64_t{1} << xs.size();
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    ResidueSet r(m);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const int x = xs[j];
      if ((bits >> j) & 1U) {
        r.insert(x + n);
        r.insert(n - x);
      } else {
        r.insert(x);
        r.insert(m - x);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::uint64_t hadamard_t_candidate_count(FamilyKind family, int n) {
  const int free_bits = family == FamilyKind::SemiDihedral ? n / 2 : n / 4;
  return std::uint64_t{1} << free_bits;
}

ResidueSet hadamard_t_candidate(FamilyKind family, int n, std::uint64_t index) {
  const int m = 2 * n;
  ResidueSet t(m);
  if (family == FamilyKind::SemiDihedral) {
    for (int j = 0; j < n / 2; ++j) {
      const int base = 2 * j;
      t.insert(((index >> j) & 1U) ? base + n : base);
    }
    return t;
  }
  const auto xs = odd_quadrature_bases(n);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const int x = xs[j];
    if ((index >> j) & 1U) {
      t.insert(x + n);
      t.insert(m - x);
    } else {
      t.insert(x);
      t.insert(n - x);
    }
  }
  return t;
}

namespace {

using Mask = unsigned __int128;

Mask to_mask(const ResidueSet& s) {
  Mask out = 0;
  for (int x : s.members()) out |= Mask{1} << x;
  return out;
}

Mask rotate(Mask x, int shift, int m) {
  if (shift == 0) return x;
  const Mask full = m == 128 ? ~Mask{0} : ((Mask{1} << m) - 1);
  return ((x << shift) | (x >> (m - shift))) & full;
}

int popcount(Mask x) {
  return std::popcount(static_cast<std::uint64_t>(x)) + std::popcount(static_cast<std::uint64_t>(x >> 64));
}

/// |A ∩ (i + A)| for even 0 < i < n; the upper half follows from c[i] = c[-i].
std::string profile(Mask a, int n) {
  std::string p;
  p.reserve(n / 2);
  for (int i = 2; i < n; i += 2) p.push_back(static_cast<char>(popcount(a & rotate(a, i, 2 * n))));
  return p;
}

SearchResult finish(FamilyKind family, int n, std::vector<std::pair<ResidueSet, ResidueSet>> raw,
                    std::uint64_t examined, std::chrono::steady_clock::time_point start) {
  SearchResult result;
  result.family = family;
  result.n = n;
  result.candidates_examined = examined;
  for (auto& [r, t] : raw) result.pairs.push_back(canonicalize({GroupFamily{family, n}, r, t}));
  std::sort(result.pairs.begin(), result.pairs.end(), lex_less);
  result.pairs.erase(std::unique(result.pairs.begin(), result.pairs.end()), result.pairs.end());
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

SearchResult search_hadamard_pairs(FamilyKind family, int n, int threads) {
  require_search_n(family, n);
  const auto start = std::chrono::steady_clock::now();
  const auto rs = hadamard_r_candidates(n);
  const std::uint64_t t_count = hadamard_t_candidate_count(family, n);

  std::unordered_map<std::string, std::vector<int>> table;
  for (std::size_t i = 0; i < rs.size(); ++i) table[profile(to_mask(rs[i]), n)].push_back(static_cast<int>(i));

  const int workers = resolve_threads(threads);
  const auto chunks = static_cast<std::int64_t>(std::min<std::uint64_t>(t_count, 4096));
  std::vector<std::vector<std::pair<int, std::uint64_t>>> hits(chunks);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1) if (workers > 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = t_count * c / chunks;
    const std::uint64_t hi = t_count * (c + 1) / chunks;
    std::string key(n / 2 - 1, '\0');
    for (std::uint64_t ti = lo; ti < hi; ++ti) {
      const Mask t = to_mask(hadamard_t_candidate(family, n, ti));
      bool feasible = true;
      for (int j = 0, i = 2; i < n; i += 2, ++j) {
        const int need = n / 2 - popcount(t & rotate(t, i, 2 * n));
        if (need < 0) {
          feasible = false;
          break;
        }
        key[j] = static_cast<char>(need);
      }
      if (!feasible) continue;
      const auto it = table.find(key);
      if (it == table.end()) continue;
      for (int ri : it->second) hits[c].emplace_back(ri, ti);
    }
  }

  std::vector<std::pair<ResidueSet, ResidueSet>> raw;
  for (const auto& chunk : hits) {
    for (auto [ri, ti] : chunk) raw.emplace_back(rs[ri], hadamard_t_candidate(family, n, ti));
  }
  return finish(family, n, std::move(raw), rs.size() * t_count, start);
}

SearchResult search_hadamard_pairs_reference(FamilyKind family, int n) {
  require_search_n(family, n);
  const auto start = std::chrono::steady_clock::now();
  const auto rs = hadamard_r_candidates(n);
  const std::uint64_t t_count = hadamard_t_candidate_count(family, n);
  std::vector<std::pair<ResidueSet, ResidueSet>> raw;
  for (const ResidueSet& r : rs) {
    for (std::uint64_t ti = 0; ti < t_count; ++ti) {
      const ResidueSet t = hadamard_t_candidate(family, n, ti);
      bool ok = true;
      for (int i = 2; i < 2 * n && ok; i += 2) {
        if (i == n) continue;
        ok = r.intersection_size(r.translated(i)) + t.intersection_size(t.translated(i)) == n / 2;
      }
      if (ok) raw.emplace_back(r, t);
    }
  }
  return finish(family, n, std::move(raw), rs.size() * t_count, start);
}

// ---------------------------------------------------------------------------

ConnectionSpec random_connection_spec(FamilyKind family, int n, std::mt19937_64& rng, double density) {
  const GroupFamily gf{family, n};
  const int m = rho_modulus(gf);
  const Group group(gf);
  std::bernoulli_distribution pick(density);
  while (true) {
    ConnectionSpec spec{gf, ResidueSet(m), ResidueSet(m)};
    for (int x = 1; x <= m / 2; ++x) {
      if (pick(rng)) {
        spec.r.insert(x);
        spec.r.insert((m - x) % m);
      }
    }
    if (group.has_tau()) {
      // T must be closed under the exponent map of inversion on the tau coset.
      std::vector<char> done(m, 0);
      for (int x = 0; x < m; ++x) {
        if (done[x]) continue;
        const int y = group.exponent(group.inv(group.rho_tau(x)));
        done[x] = done[y] = 1;
        if (pick(rng)) {
          spec.t.insert(x);
          spec.t.insert(y);
        }
      }
    }
    if (!spec.r.empty() || !spec.t.empty()) return spec;
  }
}

namespace {

struct SweepItem {
  bool drg = false;
  bool agree = true;
  CaseKind kind = CaseKind::NotDistanceRegular;
};

SweepItem sweep_one(const ConnectionSpec& spec) {
  SweepItem item;
  try {
    const TheoremCase c = classify(spec);
    item.kind = c.kind;
    item.drg = c.kind != CaseKind::NotDistanceRegular;
    const CayleyGraph graph = build_from_spec(spec);
    const bool oracle = is_connected(graph) && distance_module_oracle(graph);
    item.agree = item.drg == oracle;
  } catch (const Error&) {
    // Runs inside a parallel region; an unmatched DRG counts as a disagreement.
    item.agree = false;
  }
  return item;
}

SweepResult combine(const std::vector<ConnectionSpec>& specs, const std::vector<SweepItem>& items) {
  SweepResult out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    ++out.examined;
    out.distance_regular += items[i].drg;
    ++out.cases[items[i].kind];
    if (!items[i].agree) out.disagreements.push_back(specs[i]);
  }
  return out;
}

}  // namespace

SweepResult classification_sweep(const std::vector<ConnectionSpec>& specs, int threads) {
  std::vector<SweepItem> items(specs.size());
  const int workers = resolve_threads(threads);
  const auto count = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 8) if (workers > 1)
  for (std::int64_t i = 0; i < count; ++i) items[i] = sweep_one(specs[i]);
  return combine(specs, items);
}

SweepResult classification_sweep_reference(const std::vector<ConnectionSpec>& specs) {
  std::vector<SweepItem> items;
  items.reserve(specs.size());
  for (const auto& spec : specs) items.push_back(sweep_one(spec));
  return combine(specs, items);
}

}  // namespace drgforge
