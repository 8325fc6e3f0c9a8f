#include "drgforge/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "drgforge/classify.hpp"
#include "drgforge/design.hpp"
#include "drgforge/drg.hpp"
#include "drgforge/error.hpp"
#include "drgforge/residue.hpp"

namespace drgforge {

ConnectionSpec KnownPair::spec() const {
  const GroupFamily f{family, n};
  const int m = rho_modulus(f);
  return {f, ResidueSet::from_members(m, r), ResidueSet::from_members(m, t)};
}

std::vector<KnownPair> known_hadamard_pairs() {
  return {
      {FamilyKind::SemiDihedral, 8, {5, 7, 9, 11}, {4, 8, 10, 14}},
      {FamilyKind::PseudoSemiDihedral, 8, {5, 7, 9, 11}, {3, 5, 9, 15}},
      {FamilyKind::SemiDihedral,
       32,
       {9, 11, 15, 19, 25, 27, 29, 31, 33, 35, 37, 39, 45, 49, 53, 55},
       {0, 8, 12, 14, 22, 24, 30, 34, 36, 38, 42, 48, 50, 52, 58, 60}},
  };
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED: " << what << "; ";
    }
  }
  void note(const std::string& what) { detail << what << "; "; }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const KnownPair& known(FamilyKind family, int n) {
  static const auto pairs = known_hadamard_pairs();
  for (const auto& p : pairs) {
    if (p.family == family && p.n == n) return p;
  }
  throw Error(ErrorCode::Internal, "no fixture pair");
}

void hadamard_drg(Outcome& o, FamilyKind family, int n) {
  const auto t0 = Clock::now();
  const auto graph = build_from_spec(known(family, n).spec());
  const auto s = check_distance_regular(graph);
  const IntersectionArray expected{{n, n - 1, n / 2, 1}, {1, n / 2, n - 1, n}};
  const double secs = seconds_since(t0);
  o.require(s.is_drg, "distance-regular");
  o.require(s.bipartite, "bipartite");
  o.require(s.antipodal && s.antipodal_index == 2, "2-fold antipodal");
  o.require(s.diameter == 4, "diameter 4");
  o.require(s.array == expected, "array " + expected.to_string());
  o.require(secs < 1.0, "runtime < 1 s");
  o.note((s.array ? s.array->to_string() : std::string("no array")) + " in " + std::to_string(secs) + " s");
}

void criterion1(Outcome& o, const AcceptanceOptions&) { hadamard_drg(o, FamilyKind::SemiDihedral, 8); }
void criterion2(Outcome& o, const AcceptanceOptions&) { hadamard_drg(o, FamilyKind::PseudoSemiDihedral, 8); }

void criterion3(Outcome& o, const AcceptanceOptions&) {
  const auto t0 = Clock::now();
  const auto& p = known(FamilyKind::SemiDihedral, 32);
  const auto spec = p.spec();
  const auto cert = verify_hadamard_certificate(p.family, p.n, spec.r, spec.t);
  const double secs = seconds_since(t0);
  const IntersectionArray expected{{32, 31, 16, 1}, {1, 16, 31, 32}};
  o.require(cert.accepted, "certificate accepted");
  o.require(cert.array == expected, "array " + expected.to_string());
  o.require(secs < 1.0, "runtime < 1 s");
  o.note("array " + (cert.array ? cert.array->to_string() : std::string("none")) + " in " + std::to_string(secs) +
         " s");
}

bool contains_pair(const SearchResult& r, const KnownPair& p) {
  const auto canon = canonicalize(p.spec());
  for (const auto& q : r.pairs) {
    if (q == canon) return true;
  }
  return false;
}

void criterion4(Outcome& o, const AcceptanceOptions& options) {
  struct Run {
    FamilyKind family;
    int n;
    bool nonempty;
    double limit;
  };
  std::vector<Run> runs = {
      {FamilyKind::SemiDihedral, 8, true, 60.0},        {FamilyKind::SemiDihedral, 16, false, 1.0},
      {FamilyKind::SemiDihedral, 32, true, 60.0},       {FamilyKind::PseudoSemiDihedral, 8, true, 60.0},
      {FamilyKind::PseudoSemiDihedral, 16, false, 60.0}, {FamilyKind::PseudoSemiDihedral, 32, false, 60.0},
  };
  if (options.extended) runs.push_back({FamilyKind::PseudoSemiDihedral, 64, false, 600.0});
  for (const Run& run : runs) {
    const auto t0 = Clock::now();
    const auto result = search_hadamard_pairs(run.family, run.n, options.threads);
    const double secs = seconds_since(t0);
    const std::string tag = GroupFamily{run.family, run.n}.name() + " " + std::to_string(run.n);
    if (run.nonempty) {
      o.require(!result.pairs.empty(), tag + " non-empty");
      o.require(contains_pair(result, known(run.family, run.n)), tag + " contains the fixture pair");
    } else {
      o.require(result.pairs.empty(), tag + " empty");
    }
    o.require(secs < run.limit, tag + " runtime");
    o.note(tag + ": " + std::to_string(result.pairs.size()) + " pairs in " + std::to_string(secs) + " s");
  }
}

std::vector<Element> complement_of(const Group& group, const std::vector<Element>& keep) {
  std::vector<char> in(group.order(), 0);
  for (Element g : keep) in[g.index] = 1;
  std::vector<Element> out;
  for (Element g : group.elements()) {
    if (!in[g.index]) out.push_back(g);
  }
  return out;
}

void criterion5(Outcome& o, const AcceptanceOptions&) {
  const Group sd(GroupFamily{FamilyKind::SemiDihedral, 8});
  {
    const auto t0 = Clock::now();
    const auto g = build_cayley(sd, complement_of(sd, {sd.identity()}));
    const auto s = check_distance_regular(g);
    const auto named = recognize_named(g.graph());
    o.require(s.is_drg && s.array == IntersectionArray{{31}, {1}}, "K_32 array {31;1}");
    o.require(named.kind == NamedKind::Complete && named.order == 32, "recognized as K_32");
    o.require(seconds_since(t0) < 1.0, "K_32 runtime");
    o.note(named.to_string());
  }
  {
    const auto t0 = Clock::now();
    std::vector<Element> s_set;
    for (int i = 1; i < 16; ++i) s_set.push_back(sd.rho_tau(i));
    const auto g = build_cayley(sd, s_set);
    const auto s = check_distance_regular(g);
    const auto named = recognize_named(g.graph());
    o.require(s.is_drg && s.diameter == 3, "K_{16,16}-16K_2 distance-regular of diameter 3");
    o.require(named.kind == NamedKind::CompleteBipartiteMinusMatching && named.part_size == 16,
              "recognized as K_{16,16}-16K_2");
    o.require(seconds_since(t0) < 1.0, "K_{16,16}-16K_2 runtime");
    o.note(named.to_string());
  }
  {
    const auto t0 = Clock::now();
    const auto h = generated_subgroup(sd, std::vector<Element>{sd.rho(2)}, "<rho^2>");
    const std::vector<Element> keep(h.members().begin(), h.members().end());
    const auto g = build_cayley(sd, complement_of(sd, keep));
    const auto s = check_distance_regular(g);
    const auto named = recognize_named(g.graph());
    o.require(s.is_drg && s.diameter == 2, "K_{4x8} distance-regular of diameter 2");
    o.require(named.kind == NamedKind::CompleteMultipartite && named.parts == 4 && named.part_size == 8,
              "recognized as K_{4x8}");
    o.require(seconds_since(t0) < 1.0, "K_{4x8} runtime");
    o.note(named.to_string());
  }
}

/// Valid spec whose graph is connected.
ConnectionSpec connected_spec(FamilyKind family, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.1, 0.6);
  while (true) {
    auto spec = random_connection_spec(family, n, rng, density(rng));
    if (is_connected(build_from_spec(spec))) return spec;
  }
}

void criterion6(Outcome& o, const AcceptanceOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<CayleyGraph> graphs;
  for (FamilyKind f : {FamilyKind::SemiDihedral, FamilyKind::PseudoSemiDihedral}) {
    for (int i = 0; i < 500; ++i) graphs.push_back(build_from_spec(connected_spec(f, 8, rng)));
  }
  for (const auto& p : known_hadamard_pairs()) graphs.push_back(build_from_spec(p.spec()));
  const Group sd(GroupFamily{FamilyKind::SemiDihedral, 8});
  graphs.push_back(build_cayley(sd, complement_of(sd, {sd.identity()})));
  std::vector<Element> s_set;
  for (int i = 1; i < 16; ++i) s_set.push_back(sd.rho_tau(i));
  graphs.push_back(build_cayley(sd, s_set));
  const auto h = generated_subgroup(sd, std::vector<Element>{sd.rho(2)}, "<rho^2>");
  graphs.push_back(build_cayley(sd, complement_of(sd, std::vector<Element>(h.members().begin(), h.members().end()))));

  int disagreements = 0;
  int drg = 0;
  for (const auto& g : graphs) {
    const bool direct = check_distance_regular(g).is_drg;
    const bool oracle = distance_module_oracle(g);
    drg += direct;
    disagreements += direct != oracle;
  }
  o.require(disagreements == 0, "zero disagreements");
  o.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(drg) + " distance-regular, " +
         std::to_string(disagreements) + " disagreements");
}

ResidueSet random_set(int m, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.95)(rng));
  ResidueSet a(m);
  for (int x = 0; x < m; ++x) {
    if (coin(rng)) a.insert(x);
  }
  return a;
}

IntVector random_vector(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-5, 5);
  IntVector f{m, std::vector<long long>(m)};
  for (auto& x : f.values) x = v(rng);
  return f;
}

bool close(std::complex<double> a, std::complex<double> b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

void criterion7(Outcome& o, const AcceptanceOptions& options) {
  std::mt19937_64 rng(options.seed + 7);
  std::uniform_int_distribution<int> modulus(2, 128);

  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = modulus(rng);
    const auto a = random_set(m, rng);
    const auto ac = autocorrelation(a);
    long long mass = 0;
    for (int i = 0; i < m; ++i) {
      mass += ac.values[i];
      failures += ac.values[i] != ac.values[(m - i) % m];
    }
    failures += mass != static_cast<long long>(a.size()) * a.size();
  }
  o.require(failures == 0, "autocorrelation symmetry and mass");
  o.note("autocorrelation: 1000 sets");

  double worst_inversion = 0.0;
  bool conv_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = modulus(rng);
    const auto f = random_vector(m, rng);
    const auto g = random_vector(m, rng);
    const auto ff = dft(dft(f));
    for (int z = 0; z < m; ++z) {
      const double expected = static_cast<double>(m) * f.values[(m - z) % m];
      worst_inversion = std::max(worst_inversion, std::abs(ff.values[z] - expected));
    }
    const auto lhs = dft(convolve(f, g));
    const auto df = dft(f);
    const auto dg = dft(g);
    for (int z = 0; z < m; ++z) conv_ok &= close(lhs.values[z], df.values[z] * dg.values[z], 1e-6);
  }
  o.require(worst_inversion <= 1e-9, "Fourier inversion within 1e-9");
  o.require(conv_ok, "convolution theorem within 1e-6");
  char buf[96];
  std::snprintf(buf, sizeof buf, "inversion max error %.2e", worst_inversion);
  o.note(buf);

  bool wk_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_set(64, rng);
    const auto da = dft(indicator(a));
    const auto dac = dft(autocorrelation(a));
    for (int z = 0; z < 64; ++z) wk_ok &= close(std::norm(da.values[z]), dac.values[z], 1e-6);
  }
  o.require(wk_ok, "Wiener-Khinchin within 1e-6");

  // Affine invariance of the classification.
  std::vector<ConnectionSpec> specs;
  for (const auto& p : known_hadamard_pairs()) {
    if (p.n == 8) specs.push_back(p.spec());
  }
  for (FamilyKind f : {FamilyKind::SemiDihedral, FamilyKind::PseudoSemiDihedral}) {
    for (int i = 0; i < 4; ++i) specs.push_back(random_connection_spec(f, 8, rng, 0.3));
  }
  int invariance_failures = 0;
  std::uniform_int_distribution<int> residue(0, 15);
  for (const auto& spec : specs) {
    const auto base = classify(spec);
    for (int trial = 0; trial < 50; ++trial) {
      ConnectionSpec image = spec;
      if (spec.family.kind == FamilyKind::SemiDihedral) {
        const int a = 2 * residue(rng) % 16 + 1;
        const int b = 2 * residue(rng) % 16;
        image.r = affine_image(spec.r, a, 0);
        image.t = affine_image(spec.t, a, b);
      } else {
        image.t = spec.t.translated(trial % 2 == 0 ? 8 : 0);
      }
      const auto c = classify(image);
      invariance_failures += c.kind != base.kind || c.structure.array != base.structure.array;
    }
  }
  o.require(invariance_failures == 0, "classification invariant under the affine isomorphisms");
  o.note("affine invariance: " + std::to_string(specs.size()) + " specs x 50 maps");
}

void criterion8(Outcome& o, const AcceptanceOptions& options) {
  for (FamilyKind f : {FamilyKind::SemiDihedral, FamilyKind::PseudoSemiDihedral}) {
    for (int n : {8, 16}) {
      const auto fast = search_hadamard_pairs(f, n, options.threads);
      const auto slow = search_hadamard_pairs_reference(f, n);
      const std::string tag = GroupFamily{f, n}.name() + " " + std::to_string(n);
      o.require(fast.pairs == slow.pairs, tag + " identical pair sets");
      o.note(tag + ": " + std::to_string(fast.pairs.size()) + " = " + std::to_string(slow.pairs.size()));
    }
  }
}

void criterion9(Outcome& o, const AcceptanceOptions& options) {
  int checked = 0;
  for (FamilyKind f : {FamilyKind::SemiDihedral, FamilyKind::PseudoSemiDihedral}) {
    for (int n : {8, 32}) {
      const auto result = search_hadamard_pairs(f, n, options.threads);
      for (const auto& [r, t] : result.pairs) {
        const ConnectionSpec spec{GroupFamily{f, n}, r, t};
        const auto graph = build_from_spec(spec);
        const Group& group = graph.group();
        const auto d = left_translate(group, group.rho(1), graph.connection());
        const std::string label = f == FamilyKind::SemiDihedral ? "<rho^2,rho tau>" : "<rho^2,tau>";
        std::optional<Subgroup> h;
        for (const auto& sub : index2_subgroups(group)) {
          if (sub.label() == label) h = sub;
        }
        const auto big_n = generated_subgroup(group, std::vector<Element>{group.rho(n)}, "<rho^n>");
        const auto rds = verify_relative_difference_set(*h, big_n, d);
        const std::string tag = spec.family.name() + " " + std::to_string(n) + " (" + r.to_string() + " | " +
                                t.to_string() + ")";
        o.require(rds && rds->m == n && rds->r == 2 && rds->k == n && rds->mu == n / 2 && rds->symmetric,
                  tag + " symmetric (n,2,n,n/2) relative difference set");
        o.require(rds && relative_difference_set_identity(*h, big_n, d, rds->mu), tag + " group-ring identity");
        const auto eq = check_antipodal_d4_equivalence(graph);
        o.require(eq.graph_side && eq.design_side && eq.closing_claim == true, tag + " equivalence");
        ++checked;
      }
    }
  }
  o.note(std::to_string(checked) + " pairs checked");

  const auto t0 = Clock::now();
  const Group z16(GroupFamily{FamilyKind::Cyclic, 16});
  const auto sets = search_difference_sets(whole_group(z16), 6, options.threads);
  const double secs = seconds_since(t0);
  o.require(sets.empty(), "no (16,6,2) difference set in Z_16");
  o.require(secs < 1.0, "difference-set search < 1 s");
  o.note("(16,6,2) search in " + std::to_string(secs) + " s");
}

struct Entry {
  const char* title;
  std::function<void(Outcome&, const AcceptanceOptions&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {"sd(8) Hadamard graph structure", criterion1},
      {"psd(8) Hadamard graph structure", criterion2},
      {"sd(32) Hadamard certificate", criterion3},
      {"Hadamard pair search outcomes", criterion4},
      {"trivial families", criterion5},
      {"distance-module oracle agreement", criterion6},
      {"property suites", criterion7},
      {"reference vs hashed search", criterion8},
      {"relative difference sets and (16,6,2)", criterion9},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > static_cast<int>(entries().size())) {
    throw Error(ErrorCode::InvalidParameter, "criterion " + std::to_string(id) + " does not exist");
  }
  const Entry& e = entries()[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = e.title;
  Outcome o;
  const auto t0 = Clock::now();
  try {
    e.run(o, options);
  } catch (const std::exception& ex) {
    o.require(false, std::string("exception: ") + ex.what());
  }
  result.seconds = seconds_since(t0);
  result.pass = o.pass;
  result.detail = o.detail.str();
  if (result.detail.size() >= 2) result.detail.resize(result.detail.size() - 2);
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(entries().size()); ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s [%d] %s (%.3f s)", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds);
  return std::string(head) + (r.detail.empty() ? "" : " " + r.detail);
}

}  // namespace drgforge
