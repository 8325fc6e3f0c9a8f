#include <gtest/gtest.h>

#include <random>

#include "drgforge/acceptance.hpp"
#include "drgforge/classify.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace drgforge;
using testutil::code_of;

namespace {

constexpr FamilyKind kSD = FamilyKind::SemiDihedral;
constexpr FamilyKind kPSD = FamilyKind::PseudoSemiDihedral;

ResidueSet rs(int m, std::initializer_list<int> xs) { return ResidueSet::from_members(m, xs); }

ConnectionSpec spec_of(FamilyKind kind, int n, ResidueSet r, ResidueSet t) {
  return {GroupFamily{kind, n}, std::move(r), std::move(t)};
}

ResidueSet all_but_zero(int m) {
  ResidueSet s = ResidueSet::full(m);
  s.erase(0);
  return s;
}

int overlap(const ResidueSet& a, int i) {
  int c = 0;
  for (int x : a.members()) c += a.contains((x + i) % a.modulus());
  return c;
}

// Structural constraints read straight off their definitions, for every
// subset of the odd (or even) residues.
std::set<std::vector<int>> brute_r_candidates(int n) {
  const int m = 2 * n;
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    ResidueSet r(m);
    for (int j = 0; j < n; ++j) {
      if (mask >> j & 1U) r.insert(2 * j + 1);
    }
    if (r.size() != n / 2 || r.negated() != r || r.intersection_size(r.translated(n)) != 0) continue;
    out.insert(r.members());
  }
  return out;
}

std::set<std::vector<int>> brute_t_candidates(FamilyKind kind, int n) {
  const int m = 2 * n;
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    ResidueSet t(m);
    for (int j = 0; j < n; ++j) {
      if (mask >> j & 1U) t.insert(kind == kSD ? 2 * j : 2 * j + 1);
    }
    if (t.size() != n / 2 || t.intersection_size(t.translated(n)) != 0) continue;
    if (kind == kPSD && t.negated().translated(n) != t) continue;
    out.insert(t.members());
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> key(const std::pair<ResidueSet, ResidueSet>& p) {
  return {p.first.members(), p.second.members()};
}

std::set<std::pair<std::vector<int>, std::vector<int>>> pair_keys(const SearchResult& s) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& p : s.pairs) out.insert(key(p));
  return out;
}

// Image of (R, T) under x -> a x (R) and x -> b + a x (T).
ConnectionSpec affine(const ConnectionSpec& s, int a, int b) {
  return {s.family, affine_image(s.r, a, 0), affine_image(s.t, a, b)};
}

}  // namespace

TEST(Classify, HadamardPairExample) {
  const auto c = classify(spec_of(kSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {4, 8, 10, 14})));
  EXPECT_EQ(c.kind, CaseKind::HadamardPair);
  EXPECT_EQ(roman(c.kind), "vii");
  ASSERT_TRUE(c.certificate);
  EXPECT_TRUE(c.certificate->accepted);
  EXPECT_EQ(c.structure.array->to_string(), "{8,7,4,1;1,4,7,8}");
  const auto p = classify(spec_of(kPSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {3, 5, 9, 15})));
  EXPECT_EQ(p.kind, CaseKind::HadamardPair);
}

TEST(Classify, TrivialFamilies) {
  const auto complete = classify(spec_of(kSD, 8, all_but_zero(16), ResidueSet::full(16)));
  EXPECT_EQ(complete.kind, CaseKind::Complete);
  EXPECT_EQ(complete.structure.array->to_string(), "{31;1}");

  const auto crown = classify(spec_of(kSD, 8, ResidueSet(16), all_but_zero(16)));
  EXPECT_EQ(crown.kind, CaseKind::CompleteBipartiteMinusMatching);
  EXPECT_EQ(crown.structure.diameter, 3);
  EXPECT_EQ(roman(crown.kind), "iii");

  ResidueSet odd(16);
  for (int x = 1; x < 16; x += 2) odd.insert(x);
  const auto multi = classify(spec_of(kSD, 8, odd, ResidueSet::full(16)));
  EXPECT_EQ(multi.kind, CaseKind::CompleteMultipartite);
  ASSERT_TRUE(multi.named);
  EXPECT_EQ(multi.named->parts, 4);
  EXPECT_EQ(multi.named->part_size, 8);
  EXPECT_TRUE(multi.subgroup.has_value());

  const auto psd_crown = classify(spec_of(kPSD, 16, ResidueSet(32), all_but_zero(32)));
  EXPECT_EQ(psd_crown.kind, CaseKind::CompleteBipartiteMinusMatching);
}

TEST(Classify, NonDrgAndErrors) {
  EXPECT_EQ(classify(spec_of(kSD, 8, rs(16, {8}), ResidueSet(16))).kind, CaseKind::NotDistanceRegular);
  EXPECT_EQ(classify(spec_of(kSD, 8, rs(16, {1, 15}), rs(16, {0}))).kind, CaseKind::NotDistanceRegular);
  EXPECT_EQ(code_of([] { classify(spec_of(kSD, 8, rs(16, {1, 2}), ResidueSet(16))); }), ErrorCode::BadClosure);
  EXPECT_EQ(code_of([] { classify(spec_of(kSD, 4, rs(8, {1, 7}), ResidueSet(8))); }), ErrorCode::UnsupportedN);
  EXPECT_EQ(code_of([] { classify(spec_of(FamilyKind::Dihedral, 8, rs(8, {1, 7}), ResidueSet(8))); }),
            ErrorCode::UnsupportedN);
}

TEST(Canonicalize, Examples) {
  const auto known = spec_of(kSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {4, 8, 10, 14}));
  const auto canon = canonicalize(known);
  EXPECT_EQ(canon.first.members(), (std::vector<int>{1, 3, 13, 15}));
  EXPECT_EQ(canon.second.members(), (std::vector<int>{0, 2, 6, 12}));
  EXPECT_EQ(canonicalize(affine(known, 3, 2)), canon);
  EXPECT_EQ(canonicalize(spec_of(kPSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {3, 5, 9, 15}))),
            canonicalize(spec_of(kPSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {11, 13, 1, 7}))));
}

TEST(Canonicalize, IdempotentAndInvariant) {
  std::mt19937_64 rng(51);
  for (FamilyKind kind : {kSD, kPSD}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto s = random_connection_spec(kind, 16, rng, 0.4);
      const auto c = canonicalize(s);
      EXPECT_EQ(canonicalize({s.family, c.first, c.second}), c);
      if (kind == kSD) {
        const int a = 2 * static_cast<int>(rng() % 16) + 1;
        const int b = 2 * static_cast<int>(rng() % 16);
        EXPECT_EQ(canonicalize(affine(s, a, b)), c);
      } else {
        EXPECT_EQ(canonicalize({s.family, s.r, s.t.translated(16)}), c);
      }
    }
  }
}

// The isomorphisms used by canonicalize preserve the classification.
TEST(Classify, AffineInvariance) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_connection_spec(kSD, 8, rng, 0.35);
    const int a = 2 * static_cast<int>(rng() % 8) + 1;
    const int b = 2 * static_cast<int>(rng() % 8);
    const auto x = classify(s);
    const auto y = classify(affine(s, a, b));
    ASSERT_EQ(x.kind, y.kind);
    EXPECT_EQ(x.structure.array, y.structure.array);
  }
}

TEST(Certificate, Examples) {
  const auto sd = verify_hadamard_certificate(kSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {4, 8, 10, 14}));
  EXPECT_EQ(overlap(rs(16, {5, 7, 9, 11}), 2), 3);
  EXPECT_EQ(overlap(rs(16, {4, 8, 10, 14}), 2), 1);
  EXPECT_EQ(sd.mu_check.at(2), 4);
  EXPECT_TRUE(sd.accepted);
  EXPECT_EQ(sd.array->to_string(), "{8,7,4,1;1,4,7,8}");

  EXPECT_EQ(code_of([] { verify_hadamard_certificate(kSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {4, 8, 10, 12})); }),
            ErrorCode::StructuralViolation);
  EXPECT_EQ(code_of([] { verify_hadamard_certificate(kSD, 8, rs(16, {5, 7, 9, 13}), rs(16, {4, 8, 10, 14})); }),
            ErrorCode::StructuralViolation);

  const auto psd = verify_hadamard_certificate(kPSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {3, 5, 9, 15}));
  std::vector<int> keys;
  for (const auto& [i, v] : psd.mu_check) {
    keys.push_back(i);
    EXPECT_EQ(v, 4);
  }
  EXPECT_EQ(keys, (std::vector<int>{2, 4, 6, 10, 12, 14}));
  EXPECT_TRUE(psd.accepted);
}

TEST(Certificate, MuCheckMatchesOverlapCount) {
  for (FamilyKind kind : {kSD, kPSD}) {
    for (const auto& r : hadamard_r_candidates(16)) {
      for (std::uint64_t j = 0; j < hadamard_t_candidate_count(kind, 16); j += 37) {
        const auto t = hadamard_t_candidate(kind, 16, j);
        const auto cert = verify_hadamard_certificate(kind, 16, r, t);
        bool all = true;
        for (int i = 2; i < 32; i += 2) {
          if (i == 16) continue;
          const int v = overlap(r, i) + overlap(t, i);
          ASSERT_EQ(cert.mu_check.at(i), v);
          all &= v == 8;
        }
        EXPECT_EQ(cert.accepted, all);
      }
    }
  }
}

TEST(Candidates, MatchBruteEnumeration) {
  for (int n : {8, 16}) {
    std::set<std::vector<int>> rset;
    for (const auto& r : hadamard_r_candidates(n)) rset.insert(r.members());
    EXPECT_EQ(hadamard_r_candidates(n).size(), rset.size());
    EXPECT_EQ(rset, brute_r_candidates(n));
    for (FamilyKind kind : {kSD, kPSD}) {
      std::set<std::vector<int>> tset;
      const auto count = hadamard_t_candidate_count(kind, n);
      for (std::uint64_t j = 0; j < count; ++j) tset.insert(hadamard_t_candidate(kind, n, j).members());
      EXPECT_EQ(tset.size(), count);
      EXPECT_EQ(tset, brute_t_candidates(kind, n));
    }
  }
  EXPECT_EQ(hadamard_t_candidate_count(kSD, 8), 16U);
  EXPECT_EQ(hadamard_t_candidate_count(kPSD, 8), 4U);
}

TEST(Search, Examples) {
  const auto sd8 = search_hadamard_pairs(kSD, 8);
  const auto known = canonicalize(spec_of(kSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {4, 8, 10, 14})));
  EXPECT_EQ(pair_keys(sd8).count(key(known)), 1U);
  EXPECT_EQ(sd8.candidates_examined, 4U * 16U);
  EXPECT_TRUE(search_hadamard_pairs(kSD, 16).pairs.empty());
  const auto psd8 = search_hadamard_pairs(kPSD, 8);
  const auto psd_known = canonicalize(spec_of(kPSD, 8, rs(16, {5, 7, 9, 11}), rs(16, {3, 5, 9, 15})));
  EXPECT_EQ(pair_keys(psd8).count(key(psd_known)), 1U);
  EXPECT_TRUE(search_hadamard_pairs(kPSD, 16).pairs.empty());
  EXPECT_TRUE(search_hadamard_pairs(kPSD, 32).pairs.empty());
}

TEST(Search, ThirtyTwoContainsListedPair) {
  const auto sd32 = search_hadamard_pairs(kSD, 32);
  for (const auto& known : known_hadamard_pairs()) {
    if (known.family != kSD || known.n != 32) continue;
    EXPECT_EQ(pair_keys(sd32).count(key(canonicalize(known.spec()))), 1U);
  }
  for (const auto& [r, t] : sd32.pairs) EXPECT_TRUE(verify_hadamard_certificate(kSD, 32, r, t).accepted);
}

TEST(Search, HashJoinMatchesReference) {
  for (FamilyKind kind : {kSD, kPSD}) {
    for (int n : {8, 16}) {
      const auto fast = search_hadamard_pairs(kind, n);
      const auto slow = search_hadamard_pairs_reference(kind, n);
      EXPECT_EQ(pair_keys(fast), pair_keys(slow));
      EXPECT_EQ(fast.candidates_examined, slow.candidates_examined);
    }
  }
}

TEST(Search, DeterministicAcrossThreads) {
  for (FamilyKind kind : {kSD, kPSD}) {
    const auto one = search_hadamard_pairs(kind, 8, 1);
    const auto three = search_hadamard_pairs(kind, 8, 3);
    ASSERT_EQ(one.pairs.size(), three.pairs.size());
    for (std::size_t i = 0; i < one.pairs.size(); ++i) EXPECT_EQ(key(one.pairs[i]), key(three.pairs[i]));
  }
}

TEST(Search, UnsupportedN) {
  EXPECT_EQ(code_of([] { search_hadamard_pairs(kSD, 4); }), ErrorCode::UnsupportedN);
  EXPECT_EQ(code_of([] { search_hadamard_pairs(kPSD, 128); }), ErrorCode::UnsupportedN);
  EXPECT_EQ(code_of([] { search_hadamard_pairs_reference(kSD, 4); }), ErrorCode::UnsupportedN);
}

// Every structurally valid (R, T) at n = 8: the classifier says HadamardPair
// exactly when the graph is distance-regular by definition, and the accepted
// pairs are the search output up to isomorphism.
TEST(Soundness, ExhaustiveHadamardStructuredAtEight) {
  for (FamilyKind kind : {kSD, kPSD}) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> accepted;
    for (const auto& r : hadamard_r_candidates(8)) {
      for (std::uint64_t j = 0; j < hadamard_t_candidate_count(kind, 8); ++j) {
        const auto s = spec_of(kind, 8, r, hadamard_t_candidate(kind, 8, j));
        const auto c = classify(s);
        const auto def = oracle::drg_by_definition(build_from_spec(s).graph());
        ASSERT_EQ(c.kind != CaseKind::NotDistanceRegular, def.has_value());
        if (def) {
          ASSERT_EQ(c.kind, CaseKind::HadamardPair);
          accepted.insert(key(canonicalize(s)));
        }
      }
    }
    EXPECT_EQ(accepted, pair_keys(search_hadamard_pairs(kind, 8)));
  }
}

TEST(Soundness, RandomSpecsAgreeWithOracles) {
  std::mt19937_64 rng(59);
  for (FamilyKind kind : {kSD, kPSD}) {
    std::vector<ConnectionSpec> specs;
    for (int i = 0; i < 10000; ++i) {
      specs.push_back(random_connection_spec(kind, 8, rng, 0.05 + 0.9 * (i % 19) / 18.0));
    }
    const auto sweep = classification_sweep(specs);
    EXPECT_EQ(sweep.examined, 10000);
    EXPECT_TRUE(sweep.disagreements.empty());
    EXPECT_GT(sweep.distance_regular, 0);
    // A slice against the pairwise definition, which shares no code with
    // either route.
    for (int i = 0; i < 1500; ++i) {
      const auto g = build_from_spec(specs[i]);
      if (!is_connected(g)) continue;
      ASSERT_EQ(classify(specs[i]).kind != CaseKind::NotDistanceRegular,
                oracle::drg_by_definition(g.graph()).has_value());
    }
  }
}

TEST(Sweep, ParallelMatchesReference) {
  std::mt19937_64 rng(61);
  std::vector<ConnectionSpec> specs;
  for (int i = 0; i < 300; ++i) specs.push_back(random_connection_spec(i % 2 ? kSD : kPSD, 8, rng, 0.5));
  const auto a = classification_sweep(specs, 3);
  const auto b = classification_sweep_reference(specs);
  EXPECT_EQ(a.examined, b.examined);
  EXPECT_EQ(a.distance_regular, b.distance_regular);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.disagreements.size(), b.disagreements.size());
}

TEST(Sweep, RandomSpecsAreValid) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 200; ++i) {
    const auto s = random_connection_spec(i % 2 ? kSD : kPSD, 16, rng, 0.1);
    EXPECT_NO_THROW(validate(s));
    EXPECT_FALSE(s.r.empty() && s.t.empty());
  }
}
