#include <gtest/gtest.h>

#include <numbers>

#include "drgforge/error.hpp"
#include "drgforge/group.hpp"
#include "drgforge/group_algebra.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace drgforge;

namespace {

Group sd(int n) { return Group(GroupFamily{FamilyKind::SemiDihedral, n}); }
Group psd(int n) { return Group(GroupFamily{FamilyKind::PseudoSemiDihedral, n}); }
using testutil::code_of;

}  // namespace

TEST(Group, Orders) {
  EXPECT_EQ(make_group({FamilyKind::SemiDihedral, 8}).order(), 32);
  EXPECT_EQ(make_group({FamilyKind::PseudoSemiDihedral, 16}).order(), 64);
  EXPECT_EQ(make_group({FamilyKind::Dihedral, 7}).order(), 14);
  EXPECT_EQ(make_group({FamilyKind::Dicyclic, 3}).order(), 12);
  EXPECT_EQ(make_group({FamilyKind::CyclicTimesZ2, 5}).order(), 10);
  EXPECT_EQ(make_group({FamilyKind::Cyclic, 9}).order(), 9);
}

TEST(Group, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { sd(6); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { psd(2); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { GroupFamily::parse("quaternion", 8); }), ErrorCode::InvalidParameter);
}

TEST(Group, DefiningRelations) {
  const Group g = sd(8);
  EXPECT_EQ(g.mul(g.tau(), g.mul(g.rho(1), g.tau())), g.rho(7));
  const Group p = psd(8);
  EXPECT_EQ(p.mul(p.tau(), p.mul(p.rho(1), p.tau())), p.rho(9));
  EXPECT_EQ(g.mul(g.rho_tau(1), g.rho_tau(1)), g.rho(8));
  EXPECT_EQ(g.inv(g.rho_tau(4)), g.rho_tau(4));
  EXPECT_EQ(g.inv(g.identity()), g.identity());
}

TEST(Group, ConjugationByTauOnRhoPart) {
  for (int n : {8, 16}) {
    const Group g = sd(n);
    const Group p = psd(n);
    for (int i = 0; i < 2 * n; ++i) {
      EXPECT_EQ(g.mul(g.tau(), g.mul(g.rho(i), g.tau())), g.rho(1LL * i * (n - 1)));
      EXPECT_EQ(p.mul(p.tau(), p.mul(p.rho(i), p.tau())), p.rho(1LL * i * (n + 1)));
    }
  }
}

TEST(Group, InverseOfTauCosetElement) {
  const Group g = sd(8);
  for (int t = 0; t < 16; ++t) {
    EXPECT_EQ(g.inv(g.rho_tau(t)), g.rho_tau(9 * t));
    EXPECT_EQ(g.mul(g.rho_tau(t), g.rho_tau(9 * t)), g.identity());
  }
}

TEST(Group, MixedGroupsRejected) {
  const Group small = sd(4);
  const Group big = sd(8);
  EXPECT_EQ(code_of([&] { small.mul(big.rho_tau(15), small.rho(1)); }), ErrorCode::MixedGroups);
  EXPECT_EQ(code_of([&] { small.inv(Element{-1}); }), ErrorCode::MixedGroups);
}

// Products agree with a faithful affine model x -> u x + i built from the
// presentations alone.
TEST(Group, MatchesAffineModel) {
  struct Case {
    FamilyKind kind;
    int n;
    int twist;
  };
  const std::vector<Case> cases = {{FamilyKind::SemiDihedral, 8, 7},      {FamilyKind::PseudoSemiDihedral, 8, 9},
                                   {FamilyKind::SemiDihedral, 16, 15},    {FamilyKind::PseudoSemiDihedral, 16, 17},
                                   {FamilyKind::Dihedral, 9, 8},          {FamilyKind::Dihedral, 16, 15}};
  for (const auto& c : cases) {
    const Group g(GroupFamily{c.kind, c.n});
    const int m = g.modulus();
    const oracle::AffineModel model{m, c.twist};
    auto as_map = [&](Element e) {
      const int i = g.exponent(e);
      return g.in_tau_coset(e) ? model.compose(model.rho(i), model.tau()) : model.rho(i);
    };
    for (Element x : g.elements()) {
      for (Element y : g.elements()) {
        const auto expected = model.compose(as_map(x), as_map(y));
        const auto got = as_map(g.mul(x, y));
        ASSERT_EQ(got.u, expected.u) << g.family().name() << " " << x.index << "*" << y.index;
        ASSERT_EQ(got.shift, expected.shift);
      }
    }
  }
}

TEST(Group, DicyclicMatchesMatrixModel) {
  for (int n : {2, 3, 4, 5}) {
    const Group g(GroupFamily{FamilyKind::Dicyclic, n});
    const double angle = std::numbers::pi / n;
    const std::complex<double> w(std::cos(angle), std::sin(angle));
    const oracle::Mat rho{w, 0, 0, std::conj(w)};
    const oracle::Mat tau{0, -1, 1, 0};
    auto power = [](oracle::Mat m, int k) {
      oracle::Mat out{1, 0, 0, 1};
      for (int i = 0; i < k; ++i) out = out * m;
      return out;
    };
    auto as_mat = [&](Element e) {
      const oracle::Mat r = power(rho, g.exponent(e));
      return g.in_tau_coset(e) ? r * tau : r;
    };
    for (Element x : g.elements()) {
      for (Element y : g.elements()) ASSERT_TRUE(as_mat(g.mul(x, y)).near(as_mat(x) * as_mat(y)));
    }
  }
}

TEST(Group, CyclicTimesZ2IsAbelianPairs) {
  const Group g(GroupFamily{FamilyKind::CyclicTimesZ2, 6});
  for (Element x : g.elements()) {
    for (Element y : g.elements()) {
      const Element p = g.mul(x, y);
      EXPECT_EQ(g.exponent(p), (g.exponent(x) + g.exponent(y)) % 6);
      EXPECT_EQ(g.in_tau_coset(p), g.in_tau_coset(x) != g.in_tau_coset(y));
    }
  }
}

TEST(Group, AxiomsAndTableCrossCheck) {
  for (FamilyKind kind : {FamilyKind::Cyclic, FamilyKind::CyclicTimesZ2, FamilyKind::Dihedral, FamilyKind::Dicyclic,
                          FamilyKind::SemiDihedral, FamilyKind::PseudoSemiDihedral}) {
    const Group g(GroupFamily{kind, 8});
    const auto table = MultiplicationTable::from_relations(g);
    for (Element x : g.elements()) {
      EXPECT_EQ(g.mul(x, g.inv(x)), g.identity());
      for (Element y : g.elements()) {
        ASSERT_EQ(table.mul(x, y), g.mul(x, y));
        for (Element z : g.elements()) ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
      }
    }
  }
}

TEST(Group, Format) {
  const Group g = sd(8);
  EXPECT_EQ(g.format(g.identity()), "1");
  EXPECT_EQ(g.format(g.rho(1)), "rho");
  EXPECT_EQ(g.format(g.rho_tau(3)), "rho^3 tau");
  EXPECT_EQ(g.format(g.tau()), "tau");
}

// Index-2 subgroups are the kernels of the non-trivial homomorphisms to Z_2,
// found here by testing every assignment of rho and tau.
TEST(Subgroups, IndexTwoMatchesHomomorphismKernels) {
  for (int n : {8, 16, 32}) {
    for (const Group& g : {sd(n), psd(n)}) {
      std::set<std::vector<int>> kernels;
      for (int pr = 0; pr < 2; ++pr) {
        for (int pt = 0; pt < 2; ++pt) {
          if (!pr && !pt) continue;
          auto phi = [&](Element e) { return (pr * g.exponent(e) + pt * (g.in_tau_coset(e) ? 1 : 0)) % 2; };
          bool hom = true;
          for (Element x : g.elements()) {
            for (Element y : g.elements()) hom &= phi(g.mul(x, y)) == (phi(x) + phi(y)) % 2;
          }
          if (!hom) continue;
          std::vector<int> kernel;
          for (Element x : g.elements()) {
            if (phi(x) == 0) kernel.push_back(x.index);
          }
          kernels.insert(kernel);
        }
      }
      const auto subs = index2_subgroups(g);
      ASSERT_EQ(subs.size(), 3U);
      std::set<std::vector<int>> got;
      for (const auto& h : subs) {
        EXPECT_EQ(h.order(), 2 * n);
        EXPECT_TRUE(is_subgroup(g, h.members()));
        std::vector<int> idx;
        for (Element e : h.members()) idx.push_back(e.index);
        got.insert(idx);
      }
      EXPECT_EQ(got, kernels);
      EXPECT_EQ(subs[0].label(), "<rho>");
      EXPECT_EQ(subs[1].label(), "<rho^2,tau>");
      EXPECT_EQ(subs[2].label(), "<rho^2,rho tau>");
    }
  }
}

TEST(Subgroups, PsdThirdSubgroupIsCyclic) {
  const Group g = psd(8);
  const auto subs = index2_subgroups(g);
  EXPECT_EQ(subs[2].order(), 16);
  EXPECT_EQ(g.element_order(g.rho_tau(1)), 16);
}

TEST(Subgroups, CyclicHasOneIndexTwoSubgroup) {
  const Group g(GroupFamily{FamilyKind::Cyclic, 16});
  const auto subs = index2_subgroups(g);
  ASSERT_EQ(subs.size(), 1U);
  for (Element e : subs[0].members()) EXPECT_EQ(e.index % 2, 0);
}

TEST(Subgroups, ClosureAndNormality) {
  const Group g = sd(8);
  const auto center = generated_subgroup(g, std::vector<Element>{g.rho(8)}, "<rho^8>");
  EXPECT_EQ(center.order(), 2);
  EXPECT_TRUE(center.is_normal());
  const auto t = generated_subgroup(g, std::vector<Element>{g.tau()}, "<tau>");
  EXPECT_FALSE(t.is_normal());
  EXPECT_TRUE(center.is_subgroup_of(whole_group(g)));
  EXPECT_EQ(code_of([&] { Subgroup(g, {g.identity(), g.rho(1)}, "bad"); }), ErrorCode::InvalidParameter);
}

TEST(GroupRing, ProductMatchesConvolutionCount) {
  const Group g = sd(4);
  const std::vector<Element> a = {g.rho(1), g.rho_tau(2), g.rho(5)};
  const std::vector<Element> b = {g.rho_tau(0), g.rho(3)};
  const auto prod = GroupRingElement::from_set(g, a) * GroupRingElement::from_set(g, b);
  std::vector<long long> expected(g.order(), 0);
  for (Element x : a) {
    for (Element y : b) ++expected[g.mul(x, y).index];
  }
  for (Element e : g.elements()) EXPECT_EQ(prod.coefficient(e), expected[e.index]);
}
