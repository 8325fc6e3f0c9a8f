#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drgforge {

enum class FamilyKind {
  Cyclic,              // Z_m, order m
  CyclicTimesZ2,       // Z_n + Z_2, order 2n
  Dihedral,            // D_n, order 2n
  Dicyclic,            // Dic_n, order 4n
  SemiDihedral,        // SD_n, order 4n, n = 2^r >= 4
  PseudoSemiDihedral,  // PSD_n, order 4n, n = 2^r >= 4
};

struct GroupFamily {
  FamilyKind kind = FamilyKind::Cyclic;
  int n = 1;

  /// Accepts the CLI names: cyclic, cyclic-x-z2, dihedral, dicyclic, sd, psd.
  static GroupFamily parse(std::string_view name, int n);
  std::string name() const;

  friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

bool is_power_of_two(int n);

/// Group element as an index into the block layout: [0, M) is rho^i and
/// [M, 2M) is rho^i tau, where M is the order of rho.
struct Element {
  int index = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// A group with a cyclic subgroup <rho> of index 1 or 2. Every family here
/// has the normal form rho^i tau^s with tau rho tau^-1 = rho^twist and
/// tau^2 = rho^tau_square, so products are closed-form modular arithmetic.
class Group {
 public:
  explicit Group(GroupFamily family);

  const GroupFamily& family() const { return family_; }
  int order() const { return order_; }
  /// Order of rho.
  int modulus() const { return modulus_; }
  bool has_tau() const { return order_ != modulus_; }
  int twist() const { return twist_; }
  int tau_square() const { return tau_square_; }

  Element identity() const { return {0}; }
  Element rho(long long i) const;
  Element rho_tau(long long i) const;
  Element tau() const { return rho_tau(0); }

  /// Exponent of rho in the normal form.
  int exponent(Element g) const { return g.index % modulus_; }
  bool in_tau_coset(Element g) const { return g.index >= modulus_; }
  bool contains(Element g) const { return g.index >= 0 && g.index < order_; }

  /// Throws MixedGroups for operands that cannot belong to this group.
  Element mul(Element g, Element h) const;
  Element inv(Element g) const;
  Element pow(Element g, long long k) const;
  int element_order(Element g) const;

  std::vector<Element> elements() const;
  std::string format(Element g) const;

  friend bool operator==(const Group& a, const Group& b) { return a.family_ == b.family_; }

 private:
  void require(Element g) const;

  GroupFamily family_;
  int modulus_ = 1;
  int order_ = 1;
  int twist_ = 1;
  int tau_square_ = 0;
};

Group make_group(GroupFamily family);

/// Subgroup with its members sorted by index. Construction verifies closure.
class Subgroup {
 public:
  Subgroup(Group group, std::vector<Element> members, std::string label);

  const Group& group() const { return group_; }
  std::span<const Element> members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  int index() const { return group_.order() / order(); }
  bool contains(Element g) const { return group_.contains(g) && mask_[g.index] != 0; }
  const std::string& label() const { return label_; }

  bool is_normal() const;
  bool is_subgroup_of(const Subgroup& other) const;
  /// Smallest-index element of the group outside this subgroup, if any.
  Element min_outside() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  Group group_;
  std::vector<Element> members_;
  std::vector<char> mask_;
  std::string label_;
};

/// Brute-force subgroup test: nonempty and x * inv(y) stays inside.
bool is_subgroup(const Group& group, std::span<const Element> members);

Subgroup whole_group(const Group& group);
Subgroup generated_subgroup(const Group& group, std::span<const Element> generators,
                            std::string label);

/// All subgroups of index 2. For SD_n and PSD_n these are <rho>, <rho^2,tau>
/// and <rho^2,rho tau>, in that order.
std::vector<Subgroup> index2_subgroups(const Group& group);

/// Dense multiplication table built by rewriting words with the defining
/// relations one letter at a time. Used to cross-check `Group::mul`.
class MultiplicationTable {
 public:
  static constexpr int kMaxOrder = 128;

  static MultiplicationTable from_relations(const Group& group);

  int order() const { return order_; }
  Element mul(Element g, Element h) const {
    return table_[static_cast<std::size_t>(g.index) * order_ + h.index];
  }

 private:
  int order_ = 0;
  std::vector<Element> table_;
};

}  // namespace drgforge
