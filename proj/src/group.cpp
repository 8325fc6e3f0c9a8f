#include "drgforge/group.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "drgforge/error.hpp"

namespace drgforge {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

GroupFamily GroupFamily::parse(std::string_view name, int n) {
  GroupFamily f;
  f.n = n;
  if (name == "cyclic") {
    f.kind = FamilyKind::Cyclic;
  } else if (name == "cyclic-x-z2") {
    f.kind = FamilyKind::CyclicTimesZ2;
  } else if (name == "dihedral") {
    f.kind = FamilyKind::Dihedral;
  } else if (name == "dicyclic") {
    f.kind = FamilyKind::Dicyclic;
  } else if (name == "sd") {
    f.kind = FamilyKind::SemiDihedral;
  } else if (name == "psd") {
    f.kind = FamilyKind::PseudoSemiDihedral;
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown group family '" + std::string(name) + "'");
  }
  return f;
}

std::string GroupFamily::name() const {
  switch (kind) {
    case FamilyKind::Cyclic: return "cyclic";
    case FamilyKind::CyclicTimesZ2: return "cyclic-x-z2";
    case FamilyKind::Dihedral: return "dihedral";
    case FamilyKind::Dicyclic: return "dicyclic";
    case FamilyKind::SemiDihedral: return "sd";
    case FamilyKind::PseudoSemiDihedral: return "psd";
  }
  return "unknown";
}

Group::Group(GroupFamily family) : family_(family) {
  const int n = family.n;
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "family parameter must be positive");
  switch (family.kind) {
    case FamilyKind::Cyclic:
      modulus_ = n;
      order_ = n;
      twist_ = 1;
      break;
    case FamilyKind::CyclicTimesZ2:
      modulus_ = n;
      order_ = 2 * n;
      twist_ = 1;
      break;
    case FamilyKind::Dihedral:
      modulus_ = n;
      order_ = 2 * n;
      twist_ = mod(-1, n);
      break;
    case FamilyKind::Dicyclic:
      modulus_ = 2 * n;
      order_ = 4 * n;
      twist_ = 2 * n - 1;
      tau_square_ = n;
      break;
    case FamilyKind::SemiDihedral:
    case FamilyKind::PseudoSemiDihedral:
      if (!is_power_of_two(n) || n < 4) {
        throw Error(ErrorCode::InvalidParameter,
                    family.name() + " requires n = 2^r with r >= 2, got " + std::to_string(n));
      }
      modulus_ = 2 * n;
      order_ = 4 * n;
      twist_ = family.kind == FamilyKind::SemiDihedral ? n - 1 : n + 1;
      break;
  }
  twist_ = mod(twist_, modulus_);
}

Group make_group(GroupFamily family) { return Group(family); }

void Group::require(Element g) const {
  if (!contains(g)) {
    throw Error(ErrorCode::MixedGroups, "element index " + std::to_string(g.index) +
                                            " is not in " + family_.name() + "(" +
                                            std::to_string(family_.n) + ")");
  }
}

Element Group::rho(long long i) const { return {mod(i, modulus_)}; }

Element Group::rho_tau(long long i) const {
  if (!has_tau()) throw Error(ErrorCode::InvalidParameter, "cyclic group has no tau coset");
  return {modulus_ + mod(i, modulus_)};
}

Element Group::mul(Element g, Element h) const {
  require(g);
  require(h);
  const bool gs = in_tau_coset(g);
  const bool hs = in_tau_coset(h);
  long long e = exponent(g);
  long long b = exponent(h);
  e += gs ? static_cast<long long>(twist_) * b : b;
  if (gs && hs) e += tau_square_;
  const int r = mod(e, modulus_);
  return {(gs != hs) ? modulus_ + r : r};
}

Element Group::inv(Element g) const {
  require(g);
  const long long a = exponent(g);
  if (!in_tau_coset(g)) return rho(-a);
  // rho^a tau rho^x tau = rho^(a + twist x + tau_square) and twist^2 = 1.
  return rho_tau(-static_cast<long long>(twist_) * (a + tau_square_));
}

Element Group::pow(Element g, long long k) const {
  require(g);
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  Element result = identity();
  Element base = g;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int Group::element_order(Element g) const {
  require(g);
  int k = 1;
  Element x = g;
  while (x != identity()) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out(order_);
  for (int i = 0; i < order_; ++i) out[i] = {i};
  return out;
}

std::string Group::format(Element g) const {
  require(g);
  const int a = exponent(g);
  std::string s;
  if (a == 0 && !in_tau_coset(g)) return "1";
  if (a == 1) s = "rho";
  else if (a != 0) s = "rho^" + std::to_string(a);
  if (in_tau_coset(g)) s += s.empty() ? "tau" : " tau";
  return s;
}

// ---------------------------------------------------------------------------

bool is_subgroup(const Group& group, std::span<const Element> members) {
  if (members.empty()) return false;
  std::vector<char> mask(group.order(), 0);
  for (Element g : members) {
    if (!group.contains(g)) return false;
    mask[g.index] = 1;
  }
  for (Element x : members) {
    for (Element y : members) {
      if (!mask[group.mul(x, group.inv(y)).index]) return false;
    }
  }
  return true;
}

Subgroup::Subgroup(Group group, std::vector<Element> members, std::string label)
    : group_(std::move(group)), members_(std::move(members)), label_(std::move(label)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!is_subgroup(group_, members_)) {
    throw Error(ErrorCode::InvalidParameter, "'" + label_ + "' is not a subgroup");
  }
  mask_.assign(group_.order(), 0);
  for (Element g : members_) mask_[g.index] = 1;
}

bool Subgroup::is_normal() const {
  for (int i = 0; i < group_.order(); ++i) {
    const Element g{i};
    const Element gi = group_.inv(g);
    for (Element h : members_) {
      if (!contains(group_.mul(group_.mul(g, h), gi))) return false;
    }
  }
  return true;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!(group_ == other.group_)) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element g) { return other.contains(g); });
}

Element Subgroup::min_outside() const {
  for (int i = 0; i < group_.order(); ++i) {
    if (!mask_[i]) return {i};
  }
  throw Error(ErrorCode::InvalidParameter, "subgroup '" + label_ + "' is the whole group");
}

Subgroup whole_group(const Group& group) { return Subgroup(group, group.elements(), "G"); }

Subgroup generated_subgroup(const Group& group, std::span<const Element> generators,
                            std::string label) {
  std::vector<char> seen(group.order(), 0);
  std::vector<Element> members{group.identity()};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Element s : generators) {
      const Element x = group.mul(members[head], s);
      if (!seen[x.index]) {
        seen[x.index] = 1;
        members.push_back(x);
      }
    }
  }
  return Subgroup(group, std::move(members), std::move(label));
}

std::vector<Subgroup> index2_subgroups(const Group& group) {
  const int m = group.modulus();
  std::vector<Subgroup> out;
  if (!group.has_tau()) {
    if (m % 2 != 0) return out;
    std::vector<Element> evens;
    for (int i = 0; i < m; i += 2) evens.push_back({i});
    out.emplace_back(group, std::move(evens), "<rho^2>");
    return out;
  }

  // Candidates <rho>, <rho^2,tau>, <rho^2,rho tau>; the last two only make
  // sense when rho^2 has index 2 in <rho>. Keep those that are closed.
  std::vector<Element> rho_part;
  for (int i = 0; i < m; ++i) rho_part.push_back(group.rho(i));
  out.emplace_back(group, std::move(rho_part), "<rho>");
  if (m % 2 != 0) return out;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<Element> members;
    for (int i = 0; i < m; i += 2) {
      members.push_back(group.rho(i));
      members.push_back(group.rho_tau(i + parity));
    }
    if (!is_subgroup(group, members)) continue;
    out.emplace_back(group, std::move(members), parity == 0 ? "<rho^2,tau>" : "<rho^2,rho tau>");
  }
  return out;
}

// ---------------------------------------------------------------------------

MultiplicationTable MultiplicationTable::from_relations(const Group& group) {
  if (group.order() > kMaxOrder) {
    throw Error(ErrorCode::TooLarge, "multiplication table limited to order " +
                                         std::to_string(kMaxOrder));
  }
  const int m = group.modulus();
  // Relation constants straight from the presentations.
  int conj = 1;
  int tau_sq = 0;
  const int n = group.family().n;
  switch (group.family().kind) {
    case FamilyKind::Cyclic:
    case FamilyKind::CyclicTimesZ2: conj = 1; break;
    case FamilyKind::Dihedral: conj = m - 1; break;
    case FamilyKind::Dicyclic: conj = m - 1; tau_sq = n; break;
    case FamilyKind::SemiDihedral: conj = n - 1; break;
    case FamilyKind::PseudoSemiDihedral: conj = n + 1; break;
  }

  MultiplicationTable t;
  t.order_ = group.order();
  t.table_.resize(static_cast<std::size_t>(t.order_) * t.order_);
  for (int g = 0; g < t.order_; ++g) {
    for (int h = 0; h < t.order_; ++h) {
      // Word rho^a tau^s rho^b tau^t; push the tau past rho^b one letter at
      // a time using tau rho = rho^conj tau.
      int exp = g % m;
      const bool s = g >= m;
      const int b = h % m;
      const bool tt = h >= m;
      for (int step = 0; step < b; ++step) exp = (exp + (s ? conj : 1)) % m;
      bool tail = s;
      if (tt) {
        if (tail) {
          exp = (exp + tau_sq) % m;
          tail = false;
        } else {
          tail = true;
        }
      }
      t.table_[static_cast<std::size_t>(g) * t.order_ + h] = {tail ? m + exp : exp};
    }
  }
  return t;
}

}  // namespace drgforge
