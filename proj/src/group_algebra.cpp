#include "drgforge/group_algebra.hpp"

#include <utility>

#include "drgforge/error.hpp"

namespace drgforge {

GroupRingElement::GroupRingElement(Group group)
    : group_(std::move(group)), coeff_(group_.order(), 0) {}

GroupRingElement GroupRingElement::from_set(const Group& group, std::span<const Element> set) {
  GroupRingElement x(group);
  for (Element g : set) {
    if (!group.contains(g)) throw Error(ErrorCode::MixedGroups, "set element outside group");
    x.coeff_[g.index] += 1;
  }
  return x;
}

GroupRingElement GroupRingElement::inverted() const {
  GroupRingElement out(group_);
  for (int i = 0; i < group_.order(); ++i) {
    if (coeff_[i] != 0) out.coeff_[group_.inv({i}).index] += coeff_[i];
  }
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  if (!(group_ == other.group_)) throw Error(ErrorCode::MixedGroups, "group ring sum");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += other.coeff_[i];
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (!(a.group_ == b.group_)) throw Error(ErrorCode::MixedGroups, "group ring product");
  const Group& g = a.group_;
  GroupRingElement out(g);
  const int order = g.order();
  for (int i = 0; i < order; ++i) {
    if (a.coeff_[i] == 0) continue;
    for (int j = 0; j < order; ++j) {
      if (b.coeff_[j] == 0) continue;
      out.coeff_[g.mul({i}, {j}).index] += a.coeff_[i] * b.coeff_[j];
    }
  }
  return out;
}

}  // namespace drgforge
