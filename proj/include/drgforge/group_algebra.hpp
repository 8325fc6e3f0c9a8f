#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "drgforge/group.hpp"

namespace drgforge {

/// Element of the integer group ring ZG, stored densely by element index.
class GroupRingElement {
 public:
  explicit GroupRingElement(Group group);

  /// Sum of the elements of a set (each with coefficient 1).
  static GroupRingElement from_set(const Group& group, std::span<const Element> set);

  const Group& group() const { return group_; }
  std::int64_t coefficient(Element g) const { return coeff_[g.index]; }
  std::int64_t& operator[](Element g) { return coeff_[g.index]; }
  std::span<const std::int64_t> coefficients() const { return coeff_; }

  /// a^(-1): every g replaced by its inverse.
  GroupRingElement inverted() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.coeff_ == b.coeff_;
  }

 private:
  Group group_;
  std::vector<std::int64_t> coeff_;
};

}  // namespace drgforge
