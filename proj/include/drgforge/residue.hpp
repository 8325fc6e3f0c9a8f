#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drgforge {

/// Subset of Z_m held as a bit-vector of length m.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(int modulus);

  /// Throws InvalidParameter for residues outside [0, m).
  static ResidueSet from_members(int modulus, std::span<const int> members);
  static ResidueSet from_members(int modulus, std::initializer_list<int> members);
  /// Parses "a,b,c" (empty string is the empty set).
  static ResidueSet parse(int modulus, std::string_view text);
  static ResidueSet full(int modulus);

  int modulus() const { return modulus_; }
  bool contains(int x) const;
  void insert(int x);
  void erase(int x);
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// {x + shift}
  ResidueSet translated(long long shift) const;
  /// {-x}
  ResidueSet negated() const;
  /// {a x}; a need not be a unit here.
  ResidueSet scaled(long long a) const;
  /// |this ∩ other|
  int intersection_size(const ResidueSet& other) const;

  /// Sorted comma-separated residues, e.g. "5,7,9,11".
  std::string to_string() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
  /// Lexicographic order on the sorted member lists (moduli compared first).
  friend bool operator<(const ResidueSet& a, const ResidueSet& b);

 private:
  int modulus_ = 0;
  std::vector<std::uint64_t> words_;
};

struct IntVector {
  int modulus = 0;
  std::vector<long long> values;
  friend bool operator==(const IntVector&, const IntVector&) = default;
};

/// Floating-point transform output; never used for accept/reject decisions.
struct ComplexVector {
  int modulus = 0;
  std::vector<std::complex<double>> values;
};

struct UnitOrbit {
  int modulus = 0;
  int divisor = 1;  // r: members are c * (m / r) for units c
  ResidueSet members;
};

struct CosetProfile {
  std::vector<int> counts;  // e_i = |A ∩ (i + r Z_m)|
  std::complex<double> value;
};

IntVector indicator(const ResidueSet& a);
IntVector delta(int modulus, int at);

/// out[i] = |A ∩ (i + A)|, exact.
IntVector autocorrelation(const ResidueSet& a);

/// Exact cyclic convolution (f*g)(z) = sum_i f(i) g(z - i).
IntVector convolve(const IntVector& f, const IntVector& g);

/// F(f)(z) = sum_i f(i) w^(iz), w = exp(2 pi i / m).
ComplexVector dft(const IntVector& f);
ComplexVector dft(const ComplexVector& f);
/// Inverse of `dft`: f(i) = (1/m) sum_z F(z) w^(-iz).
ComplexVector inverse_dft(const ComplexVector& f);

/// True when every value is within `tol` of an integer on the real axis.
bool is_integral(const ComplexVector& v, double tol = 1e-9);

int gcd(long long a, long long b);
bool is_unit(long long a, int modulus);
std::vector<int> divisors(int m);

/// Orbits of Z_m under multiplication by units, one per divisor r of m,
/// ordered by increasing r.
std::vector<UnitOrbit> unit_orbits(int m);

/// True when A is a union of unit orbits.
bool is_union_of_unit_orbits(const ResidueSet& a);

/// Coset counts e_i and sum_i e_i xi^i with xi = w^(m/r).
CosetProfile coset_profile(const ResidueSet& a, int r);

/// b + aA. Throws NotAUnit when gcd(a, m) != 1.
ResidueSet affine_image(const ResidueSet& a, long long unit, long long shift);

/// Parses "a,b,c" into integers (no reduction); "" gives an empty list.
std::vector<long long> parse_int_list(std::string_view text);

}  // namespace drgforge
