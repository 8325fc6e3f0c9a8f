#include "drgforge/residue.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "drgforge/error.hpp"

namespace drgforge {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::complex<double> root_of_unity(int m, long long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k, m)) / m;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ResidueSet::ResidueSet(int modulus) : modulus_(modulus) {
  if (modulus < 1) throw Error(ErrorCode::InvalidParameter, "modulus must be positive");
  words_.assign((modulus + 63) / 64, 0);
}

ResidueSet ResidueSet::from_members(int modulus, std::span<const int> members) {
  ResidueSet s(modulus);
  for (int x : members) {
    if (x < 0 || x >= modulus) {
      throw Error(ErrorCode::InvalidParameter, "residue " + std::to_string(x) +
                                                   " outside [0, " + std::to_string(modulus) +
                                                   ")");
    }
    s.insert(x);
  }
  return s;
}

ResidueSet ResidueSet::from_members(int modulus, std::initializer_list<int> members) {
  return from_members(modulus, std::span<const int>(members.begin(), members.size()));
}

ResidueSet ResidueSet::parse(int modulus, std::string_view text) {
  std::vector<int> members;
  for (long long x : parse_int_list(text)) {
    if (x < 0 || x >= modulus) {
      throw Error(ErrorCode::InvalidParameter, "residue " + std::to_string(x) +
                                                   " outside [0, " + std::to_string(modulus) +
                                                   ")");
    }
    members.push_back(static_cast<int>(x));
  }
  return from_members(modulus, members);
}

ResidueSet ResidueSet::full(int modulus) {
  ResidueSet s(modulus);
  for (int x = 0; x < modulus; ++x) s.insert(x);
  return s;
}

bool ResidueSet::contains(int x) const {
  if (x < 0 || x >= modulus_) return false;
  return (words_[x >> 6] >> (x & 63)) & 1U;
}

void ResidueSet::insert(int x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

void ResidueSet::erase(int x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

int ResidueSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> ResidueSet::members() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

ResidueSet ResidueSet::translated(long long shift) const {
  ResidueSet out(modulus_);
  for (int x : members()) out.insert(mod(x + shift, modulus_));
  return out;
}

ResidueSet ResidueSet::negated() const { return scaled(-1); }

ResidueSet ResidueSet::scaled(long long a) const {
  ResidueSet out(modulus_);
  for (int x : members()) out.insert(mod(a % modulus_ * x, modulus_));
  return out;
}

int ResidueSet::intersection_size(const ResidueSet& other) const {
  if (modulus_ != other.modulus_) {
    throw Error(ErrorCode::ModulusMismatch, "intersection of sets with different moduli");
  }
  int c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & other.words_[w]);
  return c;
}

std::string ResidueSet::to_string() const {
  std::string out;
  for (int x : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

bool operator<(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

// ---------------------------------------------------------------------------

IntVector indicator(const ResidueSet& a) {
  IntVector v{a.modulus(), std::vector<long long>(a.modulus(), 0)};
  for (int x : a.members()) v.values[x] = 1;
  return v;
}

IntVector delta(int modulus, int at) {
  IntVector v{modulus, std::vector<long long>(modulus, 0)};
  v.values[mod(at, modulus)] = 1;
  return v;
}

IntVector autocorrelation(const ResidueSet& a) {
  const int m = a.modulus();
  IntVector out{m, std::vector<long long>(m, 0)};
  for (int i = 0; i < m; ++i) out.values[i] = a.intersection_size(a.translated(i));
  return out;
}

IntVector convolve(const IntVector& f, const IntVector& g) {
  if (f.modulus != g.modulus) {
    throw Error(ErrorCode::ModulusMismatch, "convolution of vectors over different moduli");
  }
  const int m = f.modulus;
  IntVector out{m, std::vector<long long>(m, 0)};
  for (int i = 0; i < m; ++i) {
    if (f.values[i] == 0) continue;
    for (int j = 0; j < m; ++j) out.values[(i + j) % m] += f.values[i] * g.values[j];
  }
  return out;
}

ComplexVector dft(const ComplexVector& f) {
  const int m = f.modulus;
  ComplexVector out{m, std::vector<std::complex<double>>(m)};
  for (int z = 0; z < m; ++z) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < m; ++i) acc += f.values[i] * root_of_unity(m, static_cast<long long>(i) * z);
    out.values[z] = acc;
  }
  return out;
}

ComplexVector dft(const IntVector& f) {
  ComplexVector c{f.modulus, std::vector<std::complex<double>>(f.values.begin(), f.values.end())};
  return dft(c);
}

ComplexVector inverse_dft(const ComplexVector& f) {
  const int m = f.modulus;
  ComplexVector out{m, std::vector<std::complex<double>>(m)};
  for (int i = 0; i < m; ++i) {
    std::complex<double> acc = 0.0;
    for (int z = 0; z < m; ++z) acc += f.values[z] * root_of_unity(m, -static_cast<long long>(i) * z);
    out.values[i] = acc / static_cast<double>(m);
  }
  return out;
}

bool is_integral(const ComplexVector& v, double tol) {
  for (const auto& x : v.values) {
    if (std::abs(x.imag()) > tol) return false;
    if (std::abs(x.real() - std::round(x.real())) > tol) return false;
  }
  return true;
}

int gcd(long long a, long long b) { return static_cast<int>(std::gcd(a, b)); }

bool is_unit(long long a, int modulus) { return gcd(mod(a, modulus), modulus) == 1; }

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int r = 1; r <= m; ++r) {
    if (m % r == 0) out.push_back(r);
  }
  return out;
}

std::vector<UnitOrbit> unit_orbits(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidParameter, "modulus must be positive");
  std::vector<UnitOrbit> out;
  for (int r : divisors(m)) {
    UnitOrbit orbit{m, r, ResidueSet(m)};
    for (int c = 0; c < m; ++c) {
      if (is_unit(c, m)) orbit.members.insert(mod(static_cast<long long>(c) * (m / r), m));
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_union_of_unit_orbits(const ResidueSet& a) {
  for (const auto& orbit : unit_orbits(a.modulus())) {
    const int hit = a.intersection_size(orbit.members);
    if (hit != 0 && hit != orbit.members.size()) return false;
  }
  return true;
}

CosetProfile coset_profile(const ResidueSet& a, int r) {
  const int m = a.modulus();
  if (r < 1 || m % r != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(r) + " does not divide " + std::to_string(m));
  }
  CosetProfile p{std::vector<int>(r, 0), 0.0};
  for (int x : a.members()) ++p.counts[x % r];
  for (int i = 0; i < r; ++i) p.value += static_cast<double>(p.counts[i]) * root_of_unity(r, i);
  return p;
}

ResidueSet affine_image(const ResidueSet& a, long long unit, long long shift) {
  const int m = a.modulus();
  if (!is_unit(unit, m)) {
    throw Error(ErrorCode::NotAUnit, std::to_string(unit) + " is not a unit modulo " + std::to_string(m));
  }
  return a.scaled(unit).translated(shift);
}

std::vector<long long> parse_int_list(std::string_view text) {
  std::vector<long long> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view token = trim(text.substr(pos, comma - pos));
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidParameter, "cannot parse '" + std::string(token) + "' as an integer");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace drgforge
