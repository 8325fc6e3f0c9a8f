#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms beyond plain data access.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "drgforge/graph.hpp"
#include "drgforge/group.hpp"

namespace oracle {

/// |A ∩ (i + A)| by a double loop over members.
inline std::vector<long long> autocorrelation(const std::vector<int>& a, int m) {
  std::vector<long long> out(m, 0);
  for (int x : a) {
    for (int y : a) ++out[((x - y) % m + m) % m];
  }
  return out;
}

/// Faithful 2x2 complex representation: rho^i tau^s as a matrix. Works for
/// every family with tau; products are compared with a tolerance.
struct Mat {
  std::complex<double> a, b, c, d;
  Mat operator*(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  bool near(const Mat& o) const {
    return std::abs(a - o.a) + std::abs(b - o.b) + std::abs(c - o.c) + std::abs(d - o.d) < 1e-9;
  }
};

/// Affine maps x -> u x + i on Z_M (u = 1 or the twist) model every
/// semidirect family; the dicyclic family uses 2x2 matrices instead.
struct AffineModel {
  int modulus;
  int twist;
  struct Map {
    int u;
    int shift;
  };
  Map rho(int i) const { return {1, ((i % modulus) + modulus) % modulus}; }
  Map tau() const { return {twist, 0}; }
  Map compose(Map f, Map g) const {  // f after g
    return {static_cast<int>((1LL * f.u * g.u) % modulus),
            static_cast<int>((1LL * f.u * g.shift + f.shift) % modulus)};
  }
};

/// Breadth-first distances from every vertex.
inline std::vector<std::vector<int>> distances(const drgforge::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (g.adjacent(u, v) && d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
      }
    }
  }
  return d;
}

/// Distance-regularity straight from the definition over all ordered
/// pairs: the numbers of neighbours of y at distances i-1, i, i+1 from x
/// depend only on i = d(x, y). Returns {b; c} or nullopt.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> drg_by_definition(const drgforge::Graph& g) {
  const int n = g.order();
  const auto d = distances(g);
  int diam = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (d[x][y] < 0) return std::nullopt;
      diam = std::max(diam, d[x][y]);
    }
  }
  std::vector<int> b(diam + 1, -1), c(diam + 1, -1), a(diam + 1, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int i = d[x][y];
      int cc = 0, aa = 0, bb = 0;
      for (int z = 0; z < n; ++z) {
        if (!g.adjacent(y, z)) continue;
        if (d[x][z] == i - 1) ++cc;
        else if (d[x][z] == i) ++aa;
        else ++bb;
      }
      if (c[i] < 0) {
        c[i] = cc;
        a[i] = aa;
        b[i] = bb;
      } else if (c[i] != cc || a[i] != aa || b[i] != bb) {
        return std::nullopt;
      }
    }
  }
  std::vector<int> bs(b.begin(), b.end() - 1);
  std::vector<int> cs(c.begin() + 1, c.end());
  return std::make_pair(bs, cs);
}

/// Eigenvalues of the tridiagonal intersection matrix by bisection on the
/// Sturm sequence of the symmetrised matrix (diagonal a_i, off-diagonal
/// sqrt(b_i c_{i+1})). Returned in decreasing order.
inline std::vector<double> tridiagonal_eigenvalues(const std::vector<int>& b, const std::vector<int>& c) {
  const int d = static_cast<int>(b.size());
  const int k = d > 0 ? b[0] : 0;
  std::vector<double> diag(d + 1), off2(d);
  for (int i = 0; i <= d; ++i) {
    const int bi = i < d ? b[i] : 0;
    const int ci = i > 0 ? c[i - 1] : 0;
    diag[i] = k - bi - ci;
  }
  for (int i = 0; i < d; ++i) off2[i] = static_cast<double>(b[i]) * c[i];
  // Number of eigenvalues strictly less than x.
  auto count_below = [&](double x) {
    int count = 0;
    double q = diag[0] - x;
    if (q < 0) ++count;
    for (int i = 1; i <= d; ++i) {
      if (q == 0) q = 1e-300;
      q = diag[i] - x - off2[i - 1] / q;
      if (q < 0) ++count;
    }
    return count;
  };
  const double lo0 = -k - 1.0, hi0 = k + 1.0;
  std::vector<double> out;
  for (int j = 0; j <= d; ++j) {
    // j-th smallest eigenvalue.
    double lo = lo0, hi = hi0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) > j) hi = mid;
      else lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// (v, k, lambda) difference set in Z_m by counting all ordered differences.
inline bool cyclic_difference_set(const std::vector<int>& d, int m) {
  std::vector<int> count(m, 0);
  for (int x : d) {
    for (int y : d) {
      if (x != y) ++count[((x - y) % m + m) % m];
    }
  }
  for (int g = 2; g < m; ++g) {
    if (count[g] != count[1]) return false;
  }
  return true;
}

/// Every k-subset of Z_m, lexicographic.
inline void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == m - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace oracle
