#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace percox {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;
using Perm = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedType : Error { using Error::Error; };
struct PreconditionFailure : Error { using Error::Error; };
struct EndpointMismatch : Error { using Error::Error; };
struct CompositionMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotFreeAction : Error { using Error::Error; };
struct GenericityFailure : Error { using Error::Error; };
struct WrongSystem : Error { using Error::Error; };

inline int sign_of(const Rat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

inline std::string rat_str(const Rat& x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vscale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Mat mat_identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

inline Mat mat_transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat r(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

// In-place reduced row echelon form. Returns pivot columns.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

inline int rank_of(Mat m) { return (int)rref(m).size(); }

// Basis of the right nullspace {x : m x = 0}.
inline std::vector<Vec> nullspace(Mat m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][c];
    basis.push_back(v);
  }
  return basis;
}

// One solution of m x = b, if consistent.
inline std::optional<Vec> solve_linear(Mat m, Vec b) {
  size_t rows = m.size();
  if (rows == 0) return Vec{};
  size_t cols = m[0].size();
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> piv = rref(m);
  // Inconsistent if a pivot lands in the augmented column.
  if (!piv.empty() && piv.back() == (int)cols) return std::nullopt;
  Vec x(cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
  return x;
}

inline std::optional<Mat> mat_inverse(const Mat& a) {
  size_t n = a.size();
  Mat m(n, Vec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  std::vector<int> piv = rref(m);
  if (piv.size() != n || piv.back() != (int)n - 1) return std::nullopt;
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  // (a*b)(i) = a(b(i))
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = (int)i;
  return r;
}

inline Perm perm_identity(int n) {
  Perm r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}

// Incrementally maintained reduced row basis for exact span computations.
struct RrefBasis {
  std::vector<Vec> rows;
  std::vector<int> pivots;
  // Reduce v by the basis; if independent, insert and return true.
  bool insert(Vec v) {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rat f = v[pivots[r]];
      for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
    }
    int p = -1;
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) {
        p = (int)c;
        break;
      }
    if (p < 0) return false;
    Rat inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows.push_back(v);
    pivots.push_back(p);
    return true;
  }
  bool contains(Vec v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (v[pivots[r]] == 0) continue;
      Rat f = v[pivots[r]];
      for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
    }
    return is_zero(v);
  }
  int rank() const { return (int)rows.size(); }
};

// Deterministic RNG for seeded sampling (stable across platforms).
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

} // namespace percox
