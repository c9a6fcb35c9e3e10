#include "percox/lp.hpp"

namespace percox {

// Phase-I simplex, Bland's rule. Minimizes the sum of artificials for
//   M z+ - M z- - s + a = 1,   z+, z-, s, a >= 0.
std::optional<Vec> simplex_geq1(const Mat& m) {
  size_t rows = m.size();
  if (rows == 0) return Vec{};
  size_t k = m[0].size();
  if (k == 0) return std::nullopt;
  size_t ncols = 2 * k + 2 * rows; // z+, z-, s, a
  size_t art0 = 2 * k + rows;
  Mat t(rows, Vec(ncols + 1, 0));
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < k; ++j) {
      t[i][j] = m[i][j];
      t[i][k + j] = -m[i][j];
    }
    t[i][2 * k + i] = -1;
    t[i][art0 + i] = 1;
    t[i][ncols] = 1;
    basis[i] = art0 + i;
  }
  auto reduced_cost = [&](size_t j) {
    // c_j - sum over artificial basic rows of t[i][j]
    Rat d = j >= art0 ? 1 : 0;
    for (size_t i = 0; i < rows; ++i)
      if (basis[i] >= art0) d -= t[i][j];
    return d;
  };
  for (;;) {
    size_t enter = ncols;
    for (size_t j = 0; j < ncols; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break; // Bland: smallest index
      }
    }
    if (enter == ncols) break;
    size_t leave = rows;
    Rat best = 0;
    for (size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][ncols] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) return std::nullopt; // unbounded phase-1: cannot happen
    Rat piv = t[leave][enter];
    for (size_t j = 0; j <= ncols; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  Rat obj = 0;
  for (size_t i = 0; i < rows; ++i)
    if (basis[i] >= art0) obj += t[i][ncols];
  if (obj != 0) return std::nullopt;
  Vec z(k, 0);
  for (size_t i = 0; i < rows; ++i) {
    if (basis[i] < k)
      z[basis[i]] += t[i][ncols];
    else if (basis[i] < 2 * k)
      z[basis[i] - k] -= t[i][ncols];
  }
  return z;
}

std::optional<Vec> strict_feasible(const StrictSystem& sys) {
  // Parametrize the equality space and reduce to M y >= 1.
  std::vector<Vec> basis;
  if (sys.eq.empty()) {
    for (int i = 0; i < sys.dim; ++i) {
      Vec e(sys.dim, 0);
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    basis = nullspace(sys.eq);
  }
  size_t k = basis.size();
  if (sys.pos.empty()) return Vec(sys.dim, 0);
  Mat m;
  for (const auto& r : sys.pos) {
    Vec row(k);
    bool zero = true;
    for (size_t j = 0; j < k; ++j) {
      row[j] = dot(r, basis[j]);
      if (row[j] != 0) zero = false;
    }
    if (zero) return std::nullopt; // r vanishes on the whole space: r.x > 0 impossible
    m.push_back(row);
  }
  // Dedup rows equal up to positive scaling.
  std::map<Vec, bool> seen;
  Mat mm;
  for (auto& row : m) {
    Rat lead;
    for (const auto& x : row)
      if (x != 0) {
        lead = x < 0 ? -x : x;
        break;
      }
    Vec norm(row.size());
    for (size_t j = 0; j < row.size(); ++j) norm[j] = row[j] / lead;
    if (!seen.count(norm)) {
      seen[norm] = true;
      mm.push_back(norm);
    }
  }
  auto z = simplex_geq1(mm);
  if (!z) return std::nullopt;
  Vec x(sys.dim, 0);
  for (size_t j = 0; j < k; ++j) x = vadd(x, vscale((*z)[j], basis[j]));
  for (const auto& e : sys.eq)
    if (dot(e, x) != 0) throw Error("strict_feasible: witness check failed (eq)");
  for (const auto& r : sys.pos)
    if (dot(r, x) <= 0) throw Error("strict_feasible: witness check failed (pos)");
  return x;
}

} // namespace percox
