#include "percox/snf.hpp"

namespace percox {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Diagonalize m by row/column operations; col_ops (when given) accumulates the
// column transform V so that kernel vectors can be read off from V.
void diagonalize(ZMat& m, ZMat* col_ops) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  if (col_ops) {
    col_ops->assign(cols, std::vector<BigInt>(cols, 0));
    for (size_t i = 0; i < cols; ++i) (*col_ops)[i][i] = 1;
  }
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find minimal-magnitude nonzero pivot in the remaining block.
    size_t pr = rows, pc = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || babs(m[i][j]) < babs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    if (pc != t) {
      for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
      if (col_ops)
        for (size_t i = 0; i < cols; ++i) std::swap((*col_ops)[i][t], (*col_ops)[i][pc]);
    }
    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      BigInt q = m[i][t] / m[t][t];
      for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      BigInt q = m[t][j] / m[t][t];
      for (size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (col_ops)
        for (size_t i = 0; i < cols; ++i) (*col_ops)[i][j] -= q * (*col_ops)[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (clean) ++t;
  }
}

} // namespace

std::vector<BigInt> smith_invariants(ZMat m) {
  if (m.empty() || m[0].empty()) return {};
  diagonalize(m, nullptr);
  size_t r = std::min(m.size(), m[0].size());
  std::vector<BigInt> d;
  for (size_t i = 0; i < r; ++i)
    if (m[i][i] != 0) d.push_back(babs(m[i][i]));
  // Enforce the divisibility chain.
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      BigInt a = d[i], b = d[j];
      BigInt g = gcd(a, b);
      d[i] = g;
      d[j] = a / g * b;
    }
  return d;
}

std::vector<std::vector<BigInt>> integer_kernel(ZMat m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  ZMat v;
  diagonalize(m, &v);
  size_t r = std::min(m.size(), cols);
  std::vector<std::vector<BigInt>> basis;
  for (size_t j = 0; j < cols; ++j) {
    bool zero_col = j >= r || m[j][j] == 0;
    if (!zero_col) continue;
    std::vector<BigInt> k(cols);
    for (size_t i = 0; i < cols; ++i) k[i] = v[i][j];
    basis.push_back(k);
  }
  return basis;
}

bool in_row_lattice(ZMat m, const std::vector<BigInt>& v) {
  if (m.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  size_t cols = m[0].size();
  ZMat vt;
  diagonalize(m, &vt);
  // Row lattice of m equals row lattice of the diagonal form in transformed
  // coordinates: test v * V against the diagonal.
  std::vector<BigInt> z(cols, 0);
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < cols; ++i) z[j] += v[i] * vt[i][j];
  size_t r = std::min(m.size(), cols);
  for (size_t j = 0; j < cols; ++j) {
    if (j < r && m[j][j] != 0) {
      if (z[j] % m[j][j] != 0) return false;
    } else if (z[j] != 0) {
      return false;
    }
  }
  return true;
}

std::string AbelianGroup::str() const {
  std::string s;
  if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  if (s.empty()) s = "0";
  return s;
}

AbelianGroup complex_h1(int nobj, const std::vector<std::pair<int, int>>& arrows,
                        const std::vector<std::vector<long long>>& relations) {
  size_t ne = arrows.size();
  ZMat d1(nobj, std::vector<BigInt>(ne, 0));
  for (size_t e = 0; e < ne; ++e) {
    d1[arrows[e].second][e] += 1;
    d1[arrows[e].first][e] -= 1;
  }
  auto kernel = integer_kernel(d1);
  size_t k = kernel.size();
  // Coordinates of relation vectors w.r.t. the kernel lattice basis: solve the
  // rational system (solutions are integral since the basis is a lattice basis).
  Mat kb(ne, Vec(k, 0));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < ne; ++i) kb[i][j] = Rat(kernel[j][i]);
  ZMat coords;
  for (const auto& rel : relations) {
    Vec b(ne);
    for (size_t i = 0; i < ne; ++i) b[i] = Rat(rel[i]);
    auto sol = solve_linear(kb, b);
    if (!sol) throw Error("complex_h1: relation vector not in cycle lattice");
    std::vector<BigInt> row(k);
    for (size_t j = 0; j < k; ++j) {
      if (denominator((*sol)[j]) != 1)
        throw Error("complex_h1: non-integral kernel coordinates");
      row[j] = numerator((*sol)[j]);
    }
    coords.push_back(row);
  }
  AbelianGroup g;
  if (coords.empty()) {
    g.free_rank = (int)k;
    return g;
  }
  auto inv = smith_invariants(coords);
  g.free_rank = (int)k - (int)inv.size();
  for (const auto& d : inv)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

} // namespace percox
