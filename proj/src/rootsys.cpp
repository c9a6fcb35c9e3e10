#include "percox/rootsys.hpp"

#include <numeric>

namespace percox {

Series parse_series(const std::string& s) {
  if (s == "A") return Series::A;
  if (s == "B") return Series::B;
  if (s == "C") return Series::C;
  if (s == "D") return Series::D;
  if (s == "G2" || s == "G") return Series::G2;
  if (s == "F4" || s == "F") return Series::F4;
  throw UnsupportedType("unsupported series: " + s);
}

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::G2: return "G2";
    case Series::F4: return "F4";
  }
  return "?";
}

namespace {

Vec unit(int n, int i, Rat c = 1) {
  Vec v(n, 0);
  v[i] = c;
  return v;
}

} // namespace

RootSystem build_root_system(Series series, int rank) {
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  std::vector<Vec> pos, simples;
  int n = 0;
  switch (series) {
    case Series::A: {
      if (rank < 1) throw UnsupportedType("A_r needs r >= 1");
      n = rank + 1;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pos.push_back(vsub(unit(n, i), unit(n, j)));
      for (int i = 0; i < rank; ++i) simples.push_back(vsub(unit(n, i), unit(n, i + 1)));
      break;
    }
    case Series::B: {
      if (rank < 2) throw UnsupportedType("B_n needs n >= 2");
      n = rank;
      for (int i = 0; i < n; ++i) pos.push_back(unit(n, i));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(vsub(unit(n, i), unit(n, j)));
          pos.push_back(vadd(unit(n, i), unit(n, j)));
        }
      for (int i = 0; i + 1 < n; ++i) simples.push_back(vsub(unit(n, i), unit(n, i + 1)));
      simples.push_back(unit(n, n - 1));
      break;
    }
    case Series::C: {
      if (rank < 2) throw UnsupportedType("C_n needs n >= 2");
      n = rank;
      for (int i = 0; i < n; ++i) pos.push_back(unit(n, i, 2));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(vsub(unit(n, i), unit(n, j)));
          pos.push_back(vadd(unit(n, i), unit(n, j)));
        }
      for (int i = 0; i + 1 < n; ++i) simples.push_back(vsub(unit(n, i), unit(n, i + 1)));
      simples.push_back(unit(n, n - 1, 2));
      break;
    }
    case Series::D: {
      if (rank < 3) throw UnsupportedType("D_n needs n >= 3");
      n = rank;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          pos.push_back(vsub(unit(n, i), unit(n, j)));
          pos.push_back(vadd(unit(n, i), unit(n, j)));
        }
      for (int i = 0; i + 1 < n; ++i) simples.push_back(vsub(unit(n, i), unit(n, i + 1)));
      simples.push_back(vadd(unit(n, n - 2), unit(n, n - 1)));
      break;
    }
    case Series::G2: {
      if (rank != 2) throw UnsupportedType("G2 has rank 2");
      n = 3;
      Vec a1 = {1, -1, 0}, a2 = {-2, 1, 1};
      simples = {a1, a2};
      pos = {a1, a2, vadd(a1, a2), vadd(vscale(2, a1), a2), vadd(vscale(3, a1), a2),
             vadd(vscale(3, a1), vscale(2, a2))};
      break;
    }
    case Series::F4: {
      if (rank != 4) throw UnsupportedType("F4 has rank 4");
      n = 4;
      for (int i = 0; i < 4; ++i) pos.push_back(unit(4, i));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          pos.push_back(vsub(unit(4, i), unit(4, j)));
          pos.push_back(vadd(unit(4, i), unit(4, j)));
        }
      Rat h(1, 2);
      for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
          for (int s3 = 0; s3 < 2; ++s3)
            pos.push_back({h, s1 ? -h : h, s2 ? -h : h, s3 ? -h : h});
      simples = {vsub(unit(4, 1), unit(4, 2)), vsub(unit(4, 2), unit(4, 3)), unit(4, 3),
                 Vec{h, -h, -h, -h}};
      break;
    }
  }
  rs.ambient_dim = n;

  // Coefficients over simples; used for the frozen (height, lex) order.
  Mat smat(n, Vec(simples.size()));
  for (size_t j = 0; j < simples.size(); ++j)
    for (int i = 0; i < n; ++i) smat[i][j] = simples[j][i];
  struct Entry {
    Vec root;
    Vec coeffs;
    int height;
  };
  std::vector<Entry> entries;
  for (auto& r : pos) {
    auto c = solve_linear(smat, r);
    if (!c) throw Error("positive root outside simple span");
    Rat h = 0;
    for (auto& x : *c) {
      if (x < 0 || denominator(x) != 1) throw Error("bad simple-root coefficients");
      h += x;
    }
    entries.push_back({r, *c, (int)(long long)numerator(h)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.root < b.root;
  });
  rs.num_positive = (int)entries.size();
  for (auto& e : entries) {
    rs.roots.push_back(e.root);
    rs.simple_coeffs.push_back(e.coeffs);
    rs.height.push_back(e.height);
  }
  for (auto& e : entries) rs.roots.push_back(vscale(-1, e.root));
  for (auto& r : rs.roots) rs.coroots.push_back(vscale(Rat(2) / dot(r, r), r));
  for (auto& s : simples) {
    int idx = -1;
    for (int i = 0; i < rs.num_positive; ++i)
      if (rs.roots[i] == s) idx = i;
    if (idx < 0) throw Error("simple root not positive");
    rs.simple_idx.push_back(idx);
  }
  // Lineality: dimension of the common kernel of all roots.
  Mat all(rs.num_positive, Vec(n));
  for (int i = 0; i < rs.num_positive; ++i) all[i] = rs.roots[i];
  rs.lineality_dim = n - rank_of(all);
  return rs;
}

namespace {

Perm root_perm_of_matrix(const RootSystem& rs, const Mat& m) {
  std::map<Vec, int> idx;
  for (size_t i = 0; i < rs.roots.size(); ++i) idx[rs.roots[i]] = (int)i;
  Perm p(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    auto it = idx.find(mat_vec(m, rs.roots[i]));
    if (it == idx.end()) throw Error("matrix does not permute the root set");
    p[i] = it->second;
  }
  return p;
}

} // namespace

WeylElement reflection(const RootSystem& rs, int root_idx) {
  const Vec& a = rs.roots[root_idx];
  Rat aa = dot(a, a);
  Mat m = mat_identity(rs.ambient_dim);
  for (int i = 0; i < rs.ambient_dim; ++i)
    for (int j = 0; j < rs.ambient_dim; ++j) m[i][j] -= 2 * a[i] * a[j] / aa;
  return {m, root_perm_of_matrix(rs, m)};
}

WeylElement weyl_mult(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  (void)rs;
  return {mat_mul(a.matrix, b.matrix), perm_compose(a.root_perm, b.root_perm)};
}

WeylGroup weyl_group(const RootSystem& rs, size_t max_order) {
  WeylGroup g;
  g.rs = rs;
  std::vector<WeylElement> gens;
  for (int s : rs.simple_idx) gens.push_back(reflection(rs, s));
  WeylElement id{mat_identity(rs.ambient_dim), perm_identity((int)rs.roots.size())};
  std::map<Perm, int> seen;
  std::vector<WeylElement> elems{id};
  seen[id.root_perm] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    WeylElement cur = elems[head];
    for (auto& s : gens) {
      WeylElement nxt = weyl_mult(rs, s, cur);
      if (!seen.count(nxt.root_perm)) {
        if (elems.size() >= max_order)
          throw Error("weyl_group: order exceeds the configured bound");
        seen[nxt.root_perm] = 1;
        elems.push_back(nxt);
      }
    }
  }
  int P = rs.num_positive;
  auto len = [&](const WeylElement& w) {
    int l = 0;
    for (int i = 0; i < P; ++i)
      if (w.root_perm[i] >= P) ++l;
    return l;
  };
  std::sort(elems.begin(), elems.end(), [&](const WeylElement& a, const WeylElement& b) {
    int la = len(a), lb = len(b);
    if (la != lb) return la < lb;
    return a.root_perm < b.root_perm;
  });
  g.elems = elems;
  for (size_t i = 0; i < elems.size(); ++i) g.index[elems[i].root_perm] = (int)i;
  g.identity = g.index.at(id.root_perm);
  for (int s : rs.simple_idx) g.simple_refl.push_back(g.index.at(reflection(rs, s).root_perm));
  g.pos_act.resize(elems.size());
  for (size_t w = 0; w < elems.size(); ++w) {
    g.pos_act[w].resize(P);
    for (int i = 0; i < P; ++i) g.pos_act[w][i] = elems[w].root_perm[i];
  }
  return g;
}

int WeylGroup::mult(int a, int b) const {
  return index.at(perm_compose(elems[a].root_perm, elems[b].root_perm));
}

int WeylGroup::inv(int a) const { return index.at(perm_inverse(elems[a].root_perm)); }

int WeylGroup::length(int a) const {
  int P = rs.num_positive, l = 0;
  for (int i = 0; i < P; ++i)
    if (elems[a].root_perm[i] >= P) ++l;
  return l;
}

std::vector<int> WeylGroup::reduced_word(int a) const {
  std::vector<int> word;
  int w = a;
  while (w != identity) {
    int winv = inv(w);
    bool moved = false;
    for (size_t i = 0; i < simple_refl.size(); ++i) {
      // Left descent: l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0.
      if (elems[winv].root_perm[rs.simple_idx[i]] >= rs.num_positive) {
        word.push_back((int)i);
        w = mult(simple_refl[i], w);
        moved = true;
        break;
      }
    }
    if (!moved) throw Error("reduced_word: no descent found");
  }
  return word;
}

int WeylGroup::reflection_index(int pos_root) const {
  return index.at(reflection(rs, pos_root).root_perm);
}

std::vector<int> WeylGroup::subgroup_closure(std::vector<int> gens) const {
  std::vector<int> elems_out{identity};
  std::map<int, bool> seen{{identity, true}};
  for (size_t head = 0; head < elems_out.size(); ++head)
    for (int s : gens) {
      int nxt = mult(s, elems_out[head]);
      if (!seen.count(nxt)) {
        seen[nxt] = true;
        elems_out.push_back(nxt);
      }
    }
  std::sort(elems_out.begin(), elems_out.end());
  return elems_out;
}

std::vector<int> WeylGroup::parabolic_subgroup(const std::vector<int>& simple_set) const {
  std::vector<int> gens;
  for (int i : simple_set) gens.push_back(simple_refl[i]);
  return subgroup_closure(gens);
}

int WeylGroup::longest_element() const {
  int best = identity, bl = 0;
  for (int i = 0; i < size(); ++i)
    if (length(i) > bl) {
      bl = length(i);
      best = i;
    }
  return best;
}

} // namespace percox
