#pragma once

#include "percox/common.hpp"

namespace percox {

enum class Series { A, B, C, D, G2, F4 };

Series parse_series(const std::string& s);
std::string series_name(Series s);

struct RootSystem {
  Series series;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Vec> roots; // positives (frozen order) followed by their negatives
  int num_positive = 0;
  std::vector<int> simple_idx; // positions of simple roots among the positives
  std::vector<Vec> coroots;    // one per entry of roots
  int lineality_dim = 0;
  std::vector<Vec> simple_coeffs; // per positive root, coefficients over the simples
  std::vector<int> height;        // per positive root

  int negative_of(int i) const {
    return i < num_positive ? i + num_positive : i - num_positive;
  }
};

// Standard rational realizations: A_r in R^{r+1}, B/C/D/F4 orthonormal,
// G2 in the sum-zero plane of R^3.
RootSystem build_root_system(Series series, int rank);

struct WeylElement {
  Mat matrix;
  Perm root_perm; // over all 2P roots
  const Perm& canonical_key() const { return root_perm; }
};

WeylElement reflection(const RootSystem& rs, int root_idx);
WeylElement weyl_mult(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

struct WeylGroup {
  RootSystem rs;
  std::vector<WeylElement> elems; // sorted by (length, root_perm)
  std::map<Perm, int> index;
  int identity = 0;
  std::vector<int> simple_refl;            // per simple
  std::vector<std::vector<int>> pos_act;   // [w][pos root] -> root index (may be negative half)

  int size() const { return (int)elems.size(); }
  int mult(int a, int b) const; // (a b)(x) = a(b(x))
  int inv(int a) const;
  int length(int a) const;
  std::vector<int> reduced_word(int a) const;
  int reflection_index(int pos_root) const;
  std::vector<int> subgroup_closure(std::vector<int> gens) const; // sorted
  std::vector<int> parabolic_subgroup(const std::vector<int>& simple_set) const;
  int parabolic_from_mask(int mask_size_placeholder) const = delete;
  int longest_element() const;
};

WeylGroup weyl_group(const RootSystem& rs, size_t max_order = 1152);

} // namespace percox
