#pragma once

#include "percox/common.hpp"

namespace percox {

// Finite Q-linear category with chosen hom bases and exact structure constants.
struct FinCat {
  int nobj = 0;
  std::vector<std::vector<int>> homdim; // [src][dst]
  // comp[{a,b,c}][j][i]: coefficients of g_j o f_i in hom(a,c), for
  // f_i in hom(a,b), g_j in hom(b,c). Absent key means a zero or empty product.
  std::map<std::array<int, 3>, std::vector<std::vector<Vec>>> comp;
  std::vector<Vec> identity_coeffs; // per object, in hom(x,x)

  Vec compose(int a, int b, int c, const Vec& g, const Vec& f) const;
  void validate() const;
};

struct GroupTable {
  int order = 1;
  std::vector<std::vector<int>> mult;
  std::vector<int> inv;
  static GroupTable trivial();
  static GroupTable cyclic(int k);
  static GroupTable klein();
  static GroupTable sym3();
};

// Strict action: object permutations plus matrices on hom spaces.
struct CatAction {
  GroupTable G;
  std::vector<Perm> obj_perm;                                 // per group element
  std::map<std::pair<int, std::pair<int, int>>, Mat> hom_map; // (g,(a,b))
  const Mat& map(int g, int a, int b) const;
  bool free_on_objects() const;
  void validate(const FinCat& v) const;
};

struct Algebra {
  int dim = 0;
  std::vector<std::vector<Vec>> mult; // mult[i][j] = e_i e_j coefficients
  Vec unit;
  Vec multiply(const Vec& x, const Vec& y) const;
  void validate() const;
};

struct TotalAlgebra {
  Algebra alg;
  std::vector<std::array<int, 3>> basis_label; // (src, dst, k)
  std::vector<Vec> object_idempotent;          // per object
};

TotalAlgebra total_algebra(const FinCat& v);

struct AlgAction {
  GroupTable G;
  std::vector<Mat> maps;
  void validate(const Algebra& a) const;
};

AlgAction action_on_total_algebra(const FinCat& v, const CatAction& act);

Algebra twisted_group_algebra(const Algebra& a, const AlgAction& act);
FinCat semidirect(const FinCat& v, const CatAction& act);

struct InvariantCategory {
  FinCat cat;
  std::vector<std::vector<int>> orbits; // objects of cat = orbits of V-objects
  // basis of Hom_{V^G}(O1,O2) as vectors in the flattened sum over (a,b) pairs
  std::map<std::pair<int, int>, std::vector<Vec>> inv_basis;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> pair_layout;
};

InvariantCategory invariant_category(const FinCat& v, const CatAction& act);
FinCat coinvariant_category(const FinCat& v, const CatAction& act); // free only

struct CornerReport {
  int dim_invariant = 0, dim_corner = 0;
  bool bijective = false, multiplicative = false;
  bool ok() const { return bijective && multiplicative && dim_invariant == dim_corner; }
};

CornerReport corner_iso_check(const FinCat& v, const CatAction& act);

struct FreeCompareReport {
  bool dims_match = false, structure_match = false;
  bool ok() const { return dims_match && structure_match; }
};

FreeCompareReport coinvariant_vs_invariant(const FinCat& v, const CatAction& act);

struct Module {
  int dim = 0;
  std::vector<Mat> act; // per algebra basis element
  void validate(const Algebra& a) const;
};

// Invariant subalgebra with its embedding (rows = basis vectors in A-coords).
struct SubAlgebra {
  Algebra alg;
  std::vector<Vec> basis;
};

SubAlgebra invariant_subalgebra(const Algebra& a, const AlgAction& act);

Module random_module(const Algebra& a, int free_rank, int generators, uint64_t seed);

struct DescentReport {
  int dim_n = 0, dim_induced = 0, dim_invariants = 0;
  bool unit_injective = false, unit_surjective = false;
  bool ok() const { return unit_injective && unit_surjective && dim_n == dim_invariants; }
};

DescentReport descent_unit_check(const Algebra& a, const AlgAction& act, const Module& n);

// R-exactness probe: invariants of a short exact sequence add up.
bool invariants_exact_on_regular_ses(const Algebra& a, const AlgAction& act,
                                     uint64_t seed);

struct CorpusItem {
  std::string name;
  FinCat cat;
  CatAction action;
};

std::vector<CorpusItem> default_corpus();

} // namespace percox
