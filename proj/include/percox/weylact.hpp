#pragma once

#include "percox/arrangement.hpp"

namespace percox {

struct OrbitTable {
  std::vector<int> face_orbit;      // per face
  std::vector<int> orbit_dominant;  // face id per face orbit
  std::vector<int> orbit_type;      // type mask per face orbit
  std::vector<int> flat_orbit;      // per flat
  std::vector<int> flat_orbit_rep;  // flat id per flat orbit
  std::vector<int> assoc;           // per type mask: flat orbit id (the map on 2^Pi)
  int n_face_orbits = 0;
  int n_flat_orbits = 0;
};

OrbitTable build_orbit_table(const Complex& cx);

// Pointwise stabilizer of a face (fixes the face as a cell; acts trivially on it).
std::vector<int> face_stabilizer(const Complex& cx, int face);
std::vector<int> pair_stabilizer(const Complex& cx, int f1, int f2);

struct LeviGroupData {
  int flat = -1;
  std::vector<int> stab;          // Stab_W(l), sorted element indices
  std::vector<int> levi_weyl;     // W_l
  std::vector<int> quotient_reps; // coset reps for W(l) = Stab/W_l, min (length,key)
};

LeviGroupData levi_group_data(const Complex& cx, int flat);

// Structure probe of the quotient W(l) = Stab/W_l.
struct QuotientGroup {
  int order = 0;
  bool abelian = false;
  std::vector<int> element_orders; // sorted
  bool is_trivial() const { return order == 1; }
  bool is_z2() const { return order == 2; }
  bool is_elementary_2(int k) const;
};

QuotientGroup quotient_group_structure(const Complex& cx, const LeviGroupData& lg);

// Double cosets A\W/B: deterministic representatives, min (length, key).
std::vector<int> double_cosets(const WeylGroup& W, const std::vector<int>& A,
                               const std::vector<int>& B);

struct PairOrbitReport {
  int n_pair_orbits = 0;
  std::vector<int> coset_reps;
  bool bijection_ok = false;
};

// Explicit bijection W\(O1 x O2) <-> W1\W/W2 (orbits of face pairs).
PairOrbitReport orbit_pairs_vs_double_cosets(const Complex& cx, const OrbitTable& ot,
                                             int orbit1, int orbit2);

} // namespace percox
