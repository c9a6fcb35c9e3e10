#pragma once

#include <memory>
#include <mutex>

#include "percox/lp.hpp"
#include "percox/rootsys.hpp"

namespace percox {

struct Face {
  std::string signs; // one of '+','0','-' per positive root, frozen order
  int dim = 0;       // real dimension, lineality included
  Vec witness;       // exact rational point with these signs
  int flat_id = -1;
  int type_mask = 0; // I subset of simples: the W-orbit type
  int id = -1;
};

struct FlatData {
  std::vector<int> zero_set; // positive-root indices, implication-closed
  int dim = 0;
  std::vector<std::vector<int>> wall_classes; // non-vanishing roots grouped by trace
  int id = -1;
};

struct CollinearCert {
  Vec a, c, b; // a in F°, c in H°, b = a + c in G°
};

class Complex {
 public:
  RootSystem rs;
  WeylGroup W;
  std::vector<Face> faces;
  std::map<std::string, int> face_by_signs;
  std::vector<FlatData> flats;
  std::map<std::vector<int>, int> flat_by_zeroset;
  std::vector<std::vector<int>> act_tab;   // [w][face] -> face
  std::vector<int> dominant_face;          // per type mask
  int minimal_face = -1;
  int top_flat = -1;

  int num_masks() const { return 1 << rs.rank; }
  bool closure_leq(int g, int f) const; // g lies in the closure of f
  int act_face(int w, int f) const { return act_tab[w][f]; }
  int act_flat(int w, int flat) const;
  int tits(int f, int g) const;
  int tits_oracle(int f, int g) const;
  int face_of_point(const Vec& x) const;
  int face_of_point_eps(const Vec& a, const Vec& c) const; // face of a + eps*c
  Rat eps_for(const Vec& a, const Vec& c) const;           // explicit valid epsilon
  bool is_collinear(int f, int g, int h) const;
  std::optional<CollinearCert> collinear_cert(int f, int g, int h) const;
  std::vector<int> chambers_of_flat(int flat) const;
  std::vector<int> faces_in_flat(int flat) const; // all cells inside the flat
  std::vector<int> separating_wall_classes(int flat, int c1, int c2) const;
  std::vector<int> generic_gallery(int flat, int c_from, int c_to, uint64_t seed) const;
  long long zaslavsky_chambers(int flat) const; // Moebius-count oracle

 private:
  mutable std::map<std::array<int, 3>, bool> collinear_cache;
  mutable std::unique_ptr<std::mutex> collinear_mutex = std::make_unique<std::mutex>();
  bool collinear_decide(int f, int g, int h, CollinearCert* cert) const;
};

Complex build_complex(Series series, int rank, size_t max_order = 1152);

} // namespace percox
