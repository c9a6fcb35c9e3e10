#pragma once

#include <memory>
#include <mutex>

#include "percox/dic.hpp"

namespace percox {

using FormalSum = std::map<MorphWord, Rat>;

struct OrbitMorphism {
  int src_orbit = -1, dst_orbit = -1;
  // component at the representative pair (dom(src), w . dom(dst)), one entry
  // per double-coset representative w of W_src \ W / W_dst
  std::map<int, FormalSum> comps;
};

// Evaluation context: complex + orbit table + cached pair-transport data.
class PCox {
 public:
  const Complex& cx;
  OrbitTable ot;
  explicit PCox(const Complex& c) : cx(c), ot(build_orbit_table(c)) {}

  struct PairData {
    std::vector<int> coset_reps; // double-coset reps for (o1, o2)
    // For each face pair (q1, q2) in O1 x O2: (rep w, g) with g.(q1,q2) = (d1, w.d2).
    std::map<std::pair<int, int>, std::pair<int, int>> transport;
  };
  const PairData& pair_data(int o1, int o2) const;

  std::vector<int> stab_of_orbit(int o) const; // pointwise stabilizer of the dominant rep

 private:
  mutable std::map<std::pair<int, int>, PairData> cache;
  mutable std::unique_ptr<std::mutex> cache_mutex = std::make_unique<std::mutex>();
};

OrbitMorphism underline(const PCox& pc, const MorphWord& m);
OrbitMorphism identity_orbit_morphism(const PCox& pc, int orbit);

std::map<std::pair<int, int>, FormalSum> expand(const PCox& pc, const OrbitMorphism& om);
OrbitMorphism compress(const PCox& pc, int o1, int o2,
                       const std::map<std::pair<int, int>, FormalSum>& full);

// Composition b after a. Both the representative-level path and the
// expand/compose/recompress path are implemented; compare_paths checks them
// against each other on this call.
OrbitMorphism compose(const PCox& pc, const OrbitMorphism& b, const OrbitMorphism& a,
                      bool compare_paths = false);
OrbitMorphism om_add(const PCox& pc, const OrbitMorphism& x, const OrbitMorphism& y);

struct OrbitEqualResult {
  Verdict verdict = Verdict::Unknown;
  int components_checked = 0;
};

OrbitEqualResult orbit_equal(const PCox& pc, const OrbitMorphism& x,
                             const OrbitMorphism& y, const ProveBudget& budget = {});

struct LanglandsTerm {
  int w = -1; // double-coset representative
  ProtoLangReport proto;
};

struct LanglandsReport {
  int p1_mask = -1, p2_mask = -1, through_mask = -1;
  std::vector<int> coset_reps;
  bool bijection_ok = false;
  std::vector<LanglandsTerm> terms;
  OrbitEqualResult final_check;
  bool proved() const {
    if (!bijection_ok || final_check.verdict != Verdict::Proved) return false;
    for (auto& t : terms)
      if (t.proto.proof.verdict != Verdict::Proved) return false;
    return true;
  }
};

// Langlands formula for standard parabolic orbits p1, p2 through p3 (masks of
// simple subsets; through = full mask gives the g-object).
LanglandsReport verify_langlands(const PCox& pc, int p1_mask, int p2_mask,
                                 int through_mask, const ProveBudget& budget = {});

struct UlabReport {
  bool cond1 = false, cond2 = false, cond2p = false;
  bool applicable() const { return cond1 && (cond2 || cond2p); }
  OrbitEqualResult equality;
};

UlabReport check_lemma_ulab(const PCox& pc, const MorphWord& b, const MorphWord& a,
                            const ProveBudget& budget = {});

} // namespace percox
