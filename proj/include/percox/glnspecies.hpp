#pragma once

#include "percox/pcox.hpp"

namespace percox {

// Ordered set partition of {1..n}: disjoint nonempty blocks, each sorted.
using OSP = std::vector<std::vector<int>>;

std::vector<OSP> all_osps(int n);
OSP osp_normalize(OSP p); // sort within blocks, drop empty blocks
bool osp_valid(const OSP& p, int n);
OSP perm_apply_osp(const Perm& sigma, const OSP& p); // 0-based sigma on 1-based entries

// The GL_n dictionary lives on the A_{n-1} complex in R^n.
struct GlnCtx {
  int n;
  Complex cx;
  std::map<Perm, int> weyl_of_perm; // coordinate permutation -> Weyl index
  Presentation top_pres;            // full-space stratum presentation
};

GlnCtx build_gln(int n);

int face_of(const GlnCtx& g, const OSP& p);
OSP partition_of(const GlnCtx& g, int face);

OSP tits_lex(const OSP& I, const OSP& J); // K_{ij} = I_i n J_j, lexicographic
OSP osp_concat(const OSP& I, int n, const OSP& J);
Perm sigma_shuffle(int n, int m);

// Tensor of a Q_n word with an object on the right/left (Ind-tensor rule).
MorphWord tensor_word_right(const GlnCtx& gn, const GlnCtx& gnm, const MorphWord& w,
                            const OSP& J);
MorphWord tensor_word_left(const GlnCtx& gm, const GlnCtx& gnm, const OSP& I,
                           const MorphWord& w);

struct SdPair {
  MorphWord xi; // xi : g(src) -> dst
  Perm g;
  auto operator<=>(const SdPair&) const = default;
};

SdPair sd_compose(const GlnCtx& g, const SdPair& f, const SdPair& h); // f after h

// Braiding R_{p_I, p_J} inside Q_{n+m} x S_{n+m}: block sizes read off I and J.
SdPair braiding(const GlnCtx& gnm, const OSP& I, const OSP& J);

struct SquareReport {
  bool perms_equal = false;
  Verdict words = Verdict::Unknown;
  bool ok() const { return perms_equal && words == Verdict::Proved; }
};

// Lazily built contexts Q_2 .. Q_N for the monoidal checks.
struct GlnTower {
  std::map<int, GlnCtx> ctxs;
  const GlnCtx& at(int n);
};

// Naturality of R against a generator f (a word in Q_{gn.n}) tensored with J.
SquareReport braiding_naturality(GlnTower& t, const MorphWord& f, int nf, const OSP& J,
                                 bool f_on_left);
// Hexagon triangles at objects (I, J, K): R_{I(x)J,K} and R_{I,J(x)K}.
SquareReport hexagon1(GlnTower& t, const OSP& I, const OSP& J, const OSP& K);
SquareReport hexagon2(GlnTower& t, const OSP& I, const OSP& J, const OSP& K);

// Double crossing at (1,1) inside Q_2: certified non-identity by wall counts.
bool double_crossing_nonidentity(const GlnCtx& g2);

struct ExchangeReport {
  int n_matrices = 0, n_cosets = 0, n_pair_orbits = 0;
  bool bijections_ok = false;
};

ExchangeReport exchange_bijection(const GlnCtx& g, int p1, int p2, int q1, int q2);

struct SB3Report {
  OSP K;
  MorphWord lhs, rhs;
  ProofResult proof;
  bool k_matches_tits = false;
  bool proved() const { return k_matches_tits && proof.verdict == Verdict::Proved; }
};

SB3Report verify_SB3(const GlnCtx& g, std::vector<int> J1, std::vector<int> J2,
                     std::vector<int> L1, std::vector<int> L2);

GenWord lambda_section(const GlnCtx& g, const Perm& s);

struct LambdaReport {
  bool additive = false;
  Verdict verdict = Verdict::Unknown;
};

LambdaReport verify_lambda_partial_hom(const GlnCtx& g, const Perm& s1, const Perm& s2);

struct StrataTable {
  int partitions = 0;  // p(n)
  int flat_orbits = 0; // W-orbits of flats of A_{n-1}
  bool match() const { return partitions == flat_orbits; }
};

StrataTable strata_partition_table(int n);

} // namespace percox
