#pragma once

#include "percox/stratpi1.hpp"
#include "percox/weylact.hpp"

namespace percox {

struct Letter {
  bool ind = true; // Ind descends in the closure order, Res ascends
  int src = -1, dst = -1;
  auto operator<=>(const Letter&) const = default;
};

struct MorphWord {
  int src = -1, dst = -1;
  std::vector<Letter> letters; // identity letters are normalized away
  auto operator<=>(const MorphWord&) const = default;
};

MorphWord make_word(const Complex& cx, int src, std::vector<Letter> letters);
MorphWord word_concat(const MorphWord& first, const MorphWord& then);
MorphWord act_word(const Complex& cx, int w, const MorphWord& m);

// tau through the default common lower face (the minimal face); single-letter
// when the faces are comparable, empty when equal.
MorphWord tau(const Complex& cx, int f, int g);
MorphWord tau_via(const Complex& cx, int f, int g, int q);

enum class RelKind { R2a, R2b, R2c, R2d, R2e };

std::vector<std::pair<MorphWord, MorphWord>> relation_instances(const Complex& cx,
                                                                RelKind kind);

// tau-chain prover: contraction moves are 2b/2c-derived fusions plus 2d drops.
struct ChainMove {
  std::string kind; // "fuse" | "2d" | "ins-fuse" | "ins-2d"
  int position = 0; // index of the dropped/inserted middle vertex
  std::array<int, 3> faces{-1, -1, -1};
  bool on_lhs = true;
};

struct ProofResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<ChainMove> lhs_moves, rhs_moves; // both end at the common chain
  std::vector<int> common_chain;
};

struct ProveBudget {
  int max_len = 24;
  size_t max_states = 1000000;
  int max_insertions = 2;
};

std::vector<int> word_chain(const MorphWord& m);
ProofResult prove_equal(const Complex& cx, const MorphWord& lhs, const MorphWord& rhs,
                        const ProveBudget& budget = {});
bool replay_proof(const Complex& cx, const MorphWord& lhs, const MorphWord& rhs,
                  const ProofResult& proof);

struct ProtoLangReport {
  int p1 = -1, p = -1, p2 = -1;
  int m12 = -1, m21 = -1;
  MorphWord lhs, rhs;
  std::vector<std::array<int, 3>> collinear_triples; // the 4-chain certificates
  std::vector<CollinearCert> certs;
  ProofResult proof;
};

ProtoLangReport verify_proto_langlands(const Complex& cx, int p1, int p, int p2,
                                       const ProveBudget& budget = {});

// Linear representations of Q at desk scale.
struct QRepresentation {
  std::map<int, int> dims;           // per face
  std::map<Letter, Mat> mats;        // per generator letter
};

QRepresentation trivial_rep(const Complex& cx, int d);
Mat eval_word(const QRepresentation& rep, const MorphWord& m);
bool validate_rep(const Complex& cx, const QRepresentation& rep, int sample,
                  uint64_t seed);

} // namespace percox
