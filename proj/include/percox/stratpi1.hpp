#pragma once

#include "percox/snf.hpp"
#include "percox/weylact.hpp"

namespace percox {

struct Generator {
  int src = -1, dst = -1; // object indices
  int wall = -1;          // wall-class index within the flat (of a representative)
};

struct Relation {
  std::vector<int> lhs, rhs; // generator id sequences, equal endpoints
};

struct Presentation {
  int flat = -1;
  bool quotient = false;
  std::vector<int> objects; // representative face per object
  std::vector<std::string> object_labels;
  std::vector<Generator> gens;
  std::vector<Relation> relations;                 // canonical, deduplicated
  std::vector<Relation> rewrite_rules;             // all ordered 2s-gon instances
  std::vector<std::vector<long long>> ab_vectors;  // relation lattice, all orientations
  std::vector<int> obj_of_face;                    // face id -> object index or -1
};

Presentation stratum_presentation(const Complex& cx, int flat);
Presentation coinvariant_presentation(const Complex& cx, int flat);

struct PresentationInvariants {
  int object_count = 0;
  int generator_count = 0;
  int relation_count = 0;
  AbelianGroup vertex_abelianization;
};

PresentationInvariants presentation_invariants(const Presentation& p);

// Abelianization of an abstract presentation given by arrows between objects
// and relator exponent vectors (oracle side of presentation comparisons).
AbelianGroup presentation_h1(int nobj, const std::vector<std::pair<int, int>>& arrows,
                             const std::vector<std::vector<long long>>& relators);

enum class Verdict { Proved, Refuted, Unknown };

struct RewriteMove {
  int relation = -1; // index into all ordered instances
  int position = 0;
  bool forward = true;
};

struct WordResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<RewriteMove> lhs_moves, rhs_moves;
};

using GenWord = std::vector<int>;

struct WordBudget {
  int max_moves = 8;
  size_t max_states = 100000;
};

// Words live in the full (unquotiented) stratum presentation of the flat.
WordResult positive_words_equal(const Complex& cx, const Presentation& p, int flat,
                                const GenWord& w1, const GenWord& w2,
                                const WordBudget& budget);

GenWord gallery_word(const Presentation& p, const std::vector<int>& gallery_faces);

int word_src(const Presentation& p, const GenWord& w);
int word_dst(const Presentation& p, const GenWord& w);

} // namespace percox
