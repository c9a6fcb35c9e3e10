#include "percox/dic.hpp"

#include "percox/stratpi1.hpp"

#include <deque>
#include <set>

namespace percox {

MorphWord make_word(const Complex& cx, int src, std::vector<Letter> letters) {
  MorphWord m;
  m.src = src;
  int cur = src;
  for (auto& l : letters) {
    if (l.src != cur) throw CompositionMismatch("make_word: letters do not compose");
    if (l.src == l.dst) throw PreconditionFailure("make_word: identity letter");
    if (l.ind) {
      if (!cx.closure_leq(l.dst, l.src))
        throw PreconditionFailure("make_word: Ind must strictly descend");
    } else {
      if (!cx.closure_leq(l.src, l.dst))
        throw PreconditionFailure("make_word: Res must strictly ascend");
    }
    cur = l.dst;
  }
  m.dst = cur;
  m.letters = std::move(letters);
  return m;
}

MorphWord word_concat(const MorphWord& first, const MorphWord& then) {
  if (first.dst != then.src) throw CompositionMismatch("word_concat: endpoint mismatch");
  MorphWord m;
  m.src = first.src;
  m.dst = then.dst;
  m.letters = first.letters;
  m.letters.insert(m.letters.end(), then.letters.begin(), then.letters.end());
  return m;
}

MorphWord act_word(const Complex& cx, int w, const MorphWord& m) {
  MorphWord out;
  out.src = cx.act_face(w, m.src);
  out.dst = cx.act_face(w, m.dst);
  for (auto& l : m.letters)
    out.letters.push_back(Letter{l.ind, cx.act_face(w, l.src), cx.act_face(w, l.dst)});
  return out;
}

MorphWord tau_via(const Complex& cx, int f, int g, int q) {
  if (!cx.closure_leq(q, f) || !cx.closure_leq(q, g))
    throw PreconditionFailure("tau_via: q must be a common lower face");
  std::vector<Letter> letters;
  if (f != q) letters.push_back(Letter{true, f, q});
  if (q != g) letters.push_back(Letter{false, q, g});
  return make_word(cx, f, letters);
}

MorphWord tau(const Complex& cx, int f, int g) {
  if (f == g) return MorphWord{f, g, {}};
  if (cx.closure_leq(g, f)) return make_word(cx, f, {Letter{true, f, g}});
  if (cx.closure_leq(f, g)) return make_word(cx, f, {Letter{false, f, g}});
  return tau_via(cx, f, g, cx.minimal_face);
}

std::vector<std::pair<MorphWord, MorphWord>> relation_instances(const Complex& cx,
                                                                RelKind kind) {
  std::vector<std::pair<MorphWord, MorphWord>> out;
  int n = (int)cx.faces.size();
  switch (kind) {
    case RelKind::R2a:
      break; // eager normalization: no stored instances
    case RelKind::R2b: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (y == x || !cx.closure_leq(y, x)) continue;
          for (int z = 0; z < n; ++z) {
            if (z == y || !cx.closure_leq(z, y)) continue;
            out.push_back({make_word(cx, x, {Letter{true, x, y}, Letter{true, y, z}}),
                           make_word(cx, x, {Letter{true, x, z}})});
            out.push_back({make_word(cx, z, {Letter{false, z, y}, Letter{false, y, x}}),
                           make_word(cx, z, {Letter{false, z, x}})});
          }
        }
      break;
    }
    case RelKind::R2c: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (y == x || !cx.closure_leq(y, x)) continue;
          out.push_back({make_word(cx, x, {Letter{true, x, y}, Letter{false, y, x}}),
                         MorphWord{x, x, {}}});
        }
      break;
    }
    case RelKind::R2d: {
      for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
          for (int h = 0; h < n; ++h) {
            if (!cx.is_collinear(f, g, h)) continue;
            out.push_back({tau(cx, f, h), word_concat(tau(cx, f, g), tau(cx, g, h))});
          }
      break;
    }
    case RelKind::R2e: {
      for (auto& fl : cx.flats) {
        auto chams = cx.chambers_of_flat(fl.id);
        for (auto& cell : cx.faces) {
          if (cell.flat_id == fl.id || cell.dim != fl.dim - 1) continue;
          bool inflat = true;
          for (int i : fl.zero_set)
            if (cell.signs[i] != '0') inflat = false;
          if (!inflat) continue;
          std::vector<int> cof;
          for (int c : chams)
            if (cx.closure_leq(cell.id, c)) cof.push_back(c);
          if (cof.size() == 2)
            out.push_back({tau(cx, cof[0], cof[1]), tau(cx, cof[1], cof[0])});
        }
      }
      break;
    }
  }
  return out;
}

std::vector<int> word_chain(const MorphWord& m) {
  std::vector<int> chain{m.src};
  for (auto& l : m.letters)
    if (l.dst != chain.back()) chain.push_back(l.dst);
  return chain;
}

namespace {

struct Node {
  std::vector<int> parent;
  ChainMove move;
  int insertions = 0;
};

using ChainMapT = std::map<std::vector<int>, Node>;

std::vector<ChainMove> backtrack(const ChainMapT& visited, std::vector<int> chain) {
  std::vector<ChainMove> moves;
  for (;;) {
    const Node& nd = visited.at(chain);
    if (nd.parent.empty()) break;
    moves.push_back(nd.move);
    chain = nd.parent;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

} // namespace

ProofResult prove_equal(const Complex& cx, const MorphWord& lhs, const MorphWord& rhs,
                        const ProveBudget& budget) {
  if (lhs.src != rhs.src || lhs.dst != rhs.dst)
    throw EndpointMismatch("prove_equal: src/dst mismatch");
  ProofResult res;
  auto c1 = word_chain(lhs), c2 = word_chain(rhs);
  if (c1 == c2) {
    res.verdict = Verdict::Proved;
    res.common_chain = c1;
    return res;
  }
  std::set<int> cand_set;
  for (int f : c1) cand_set.insert(f);
  for (int f : c2) cand_set.insert(f);
  cand_set.insert(cx.minimal_face);
  for (int f : c1)
    for (int g : c2) {
      cand_set.insert(cx.tits(f, g));
      cand_set.insert(cx.tits(g, f));
    }
  std::vector<int> cands(cand_set.begin(), cand_set.end());

  ChainMapT vis[2];
  std::deque<std::vector<int>> queue[2];
  vis[0][c1] = Node{};
  vis[1][c2] = Node{};
  queue[0].push_back(c1);
  queue[1].push_back(c2);
  size_t states = 2;
  std::vector<int> meet;
  bool found = false;
  auto try_add = [&](int side, const std::vector<int>& parent, std::vector<int> chain,
                     ChainMove mv) {
    if ((int)chain.size() > budget.max_len) return false;
    if (vis[side].count(chain)) return false;
    Node nd;
    nd.parent = parent;
    mv.on_lhs = side == 0;
    nd.move = mv;
    nd.insertions =
        vis[side][parent].insertions + (mv.kind.substr(0, 3) == "ins" ? 1 : 0);
    vis[side][chain] = nd;
    queue[side].push_back(chain);
    ++states;
    if (vis[1 - side].count(chain)) {
      meet = chain;
      return true;
    }
    return false;
  };
  while ((!queue[0].empty() || !queue[1].empty()) && states < budget.max_states && !found) {
    int side =
        !queue[0].empty() && (queue[1].empty() || queue[0].size() <= queue[1].size()) ? 0
                                                                                      : 1;
    auto chain = queue[side].front();
    queue[side].pop_front();
    int ins_used = vis[side].at(chain).insertions;
    int len = (int)chain.size();
    for (int i = 1; i + 1 < len && !found; ++i) {
      int a = chain[i - 1], b = chain[i], c = chain[i + 1];
      std::vector<int> next = chain;
      next.erase(next.begin() + i);
      if (i < (int)next.size() && next[i - 1] == next[i]) next.erase(next.begin() + i);
      if (cx.closure_leq(b, a) || cx.closure_leq(b, c)) {
        found = try_add(side, chain, next, ChainMove{"fuse", i, {a, b, c}, true});
      } else if (cx.is_collinear(a, b, c)) {
        found = try_add(side, chain, next, ChainMove{"2d", i, {a, b, c}, true});
      }
    }
    if (found) break;
    if (ins_used < budget.max_insertions) {
      for (int i = 1; i < len && !found; ++i) {
        int a = chain[i - 1], c = chain[i];
        for (int x : cands) {
          if (x == a || x == c) continue;
          std::string kind;
          if (cx.closure_leq(x, a) || cx.closure_leq(x, c))
            kind = "ins-fuse";
          else if (cx.is_collinear(a, x, c))
            kind = "ins-2d";
          else
            continue;
          std::vector<int> next = chain;
          next.insert(next.begin() + i, x);
          found = try_add(side, chain, next, ChainMove{kind, i, {a, x, c}, true});
          if (found) break;
        }
      }
    }
  }
  if (!found) {
    res.verdict = Verdict::Unknown;
    return res;
  }
  res.verdict = Verdict::Proved;
  res.common_chain = meet;
  res.lhs_moves = backtrack(vis[0], meet);
  res.rhs_moves = backtrack(vis[1], meet);
  return res;
}

namespace {

std::optional<std::vector<int>> apply_moves(const Complex& cx, std::vector<int> chain,
                                            const std::vector<ChainMove>& moves) {
  for (auto& mv : moves) {
    bool insert = mv.kind.substr(0, 3) == "ins";
    int i = mv.position;
    if (insert) {
      if (i < 1 || i >= (int)chain.size()) return std::nullopt;
      int a = chain[i - 1], c = chain[i], x = mv.faces[1];
      bool ok = mv.kind == "ins-fuse" ? (cx.closure_leq(x, a) || cx.closure_leq(x, c))
                                      : cx.is_collinear(a, x, c);
      if (!ok) return std::nullopt;
      chain.insert(chain.begin() + i, x);
    } else {
      if (i < 1 || i + 1 >= (int)chain.size()) return std::nullopt;
      int a = chain[i - 1], b = chain[i], c = chain[i + 1];
      bool ok = mv.kind == "fuse" ? (cx.closure_leq(b, a) || cx.closure_leq(b, c))
                                  : cx.is_collinear(a, b, c);
      if (!ok) return std::nullopt;
      chain.erase(chain.begin() + i);
      if (i < (int)chain.size() && chain[i - 1] == chain[i]) chain.erase(chain.begin() + i);
    }
  }
  return chain;
}

} // namespace

bool replay_proof(const Complex& cx, const MorphWord& lhs, const MorphWord& rhs,
                  const ProofResult& proof) {
  if (proof.verdict != Verdict::Proved) return false;
  auto a = apply_moves(cx, word_chain(lhs), proof.lhs_moves);
  auto b = apply_moves(cx, word_chain(rhs), proof.rhs_moves);
  return a && b && *a == *b && *a == proof.common_chain;
}

ProtoLangReport verify_proto_langlands(const Complex& cx, int p1, int p, int p2,
                                       const ProveBudget& budget) {
  if (!cx.closure_leq(p, p1) || !cx.closure_leq(p, p2))
    throw PreconditionFailure("proto-langlands: need p <= p1 and p <= p2");
  ProtoLangReport rep;
  rep.p1 = p1;
  rep.p = p;
  rep.p2 = p2;
  rep.m12 = cx.tits(p1, p2);
  rep.m21 = cx.tits(p2, p1);
  std::vector<Letter> lhs;
  if (p != p1) lhs.push_back(Letter{true, p1, p});
  if (p != p2) lhs.push_back(Letter{false, p, p2});
  rep.lhs = make_word(cx, p1, lhs);
  MorphWord rhs{p1, p1, {}};
  if (rep.m12 != p1) rhs = word_concat(rhs, make_word(cx, p1, {Letter{false, p1, rep.m12}}));
  rhs = word_concat(rhs, tau(cx, rep.m12, rep.m21));
  if (rep.m21 != p2)
    rhs = word_concat(rhs, make_word(cx, rep.m21, {Letter{true, rep.m21, p2}}));
  rep.rhs = rhs;
  rep.collinear_triples = {{rep.p1, rep.m12, rep.m21},
                           {rep.p1, rep.m12, rep.p2},
                           {rep.p1, rep.m21, rep.p2},
                           {rep.m12, rep.m21, rep.p2}};
  for (auto& t : rep.collinear_triples) {
    auto cert = cx.collinear_cert(t[0], t[1], t[2]);
    if (!cert) throw Error("proto-langlands: 4-chain collinearity failed");
    rep.certs.push_back(*cert);
  }
  rep.proof = prove_equal(cx, rep.lhs, rep.rhs, budget);
  return rep;
}

QRepresentation trivial_rep(const Complex& cx, int d) {
  QRepresentation rep;
  for (auto& f : cx.faces) rep.dims[f.id] = d;
  return rep;
}

namespace {

Mat rep_mat(const QRepresentation& rep, const Letter& l) {
  auto it = rep.mats.find(l);
  if (it != rep.mats.end()) return it->second;
  int ds = rep.dims.at(l.src), dd = rep.dims.at(l.dst);
  if (ds != dd) throw ShapeMismatch("missing matrix for non-square generator");
  return mat_identity(ds);
}

} // namespace

Mat eval_word(const QRepresentation& rep, const MorphWord& m) {
  Mat acc = mat_identity(rep.dims.at(m.src));
  for (auto& l : m.letters) {
    Mat ml = rep_mat(rep, l);
    if (ml.empty() || ml[0].size() != acc.size())
      throw ShapeMismatch("eval_word: shape mismatch");
    acc = mat_mul(ml, acc);
  }
  return acc;
}

bool validate_rep(const Complex& cx, const QRepresentation& rep, int sample,
                  uint64_t seed) {
  SplitMix64 rng(seed);
  auto check_pairs = [&](RelKind kind) {
    auto inst = relation_instances(cx, kind);
    size_t limit = std::min<size_t>(inst.size(), (size_t)sample);
    for (size_t k = 0; k < limit; ++k) {
      auto& pr = inst.size() <= (size_t)sample ? inst[k] : inst[rng.below(inst.size())];
      if (eval_word(rep, pr.first) != eval_word(rep, pr.second)) return false;
    }
    return true;
  };
  if (!check_pairs(RelKind::R2b)) return false;
  if (!check_pairs(RelKind::R2c)) return false;
  if (!check_pairs(RelKind::R2d)) return false;
  for (auto& pr : relation_instances(cx, RelKind::R2e)) {
    Mat m = eval_word(rep, pr.first);
    if (m.size() != m[0].size() || !mat_inverse(m)) return false;
  }
  return true;
}

} // namespace percox
