#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <thread>

#include "percox/report.hpp"

using namespace percox;

namespace {

struct RunConfig {
  std::string system = "A2";
  uint64_t seed = 1;
  int budget_len = 24;
  long long budget_states = 1000000;
  int budget_insertions = 2;
  std::string output;
  std::string format = "text";
  int jobs = 1;
};

std::pair<Series, int> parse_system(const std::string& s) {
  if (s.size() < 2) throw UnsupportedType("bad system: " + s);
  if (s == "G2") return {Series::G2, 2};
  if (s == "F4") return {Series::F4, 4};
  Series series = parse_series(s.substr(0, 1));
  int rank = std::stoi(s.substr(1));
  return {series, rank};
}

ProveBudget budget_of(const RunConfig& rc) {
  ProveBudget b;
  b.max_len = rc.budget_len;
  b.max_states = (size_t)rc.budget_states;
  b.max_insertions = rc.budget_insertions;
  return b;
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(rc.output);
    out << text;
  }
}

void emit_json(const RunConfig& rc, const Json& j) { emit(rc, j.dump(2) + "\n"); }

// Mask tokens: "" or "borel" = empty set; "g"/"full" = all simples;
// "alpha"/"beta" rank-2 aliases (alpha = short root when lengths differ);
// otherwise a comma list of 1-based simple indices.
int parse_mask(const Complex& cx, std::string tok) {
  int full = cx.num_masks() - 1;
  if (tok.empty() || tok == "borel" || tok == "b") return 0;
  if (tok == "g" || tok == "full") return full;
  if (tok == "alpha" || tok == "beta") {
    if (cx.rs.rank != 2) throw UnsupportedType("alpha/beta aliases need rank 2");
    Rat l0 = dot(cx.rs.roots[cx.rs.simple_idx[0]], cx.rs.roots[cx.rs.simple_idx[0]]);
    Rat l1 = dot(cx.rs.roots[cx.rs.simple_idx[1]], cx.rs.roots[cx.rs.simple_idx[1]]);
    int alpha = l1 < l0 ? 1 : 0; // short simple if lengths differ
    return tok == "alpha" ? (1 << alpha) : (1 << (1 - alpha));
  }
  int mask = 0;
  size_t pos = 0;
  while (pos < tok.size()) {
    size_t comma = tok.find(',', pos);
    if (comma == std::string::npos) comma = tok.size();
    int idx = std::stoi(tok.substr(pos, comma - pos));
    if (idx < 1 || idx > cx.rs.rank) throw UnsupportedType("bad simple index");
    mask |= 1 << (idx - 1);
    pos = comma + 1;
  }
  return mask;
}

int central_node(const Complex& cx) {
  for (int i = 0; i < cx.rs.rank; ++i) {
    int adj = 0;
    for (int j = 0; j < cx.rs.rank; ++j)
      if (j != i &&
          dot(cx.rs.roots[cx.rs.simple_idx[i]], cx.rs.roots[cx.rs.simple_idx[j]]) != 0)
        ++adj;
    if (adj == 3) return i;
  }
  throw UnsupportedType("no trivalent node in this diagram");
}

int parse_flat(const Complex& cx, const std::string& tok) {
  if (tok == "full" || tok == "top") return cx.top_flat;
  if (tok == "alpha*" || tok == "central" || tok == "l=alpha*")
    return cx.faces[cx.dominant_face[1 << central_node(cx)]].flat_id;
  int mask = parse_mask(cx, tok);
  return cx.faces[cx.dominant_face[mask]].flat_id;
}

// Order-preserving parallel map over an index range.
template <typename F>
void parallel_for(int jobs, int n, F&& body) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  std::atomic<int> next{0};
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  for (auto& th : threads) th.join();
}

int cmd_faces(const RunConfig& rc, const std::string& level) {
  auto [series, rank] = parse_system(rc.system);
  auto cx = build_complex(series, rank);
  if (rc.format == "dot") {
    emit(rc, face_poset_dot(cx));
    return 0;
  }
  if (rc.format == "json") {
    emit_json(rc, faces_json(cx));
    return 0;
  }
  int chambers = 0;
  for (auto& f : cx.faces)
    if (f.flat_id == cx.top_flat) ++chambers;
  std::string text;
  if (level == "chambers") {
    text = std::to_string(chambers) + " chambers\n";
  } else {
    text = rc.system + ": " + std::to_string(cx.faces.size()) + " faces, " +
           std::to_string(chambers) + " chambers, " + std::to_string(cx.flats.size()) +
           " flats\n";
  }
  emit(rc, text);
  return 0;
}

int cmd_flats(const RunConfig& rc) {
  auto [series, rank] = parse_system(rc.system);
  auto cx = build_complex(series, rank);
  auto ot = build_orbit_table(cx);
  if (rc.format == "json") {
    emit_json(rc, flats_json(cx, ot));
    return 0;
  }
  std::string text = rc.system + ": " + std::to_string(cx.flats.size()) + " flats in " +
                     std::to_string(ot.n_flat_orbits) + " orbits\n";
  for (auto& fl : cx.flats)
    text += "  flat " + std::to_string(fl.id) + ": dim " + std::to_string(fl.dim) +
            ", zeros " + std::to_string(fl.zero_set.size()) + ", orbit " +
            std::to_string(ot.flat_orbit[fl.id]) + "\n";
  emit(rc, text);
  return 0;
}

int cmd_orbits(const RunConfig& rc) {
  auto [series, rank] = parse_system(rc.system);
  auto cx = build_complex(series, rank);
  auto ot = build_orbit_table(cx);
  emit_json(rc, orbits_json(cx, ot));
  return 0;
}

int cmd_groupoid(const RunConfig& rc, const std::string& flat_spec, bool quotient) {
  auto [series, rank] = parse_system(rc.system);
  auto cx = build_complex(series, rank);
  int flat = parse_flat(cx, flat_spec);
  Presentation p =
      quotient ? coinvariant_presentation(cx, flat) : stratum_presentation(cx, flat);
  if (rc.format == "dot") {
    emit(rc, groupoid_dot(p));
    return 0;
  }
  emit_json(rc, presentation_json(p));
  return 0;
}

int exit_code_of(bool any_refuted, bool any_unknown) {
  if (any_refuted) return 1;
  return any_unknown ? 2 : 0;
}

int cmd_verify_proto(const RunConfig& rc, bool all, const std::string& p1s,
                     const std::string& ps, const std::string& p2s) {
  auto [series, rank] = parse_system(rc.system);
  auto cx = build_complex(series, rank);
  auto budget = budget_of(rc);
  Json results = Json::array();
  bool unknown = false;
  if (all) {
    for (auto& p : cx.faces)
      for (auto& p1 : cx.faces)
        for (auto& p2 : cx.faces) {
          if (!cx.closure_leq(p.id, p1.id) || !cx.closure_leq(p.id, p2.id)) continue;
          auto rep = verify_proto_langlands(cx, p1.id, p.id, p2.id, budget);
          if (rep.proof.verdict != Verdict::Proved) {
            unknown = true;
            results.push_back(proto_json(cx, rep));
          }
        }
    Json j{{"schema_version", kSchemaVersion},
           {"system", rc.system},
           {"verdict", unknown ? "unknown" : "proved"},
           {"failures", results}};
    emit_json(rc, j);
  } else {
    int p1 = cx.dominant_face[parse_mask(cx, p1s)];
    int p = cx.dominant_face[parse_mask(cx, ps.empty() ? "full" : ps)];
    int p2 = cx.dominant_face[parse_mask(cx, p2s)];
    auto rep = verify_proto_langlands(cx, p1, p, p2, budget);
    unknown = rep.proof.verdict != Verdict::Proved;
    emit_json(rc, proto_json(cx, rep));
  }
  return exit_code_of(false, unknown);
}

int cmd_verify_langlands(const RunConfig& rc, bool all, const std::string& p1s,
                         const std::string& p2s, const std::string& throughs) {
  auto [series, rank] = parse_system(rc.system);
  auto cx = build_complex(series, rank);
  PCox pc(cx);
  auto budget = budget_of(rc);
  bool unknown = false, mismatch = false;
  if (all) {
    int n = cx.num_masks();
    std::vector<Json> results(n * n);
    parallel_for(rc.jobs, n * n, [&](int idx) {
      auto rep = verify_langlands(pc, idx / n, idx % n, n - 1, budget);
      results[idx] = langlands_json(cx, rep);
    });
    Json arr = Json::array();
    for (auto& r : results) {
      if (r["verdict"] != "proved") unknown = true;
      if (!r["bijection_ok"].get<bool>()) mismatch = true;
      arr.push_back(Json{{"p1_type", r["p1_type"]},
                         {"p2_type", r["p2_type"]},
                         {"terms", r["terms"].size()},
                         {"verdict", r["verdict"]}});
    }
    emit_json(rc, Json{{"schema_version", kSchemaVersion},
                       {"system", rc.system},
                       {"pairs", arr},
                       {"verdict", unknown ? "unknown" : "proved"}});
  } else {
    auto rep = verify_langlands(pc, parse_mask(cx, p1s), parse_mask(cx, p2s),
                                parse_mask(cx, throughs.empty() ? "full" : throughs),
                                budget);
    unknown = !rep.proved();
    mismatch = !rep.bijection_ok;
    emit_json(rc, langlands_json(cx, rep));
  }
  return exit_code_of(mismatch, unknown);
}

int cmd_verify_functoriality(const RunConfig& rc) {
  auto [series, rank] = parse_system(rc.system);
  auto cx = build_complex(series, rank);
  auto budget = budget_of(rc);
  int checked = 0, failed = 0;
  for (auto& fl : cx.flats)
    for (auto& fl2 : cx.flats) {
      if (fl2.dim != fl.dim - 1) continue;
      if (!std::includes(fl2.zero_set.begin(), fl2.zero_set.end(), fl.zero_set.begin(),
                         fl.zero_set.end()))
        continue;
      auto low = cx.chambers_of_flat(fl2.id);
      auto high = cx.chambers_of_flat(fl.id);
      for (int p1 : low)
        for (int p2 : low)
          for (int c1 : high)
            for (int c2 : high) {
              if (!cx.closure_leq(p1, c1) || !cx.closure_leq(p2, c2)) continue;
              bool same_side = true;
              for (int i : fl2.zero_set) {
                bool in_l =
                    std::binary_search(fl.zero_set.begin(), fl.zero_set.end(), i);
                if (!in_l && cx.faces[c1].signs[i] != cx.faces[c2].signs[i])
                  same_side = false;
              }
              if (!same_side) continue;
              auto lhs = word_concat(tau(cx, p1, c1), tau(cx, c1, c2));
              auto rhs = word_concat(tau(cx, p1, p2), tau(cx, p2, c2));
              ++checked;
              if (prove_equal(cx, lhs, rhs, budget).verdict != Verdict::Proved) ++failed;
            }
    }
  emit_json(rc, Json{{"schema_version", kSchemaVersion},
                     {"system", rc.system},
                     {"checked", checked},
                     {"failed", failed},
                     {"verdict", failed ? "unknown" : "proved"}});
  return failed ? 2 : 0;
}

int cmd_verify_sb3(const RunConfig& rc, int n, bool all, const std::string& jspec,
                   const std::string& lspec) {
  auto g = build_gln(n);
  bool unknown = false;
  if (all) {
    Json arr = Json::array();
    std::vector<Json> results(1 << (2 * n));
    parallel_for(rc.jobs, 1 << (2 * n), [&](int idx) {
      int jm = idx >> n, lm = idx & ((1 << n) - 1);
      std::vector<int> J1, J2, L1, L2;
      for (int i = 1; i <= n; ++i) {
        ((jm >> (i - 1)) & 1 ? J1 : J2).push_back(i);
        ((lm >> (i - 1)) & 1 ? L1 : L2).push_back(i);
      }
      auto rep = verify_SB3(g, J1, J2, L1, L2);
      results[idx] = Json{{"J1", J1}, {"L1", L1}, {"verdict", rep.proved()}};
    });
    for (auto& r : results) {
      if (!r["verdict"].get<bool>()) unknown = true;
      arr.push_back(r);
    }
    emit_json(rc, Json{{"schema_version", kSchemaVersion},
                       {"n", n},
                       {"checked", (int)arr.size()},
                       {"verdict", unknown ? "unknown" : "proved"}});
  } else {
    auto parse_set = [&](const std::string& s) {
      std::vector<int> out;
      size_t pos = 0;
      while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      return out;
    };
    auto J1 = parse_set(jspec);
    std::vector<int> J2, L2;
    auto L1 = parse_set(lspec);
    for (int i = 1; i <= n; ++i) {
      if (std::find(J1.begin(), J1.end(), i) == J1.end()) J2.push_back(i);
      if (std::find(L1.begin(), L1.end(), i) == L1.end()) L2.push_back(i);
    }
    auto rep = verify_SB3(g, J1, J2, L1, L2);
    unknown = !rep.proved();
    emit_json(rc, sb3_json(g, rep));
  }
  return unknown ? 2 : 0;
}

int cmd_verify_lambda(const RunConfig& rc, int n) {
  auto g = build_gln(n);
  int additive = 0, failed = 0;
  for (auto& [p1, w1] : g.weyl_of_perm)
    for (auto& [p2, w2] : g.weyl_of_perm) {
      auto rep = verify_lambda_partial_hom(g, p1, p2);
      if (!rep.additive) continue;
      ++additive;
      if (rep.verdict != Verdict::Proved) ++failed;
    }
  emit_json(rc, Json{{"schema_version", kSchemaVersion},
                     {"n", n},
                     {"length_additive_pairs", additive},
                     {"failed", failed},
                     {"verdict", failed ? "unknown" : "proved"}});
  return failed ? 2 : 0;
}

int cmd_verify_exchange(const RunConfig& rc, int n) {
  bool bad = false;
  Json arr = Json::array();
  auto g = build_gln(n);
  for (int p1 = 0; p1 <= n; ++p1)
    for (int q1 = 0; q1 <= n; ++q1) {
      auto rep = exchange_bijection(g, p1, n - p1, q1, n - q1);
      if (!rep.bijections_ok) bad = true;
      Json j = exchange_json(rep);
      j["margins"] = Json::array({p1, n - p1, q1, n - q1});
      arr.push_back(j);
    }
  emit_json(rc, Json{{"schema_version", kSchemaVersion},
                     {"n", n},
                     {"margins", arr},
                     {"verdict", bad ? "mismatch" : "proved"}});
  return bad ? 1 : 0;
}

int cmd_verify_appendix(const RunConfig& rc, const std::string& corpus_name) {
  bool bad = false;
  Json corners = Json::array(), descents = Json::array();
  std::vector<CorpusItem> corpus;
  if (corpus_name == "default") {
    corpus = default_corpus();
  } else {
    std::ifstream in(corpus_name);
    if (!in) throw Error("cannot open corpus file: " + corpus_name);
    Json j = Json::parse(in);
    corpus = corpus_from_json(j);
  }
  for (auto& item : corpus) {
    auto corner = corner_iso_check(item.cat, item.action);
    if (!corner.ok()) bad = true;
    corners.push_back(corner_json(item.name, corner));
    auto t = total_algebra(item.cat);
    auto act = action_on_total_algebra(item.cat, item.action);
    auto sub = invariant_subalgebra(t.alg, act);
    for (uint64_t s : {rc.seed, rc.seed + 1}) {
      auto mod = random_module(sub.alg, 2, 2, s);
      if (mod.dim == 0) continue;
      auto rep = descent_unit_check(t.alg, act, mod);
      if (!rep.ok()) bad = true;
      descents.push_back(descent_json(item.name, rep));
    }
    if (item.action.free_on_objects()) {
      auto cmp = coinvariant_vs_invariant(item.cat, item.action);
      if (!cmp.ok()) bad = true;
    }
  }
  emit_json(rc, Json{{"schema_version", kSchemaVersion},
                     {"corner_checks", corners},
                     {"descent_checks", descents},
                     {"verdict", bad ? "mismatch" : "proved"}});
  return bad ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"percox: root-arrangement combinatorics and P-Coxeter verifiers"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("--seed", rc.seed, "deterministic seed");
  app.add_option("--budget-len", rc.budget_len, "prover max chain length");
  app.add_option("--budget-states", rc.budget_states, "prover max states");
  app.add_option("--budget-insertions", rc.budget_insertions, "prover max insertions");
  app.add_option("--out", rc.output, "output path (default stdout)");
  app.add_option("--format", rc.format, "json|dot|text");
  app.add_option("--jobs", rc.jobs, "worker parallelism");

  std::string level, flat_spec = "full", p1s, p2s, ps, throughs, jspec, lspec;
  bool quotient = false, all = false;
  int n = 3;

  auto* faces = app.add_subcommand("faces", "emit the face table");
  faces->add_option("--system", rc.system);
  faces->add_option("--level", level);

  auto* flats = app.add_subcommand("flats", "emit the flat poset");
  flats->add_option("--system", rc.system);

  auto* orbits = app.add_subcommand("orbits", "emit orbit and Levi tables");
  orbits->add_option("--system", rc.system);

  auto* groupoid = app.add_subcommand("groupoid", "stratum groupoid presentations");
  groupoid->add_option("--system", rc.system);
  groupoid->add_option("--flat", flat_spec);
  groupoid->add_flag("--quotient", quotient);

  auto* dump = app.add_subcommand("rootsys", "dump the root system");
  dump->add_option("--system", rc.system);

  auto* verify = app.add_subcommand("verify", "run identity verifiers");
  verify->require_subcommand(1);
  auto* vproto = verify->add_subcommand("proto-langlands");
  vproto->add_option("--system", rc.system);
  vproto->add_flag("--all", all);
  vproto->add_option("--p1", p1s);
  vproto->add_option("--p", ps);
  vproto->add_option("--p2", p2s);
  auto* vlang = verify->add_subcommand("langlands");
  vlang->add_option("--system", rc.system);
  vlang->add_flag("--all", all);
  vlang->add_option("--p1", p1s);
  vlang->add_option("--p2", p2s);
  vlang->add_option("--through", throughs);
  auto* vfunc = verify->add_subcommand("functoriality");
  vfunc->add_option("--system", rc.system);
  auto* vsb3 = verify->add_subcommand("sb3");
  vsb3->add_option("-n", n);
  vsb3->add_flag("--all", all);
  vsb3->add_option("--j", jspec);
  vsb3->add_option("--l", lspec);
  auto* vlambda = verify->add_subcommand("lambda");
  vlambda->add_option("-n", n);
  auto* vexch = verify->add_subcommand("exchange");
  vexch->add_option("-n", n);
  auto* vapp = verify->add_subcommand("appendix");
  std::string corpus_name = "default";
  vapp->add_option("--corpus", corpus_name);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*faces) return cmd_faces(rc, level);
    if (*flats) return cmd_flats(rc);
    if (*orbits) return cmd_orbits(rc);
    if (*groupoid) return cmd_groupoid(rc, flat_spec, quotient);
    if (*dump) {
      auto [series, rank] = parse_system(rc.system);
      emit_json(rc, rootsys_json(build_root_system(series, rank)));
      return 0;
    }
    if (*vproto) return cmd_verify_proto(rc, all, p1s, ps, p2s);
    if (*vlang) return cmd_verify_langlands(rc, all, p1s, p2s, throughs);
    if (*vfunc) return cmd_verify_functoriality(rc);
    if (*vsb3) return cmd_verify_sb3(rc, n, all, jspec, lspec);
    if (*vlambda) return cmd_verify_lambda(rc, n);
    if (*vexch) return cmd_verify_exchange(rc, n);
    if (*vapp) {
      if (corpus_name == "dump-default") {
        emit_json(rc, corpus_json(default_corpus()));
        return 0;
      }
      return cmd_verify_appendix(rc, corpus_name);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
