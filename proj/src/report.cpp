#include "percox/report.hpp"

namespace percox {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "proved";
    case Verdict::Refuted: return "refuted";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Json rootsys_json(const RootSystem& rs) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["series"] = series_name(rs.series);
  j["rank"] = rs.rank;
  j["ambient_dim"] = rs.ambient_dim;
  j["lineality_dim"] = rs.lineality_dim;
  Json roots = Json::array();
  for (auto& r : rs.roots) {
    Json row = Json::array();
    for (auto& x : r) row.push_back(rat_str(x));
    roots.push_back(row);
  }
  j["roots"] = roots;
  Json positive = Json::array();
  for (int i = 0; i < rs.num_positive; ++i) positive.push_back(i);
  j["positive"] = positive;
  j["simple"] = rs.simple_idx;
  return j;
}

Json faces_json(const Complex& cx) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json faces = Json::array();
  for (auto& f : cx.faces)
    faces.push_back(Json{{"id", f.id}, {"signs", f.signs}, {"dim", f.dim}});
  j["faces"] = faces;
  Json closure = Json::array();
  for (auto& g : cx.faces)
    for (auto& f : cx.faces)
      if (g.id != f.id && cx.closure_leq(g.id, f.id))
        closure.push_back(Json::array({g.id, f.id}));
  j["closure"] = closure;
  Json flats = Json::array();
  for (auto& fl : cx.flats)
    flats.push_back(Json{{"zero_set", fl.zero_set},
                         {"dim", fl.dim},
                         {"wall_classes", fl.wall_classes}});
  j["flats"] = flats;
  return j;
}

Json flats_json(const Complex& cx, const OrbitTable& ot) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json flats = Json::array();
  for (auto& fl : cx.flats)
    flats.push_back(Json{{"id", fl.id},
                         {"dim", fl.dim},
                         {"zero_set", fl.zero_set},
                         {"orbit", ot.flat_orbit[fl.id]},
                         {"wall_classes", (int)fl.wall_classes.size()}});
  j["flats"] = flats;
  j["flat_orbits"] = ot.n_flat_orbits;
  return j;
}

Json orbits_json(const Complex& cx, const OrbitTable& ot) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json fo = Json::array();
  for (int o = 0; o < ot.n_face_orbits; ++o) {
    int size = 0;
    for (auto& f : cx.faces)
      if (ot.face_orbit[f.id] == o) ++size;
    std::vector<int> type;
    for (int i = 0; i < cx.rs.rank; ++i)
      if ((ot.orbit_type[o] >> i) & 1) type.push_back(i + 1);
    fo.push_back(Json{{"type", type}, {"size", size}, {"dominant", ot.orbit_dominant[o]}});
  }
  j["face_orbits"] = fo;
  Json flo = Json::array();
  for (int o = 0; o < ot.n_flat_orbits; ++o) {
    int size = 0;
    for (auto& fl : cx.flats)
      if (ot.flat_orbit[fl.id] == o) ++size;
    flo.push_back(Json{{"rep", ot.flat_orbit_rep[o]}, {"size", size}});
  }
  j["flat_orbits"] = flo;
  Json levi = Json::array();
  for (auto& fl : cx.flats) {
    auto lg = levi_group_data(cx, fl.id);
    levi.push_back(Json{{"flat", fl.id},
                        {"stab_order", (int)lg.stab.size()},
                        {"W_l_order", (int)lg.levi_weyl.size()},
                        {"W(l)_order", (int)lg.quotient_reps.size()}});
  }
  j["levi"] = levi;
  return j;
}

Json presentation_json(const Presentation& p) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["objects"] = p.object_labels;
  Json gens = Json::array();
  for (auto& g : p.gens)
    gens.push_back(Json{{"src", g.src}, {"dst", g.dst}, {"wall", g.wall}});
  j["generators"] = gens;
  Json rels = Json::array();
  for (auto& r : p.relations) rels.push_back(Json::array({r.lhs, r.rhs}));
  j["relations"] = rels;
  auto inv = presentation_invariants(p);
  j["invariants"] = Json{{"objects", inv.object_count},
                         {"generators", inv.generator_count},
                         {"relations", inv.relation_count},
                         {"vertex_abelianization", inv.vertex_abelianization.str()}};
  return j;
}

std::string face_poset_dot(const Complex& cx) {
  std::string out = "digraph faces {\n";
  for (auto& f : cx.faces)
    out += "  f" + std::to_string(f.id) + " [label=\"" + f.signs + "\"];\n";
  // Hasse edges: g < f with no face strictly between
  for (auto& g : cx.faces)
    for (auto& f : cx.faces) {
      if (g.id == f.id || !cx.closure_leq(g.id, f.id)) continue;
      if (g.dim + 1 != f.dim) continue;
      out += "  f" + std::to_string(g.id) + " -> f" + std::to_string(f.id) + ";\n";
    }
  return out + "}\n";
}

std::string groupoid_dot(const Presentation& p) {
  std::string out = "digraph groupoid {\n";
  for (size_t o = 0; o < p.object_labels.size(); ++o)
    out += "  o" + std::to_string(o) + " [label=\"" + p.object_labels[o] + "\"];\n";
  for (size_t g = 0; g < p.gens.size(); ++g)
    out += "  o" + std::to_string(p.gens[g].src) + " -> o" +
           std::to_string(p.gens[g].dst) + " [label=\"g" + std::to_string(g) + "\"];\n";
  return out + "}\n";
}

Json proof_json(const ProofResult& proof) {
  Json j;
  j["verdict"] = verdict_name(proof.verdict);
  auto moves = [&](const std::vector<ChainMove>& ms) {
    Json arr = Json::array();
    for (auto& m : ms) {
      std::string kind = m.kind == "fuse" || m.kind == "ins-fuse" ? "2b2c" : "2d";
      arr.push_back(Json{{"relation_kind", kind},
                         {"move", m.kind},
                         {"position", m.position},
                         {"instance_id", m.faces}});
    }
    return arr;
  };
  j["moves"] = Json{{"lhs", moves(proof.lhs_moves)}, {"rhs", moves(proof.rhs_moves)}};
  j["common_chain"] = proof.common_chain;
  return j;
}

namespace {

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(rat_str(x));
  return a;
}

Json word_json(const MorphWord& m) {
  Json letters = Json::array();
  for (auto& l : m.letters)
    letters.push_back(Json{{"kind", l.ind ? "Ind" : "Res"}, {"src", l.src}, {"dst", l.dst}});
  return Json{{"src", m.src}, {"dst", m.dst}, {"letters", letters}};
}

} // namespace

Json proto_json(const Complex& cx, const ProtoLangReport& rep) {
  (void)cx;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["p1"] = rep.p1;
  j["p"] = rep.p;
  j["p2"] = rep.p2;
  j["m12"] = rep.m12;
  j["m21"] = rep.m21;
  j["lhs"] = word_json(rep.lhs);
  j["rhs"] = word_json(rep.rhs);
  Json certs = Json::array();
  for (size_t i = 0; i < rep.collinear_triples.size(); ++i) {
    certs.push_back(Json{{"triple", rep.collinear_triples[i]},
                         {"a", vec_json(rep.certs[i].a)},
                         {"c", vec_json(rep.certs[i].c)},
                         {"b", vec_json(rep.certs[i].b)}});
  }
  j["collinearity_cert"] = certs;
  j["proof"] = proof_json(rep.proof);
  return j;
}

Json langlands_json(const Complex& cx, const LanglandsReport& rep) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  auto mask_to_type = [&](int mask) {
    std::vector<int> type;
    for (int i = 0; i < cx.rs.rank; ++i)
      if ((mask >> i) & 1) type.push_back(i + 1);
    return type;
  };
  j["p1_type"] = mask_to_type(rep.p1_mask);
  j["p2_type"] = mask_to_type(rep.p2_mask);
  j["through"] = mask_to_type(rep.through_mask);
  j["double_cosets"] = rep.coset_reps;
  j["bijection_ok"] = rep.bijection_ok;
  Json terms = Json::array();
  for (auto& t : rep.terms) {
    Json tj = proto_json(cx, t.proto);
    tj["w"] = t.w;
    terms.push_back(tj);
  }
  j["terms"] = terms;
  j["verdict"] = rep.proved() ? "proved" : "unknown";
  return j;
}

Json sb3_json(const GlnCtx& g, const SB3Report& rep) {
  (void)g;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["K"] = rep.K;
  j["k_matches_tits"] = rep.k_matches_tits;
  j["lhs"] = word_json(rep.lhs);
  j["rhs"] = word_json(rep.rhs);
  j["proof"] = proof_json(rep.proof);
  j["verdict"] = rep.proved() ? "proved" : "unknown";
  return j;
}

Json exchange_json(const ExchangeReport& rep) {
  return Json{{"schema_version", kSchemaVersion},
              {"matrices", rep.n_matrices},
              {"double_cosets", rep.n_cosets},
              {"orbit_pairs", rep.n_pair_orbits},
              {"bijections_ok", rep.bijections_ok}};
}

Json corner_json(const std::string& name, const CornerReport& rep) {
  return Json{{"schema_version", kSchemaVersion},
              {"corpus_item", name},
              {"dim_invariant", rep.dim_invariant},
              {"dim_corner", rep.dim_corner},
              {"bijective", rep.bijective},
              {"multiplicative", rep.multiplicative},
              {"ok", rep.ok()}};
}

Json descent_json(const std::string& name, const DescentReport& rep) {
  return Json{{"schema_version", kSchemaVersion},
              {"corpus_item", name},
              {"dim_module", rep.dim_n},
              {"dim_induced", rep.dim_induced},
              {"dim_invariants", rep.dim_invariants},
              {"unit_injective", rep.unit_injective},
              {"unit_surjective", rep.unit_surjective},
              {"ok", rep.ok()}};
}

namespace {

Json mat_json(const Mat& m) {
  Json rows = Json::array();
  for (auto& r : m) rows.push_back(vec_json(r));
  return rows;
}

Mat mat_from_json(const Json& j) {
  Mat m;
  for (auto& row : j) {
    Vec r;
    for (auto& x : row) r.push_back(Rat(x.get<std::string>()));
    m.push_back(r);
  }
  return m;
}

} // namespace

Json corpus_json(const std::vector<CorpusItem>& corpus) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  Json items = Json::array();
  for (auto& item : corpus) {
    Json cj;
    cj["name"] = item.name;
    cj["nobj"] = item.cat.nobj;
    cj["homdim"] = item.cat.homdim;
    Json comp = Json::array();
    for (auto& [key, table] : item.cat.comp) {
      Json rows = Json::array();
      for (auto& row : table) {
        Json cols = Json::array();
        for (auto& v : row) cols.push_back(vec_json(v));
        rows.push_back(cols);
      }
      comp.push_back(Json{{"objects", key}, {"table", rows}});
    }
    cj["comp"] = comp;
    Json ids = Json::array();
    for (auto& v : item.cat.identity_coeffs) ids.push_back(vec_json(v));
    cj["identities"] = ids;
    Json act;
    act["order"] = item.action.G.order;
    act["mult"] = item.action.G.mult;
    act["inv"] = item.action.G.inv;
    act["obj_perm"] = item.action.obj_perm;
    Json maps = Json::array();
    for (auto& [key, m] : item.action.hom_map)
      maps.push_back(Json{{"g", key.first},
                          {"src", key.second.first},
                          {"dst", key.second.second},
                          {"matrix", mat_json(m)}});
    act["hom_maps"] = maps;
    cj["action"] = act;
    items.push_back(cj);
  }
  j["items"] = items;
  return j;
}

std::vector<CorpusItem> corpus_from_json(const Json& j) {
  std::vector<CorpusItem> corpus;
  for (auto& cj : j.at("items")) {
    CorpusItem item;
    item.name = cj.at("name").get<std::string>();
    item.cat.nobj = cj.at("nobj").get<int>();
    item.cat.homdim = cj.at("homdim").get<std::vector<std::vector<int>>>();
    for (auto& entry : cj.at("comp")) {
      auto key = entry.at("objects").get<std::array<int, 3>>();
      std::vector<std::vector<Vec>> table;
      for (auto& row : entry.at("table")) {
        std::vector<Vec> cols;
        for (auto& v : row) {
          Vec vec;
          for (auto& x : v) vec.push_back(Rat(x.get<std::string>()));
          cols.push_back(vec);
        }
        table.push_back(cols);
      }
      item.cat.comp[key] = table;
    }
    for (auto& v : cj.at("identities")) {
      Vec vec;
      for (auto& x : v) vec.push_back(Rat(x.get<std::string>()));
      item.cat.identity_coeffs.push_back(vec);
    }
    auto& act = cj.at("action");
    item.action.G.order = act.at("order").get<int>();
    item.action.G.mult = act.at("mult").get<std::vector<std::vector<int>>>();
    item.action.G.inv = act.at("inv").get<std::vector<int>>();
    item.action.obj_perm = act.at("obj_perm").get<std::vector<Perm>>();
    for (auto& entry : act.at("hom_maps"))
      item.action.hom_map[{entry.at("g").get<int>(),
                           {entry.at("src").get<int>(), entry.at("dst").get<int>()}}] =
          mat_from_json(entry.at("matrix"));
    item.cat.validate();
    item.action.validate(item.cat);
    corpus.push_back(item);
  }
  return corpus;
}

} // namespace percox
