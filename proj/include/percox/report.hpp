#pragma once

#include "json.hpp"

#include "percox/glnspecies.hpp"
#include "percox/orbitcat.hpp"

namespace percox {

using Json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

Json rootsys_json(const RootSystem& rs);
Json faces_json(const Complex& cx);
Json flats_json(const Complex& cx, const OrbitTable& ot);
Json orbits_json(const Complex& cx, const OrbitTable& ot);
Json presentation_json(const Presentation& p);
std::string face_poset_dot(const Complex& cx);
std::string groupoid_dot(const Presentation& p);
Json proof_json(const ProofResult& proof);
Json proto_json(const Complex& cx, const ProtoLangReport& rep);
Json langlands_json(const Complex& cx, const LanglandsReport& rep);
Json sb3_json(const GlnCtx& g, const SB3Report& rep);
Json exchange_json(const ExchangeReport& rep);
Json corner_json(const std::string& name, const CornerReport& rep);
Json descent_json(const std::string& name, const DescentReport& rep);

std::string verdict_name(Verdict v);

// Corpus file format: categories, actions and their labels as JSON.
Json corpus_json(const std::vector<CorpusItem>& corpus);
std::vector<CorpusItem> corpus_from_json(const Json& j);

} // namespace percox
