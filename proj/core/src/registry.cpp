#include "toricval/registry.hpp"

namespace toricval {

namespace {

// [1/(n+1), 1/n] for n >= 1, plus the vertex 0.
constexpr const char* kComb = R"({
  "format": "toricval/1", "gamma": "Z", "ambient_dim": 1,
  "payload": {
    "family_complex": {
      "finite_cells": [{"vertices": [["0"]]}],
      "families": [{
        "label": "I", "n_min": 1,
        "ineqs": [
          {"u": [["1"]], "gamma": {"num": ["1"], "den": ["1", "1"]}},
          {"u": [["-1"]], "gamma": {"num": ["-1"], "den": ["0", "1"]}}
        ]
      }]
    },
    "fan": {"cones": [{"vertices": [["0"]]}]}
  }
})";

// P_n = {1/(n+1) <= x <= 1/n, n(n+1)x + y >= 2n+1} for n >= 1, and P_0 the upper y-axis.
constexpr const char* kStrata = R"({
  "format": "toricval/1", "gamma": "Z", "ambient_dim": 2,
  "payload": {
    "family_complex": {
      "finite_cells": [{"vertices": [["0", "0"]], "rays": [["0", "1"]]}],
      "families": [{
        "label": "P", "n_min": 1,
        "ineqs": [
          {"u": [["1"], []], "gamma": {"num": ["1"], "den": ["1", "1"]}},
          {"u": [["-1"], []], "gamma": {"num": ["-1"], "den": ["0", "1"]}},
          {"u": [["0", "1", "1"], ["1"]], "gamma": {"num": ["1", "2"], "den": ["1"]}}
        ]
      }]
    },
    "fan": {"cones": [{"vertices": [["0", "0"]], "rays": [["0", "1"]]}]}
  }
})";

struct Ctx {
  FamilyComplex phi;
  Complex fan;
  std::size_t d;
};

Ctx load(const char* text) {
  Document doc = parse_document(std::string_view(text));
  Ctx c{*doc.family_complex, face_closure(doc.ambient_dim, *doc.fan), doc.ambient_dim};
  return c;
}

Json witness_of(const Verdict& v) {
  const Json& c = v.certificate;
  if (c.contains("witness")) return c.at("witness");
  if (c.contains("accumulation_points") && !c.at("accumulation_points").empty()) return c.at("accumulation_points")[0];
  return nullptr;
}

Json summary(const Json& w) {
  if (w.is_null()) return nullptr;
  return Json{{"point", w.at("point")}, {"stratum_rays", w.at("stratum_rays")}};
}

ExampleRun finish(Json checks, Json expected, Json observed, Status headline) {
  ExampleRun r;
  r.matches = expected == observed;
  r.headline = headline;
  r.output = Json{{"checks", std::move(checks)},
                  {"expected", std::move(expected)},
                  {"observed", std::move(observed)},
                  {"matches", r.matches}};
  return r;
}

ExampleRun run_comb(long window) {
  Ctx c = load(kComb);
  Verdict comb = comb_locally_finite(face_closure(c.d, truncation(c.phi, c.phi.families[0].n_min + window)));
  Verdict at0 = locally_finite_at(c.phi, c.fan, StratumPoint{c.fan.cells[0], RatVec{Rat(0)}}, window);
  Json expected{{"comb_locally_finite", "Proved"},
                {"locally_finite_at_0", "Refuted"},
                {"witness", {{"point", {"0"}}, {"stratum_rays", Json::array()}}}};
  Json observed{{"comb_locally_finite", to_string(comb.status)},
                {"locally_finite_at_0", to_string(at0.status)},
                {"witness", summary(witness_of(at0))}};
  return finish(Json{{"comb_locally_finite", to_json(comb)}, {"locally_finite_at_0", to_json(at0)}}, expected, observed,
                at0.status);
}

ExampleRun run_disconnect(long window) {
  Ctx c = load(kComb);
  Verdict iso = domain_isomorphism_verdict(c.phi, c.fan, window);
  Json expected{{"domain_isomorphism", "Refuted"},
                {"nerve_components", 2},
                {"union_components", 1},
                {"witness", {{"point", {"0"}}, {"stratum_rays", Json::array()}}}};
  Json observed{{"domain_isomorphism", to_string(iso.status)},
                {"nerve_components", iso.certificate.value("nerve_components", Json())},
                {"union_components", iso.certificate.value("union_components", Json())},
                {"witness", summary(witness_of(iso))}};
  return finish(Json{{"domain_isomorphism", to_json(iso)}}, expected, observed, iso.status);
}

ExampleRun run_strata(long window) {
  Ctx c = load(kStrata);
  Complex dense = face_closure(c.d, {Polyhedron::point(RatVec(c.d, Rat(0)))});
  Verdict plain = locally_finite_in_compactification(c.phi, dense, window);
  Verdict full = locally_finite_in_compactification(c.phi, c.fan, window);
  Json expected{{"locally_finite_in_N_R", "Proved"},
                {"locally_finite_in_N_R_Sigma", "Refuted"},
                {"witness", {{"point", {"0"}}, {"stratum_rays", Json::array({Json::array({"0", "1"})})}}}};
  Json observed{{"locally_finite_in_N_R", to_string(plain.status)},
                {"locally_finite_in_N_R_Sigma", to_string(full.status)},
                {"witness", summary(witness_of(full))}};
  return finish(Json{{"locally_finite_in_N_R", to_json(plain)}, {"locally_finite_in_N_R_Sigma", to_json(full)}},
                expected, observed, full.status);
}

}  // namespace

std::vector<ExampleInfo> list_examples() {
  return {{"ex-locfin-comb", "intervals [1/(n+1), 1/n] and the vertex 0: combinatorially but not topologically locally finite"},
          {"ex-raynaud-disconnect", "the same complex over Sigma = {0}: the nerve has two components, the union one"},
          {"ex-strata-accumulation", "the polyhedra P_n accumulate in the boundary stratum of the upper y-axis"}};
}

Json example_document(std::string_view id) {
  if (id == "ex-locfin-comb" || id == "ex-raynaud-disconnect") return Json::parse(kComb);
  if (id == "ex-strata-accumulation") return Json::parse(kStrata);
  throw Error(ErrorKind::Input, "unknown example \"" + std::string(id) + "\"");
}

ExampleRun run_example(std::string_view id, long window) {
  ExampleRun r;
  if (id == "ex-locfin-comb") {
    r = run_comb(window);
  } else if (id == "ex-raynaud-disconnect") {
    r = run_disconnect(window);
  } else if (id == "ex-strata-accumulation") {
    r = run_strata(window);
  } else {
    throw Error(ErrorKind::Input, "unknown example \"" + std::string(id) + "\"");
  }
  r.output["id"] = std::string(id);
  r.output["input"] = example_document(id);
  return r;
}

}  // namespace toricval
