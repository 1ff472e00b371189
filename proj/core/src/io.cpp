#include "toricval/io.hpp"

#include <algorithm>

namespace toricval {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Input, where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

long long_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long>();
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

HalfSpace row_from_json(const Json& j, std::size_t d, const std::string& where) {
  HalfSpace h{ratvec_from_json(member(j, "u", where)), rat_from_json(member(j, "gamma", where))};
  if (h.u.size() != d) bad(where, "u has length " + std::to_string(h.u.size()) + ", expected " + std::to_string(d));
  return h;
}

// Rows as written must have u in M and gamma in Gamma.
void check_rows(const Json& j, const GammaSpec& gamma, const std::string& where) {
  if (!j.is_object()) return;
  for (const char* key : {"ineqs", "eqs"}) {
    if (!j.contains(key)) continue;
    const Json& rows = j.at(key);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string at = where + "." + key + "[" + std::to_string(i) + "]";
      const RatVec u = ratvec_from_json(rows[i].at("u"));
      const Rat g = rat_from_json(rows[i].at("gamma"));
      if (!std::all_of(u.begin(), u.end(), [](const Rat& x) { return is_integer(x); })) {
        throw Error(ErrorKind::NotGammaRational, at + ": u is not an integer vector");
      }
      if (!gamma.contains(g)) {
        throw Error(ErrorKind::NotGammaRational, at + ": gamma " + to_string(g) + " is not in " + gamma.to_string());
      }
    }
  }
}

std::vector<Polyhedron> cells_from_json(const Json& j, std::size_t d, const char* key, const std::string& where,
                                        const GammaSpec* check) {
  const Json& list = j.is_array() ? j : member(j, key, where);
  array_at(list, where);
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + "." + key + "[" + std::to_string(i) + "]";
    if (check) check_rows(list[i], *check, at);
    out.push_back(polyhedron_from_json(list[i], d));
  }
  return out;
}

Json cells_json(const std::vector<Polyhedron>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back(json_of(c));
  return out;
}

TemplateRow template_row_from_json(const Json& j, std::size_t d, long n_min, const std::string& where) {
  TemplateRow row;
  for (const auto& p : array_at(member(j, "u", where), where + ".u")) row.u.push_back(poly_from_json(p));
  if (row.u.size() != d) bad(where, "u has the wrong length");
  row.gamma = ratfun_from_json(member(j, "gamma", where), n_min);
  return row;
}

Json template_row_json(const TemplateRow& r) {
  Json u = Json::array();
  for (const auto& p : r.u) u.push_back(json_of(p));
  return Json{{"u", u}, {"gamma", json_of(r.gamma)}};
}

}  // namespace

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_float()) throw Error(ErrorKind::Input, "floating point number " + j.dump() + "; write it as \"a/b\"");
  throw Error(ErrorKind::Input, "expected a rational, got " + j.dump());
}

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Input, "expected an array of rationals, got " + j.dump());
  RatVec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

IntVec intvec_from_json(const Json& j) {
  IntVec out;
  for (const auto& x : ratvec_from_json(j)) {
    if (!is_integer(x)) throw Error(ErrorKind::Input, "expected an integer vector, got " + j.dump());
    out.push_back(numerator(x));
  }
  return out;
}

Poly poly_from_json(const Json& j) {
  if (j.is_array()) return Poly(ratvec_from_json(j));
  return Poly::constant(rat_from_json(j));
}

RatFun ratfun_from_json(const Json& j, long n_min) {
  if (!j.is_object()) return RatFun::polynomial(poly_from_json(j), n_min);
  Poly num = poly_from_json(member(j, "num", "rational function"));
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly::constant(1);
  long start = j.contains("nmin") ? long_of(j.at("nmin"), "rational function.nmin") : n_min;
  return RatFun(std::move(num), std::move(den), start);
}

Polyhedron polyhedron_from_json(const Json& j, std::size_t d) {
  if (!j.is_object()) throw Error(ErrorKind::Input, "expected a polyhedron object, got " + j.dump());
  if (j.value("empty", false)) return Polyhedron::empty(d);
  if (j.contains("vertices")) {
    auto list = [&](const char* key) {
      std::vector<RatVec> out;
      if (j.contains(key)) {
        for (const auto& v : j.at(key)) out.push_back(ratvec_from_json(v));
      }
      for (const auto& v : out) {
        if (v.size() != d) throw Error(ErrorKind::Input, std::string(key) + " entry has the wrong length");
      }
      return out;
    };
    return Polyhedron::from_generators(d, list("vertices"), list("rays"), list("lineality"));
  }
  std::vector<HalfSpace> ineqs, eqs;
  if (j.contains("ineqs")) {
    for (const auto& r : array_at(j.at("ineqs"), "ineqs")) ineqs.push_back(row_from_json(r, d, "row"));
  }
  if (j.contains("eqs")) {
    for (const auto& r : array_at(j.at("eqs"), "eqs")) eqs.push_back(row_from_json(r, d, "row"));
  }
  return Polyhedron::from_rows(d, ineqs, eqs);
}

FamilyComplex family_complex_from_json(const Json& j, std::size_t d) {
  FamilyComplex out;
  out.dim = d;
  std::vector<Polyhedron> finite;
  if (j.contains("finite_cells")) finite = cells_from_json(j.at("finite_cells"), d, "finite_cells", "family_complex", nullptr);
  out.finite_part = face_closure(d, finite);
  if (j.contains("families")) {
    const Json& fams = array_at(j.at("families"), "family_complex.families");
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const std::string where = "family_complex.families[" + std::to_string(i) + "]";
      FamilyCell f;
      f.dim = d;
      f.n_min = long_of(member(fams[i], "n_min", where), where + ".n_min");
      f.label = fams[i].value("label", "F" + std::to_string(i));
      for (const char* key : {"ineqs", "eqs"}) {
        if (!fams[i].contains(key)) continue;
        auto& rows = std::string(key) == "ineqs" ? f.ineqs : f.eqs;
        const Json& list = array_at(fams[i].at(key), where + "." + key);
        for (std::size_t r = 0; r < list.size(); ++r) {
          rows.push_back(template_row_from_json(list[r], d, f.n_min, where + "." + key + "[" + std::to_string(r) + "]"));
        }
      }
      out.families.push_back(std::move(f));
    }
  }
  return out;
}

Json json_of(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json json_of(const RatFun& f) { return Json{{"num", json_of(f.num())}, {"den", json_of(f.den())}, {"nmin", f.domain_start()}}; }

Json json_of(const Complex& c) { return Json{{"cells", cells_json(c.maximal_cells())}}; }

Json json_of(const FamilyComplex& phi) {
  Json fams = Json::array();
  for (const auto& f : phi.families) {
    Json ineqs = Json::array(), eqs = Json::array();
    for (const auto& r : f.ineqs) ineqs.push_back(template_row_json(r));
    for (const auto& r : f.eqs) eqs.push_back(template_row_json(r));
    Json fj{{"label", f.label}, {"n_min", f.n_min}, {"ineqs", ineqs}};
    if (!f.eqs.empty()) fj["eqs"] = eqs;
    fams.push_back(std::move(fj));
  }
  return Json{{"finite_cells", cells_json(phi.finite_part.maximal_cells())}, {"families", fams}};
}

Json json_of(const HalfSpaceFan& delta) {
  return Json{{"cones", cells_json(delta.cones.maximal_cells())},
              {"ht0", json_of(delta.sigma)},
              {"ht1", json_of(delta.phi)}};
}

Json to_json(const ModelReport& r) {
  Json verdicts = Json::object();
  for (const auto& [k, v] : r.verdicts) verdicts[k] = to_json(v);
  Json out{{"input", r.input},
           {"e", to_string(r.e)},
           {"gamma_effective", r.gamma_effective.to_string()},
           {"kind", std::string(to_string(r.kind))},
           {"sigma", json_of(r.sigma)},
           {"phi", json_of(r.phi)},
           {"phi_bar", json_of(r.phi_bar)},
           {"delta_bar", json_of(r.delta_bar)},
           {"verdicts", verdicts},
           {"subfan", r.subfan},
           {"ht0_preserved", r.ht0_preserved},
           {"rec_equals_sigma", r.rec_equals_sigma},
           {"overall", to_json(r.overall())}};
  if (r.sigma_prime) {
    out["sigma_prime"] = Json{{"fan", json_of(r.sigma_prime->fan)},
                              {"weak", r.sigma_prime->weak},
                              {"certificate", r.sigma_prime->certificate}};
  }
  return out;
}

Json document_header(const GammaSpec& gamma, std::size_t d) {
  return Json{{"format", std::string(kFormat)}, {"gamma", gamma.to_string()}, {"ambient_dim", d}, {"payload", Json::object()}};
}

Document parse_document(std::string_view text, const GammaSpec* gamma_override) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw Error(ErrorKind::Input, "syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  return document_from_json(j, gamma_override);
}

Document document_from_json(const Json& j, const GammaSpec* gamma_override) {
  if (!j.is_object()) bad("document", "expected an object");
  const Json& fmt = member(j, "format", "document");
  if (!fmt.is_string() || fmt.get<std::string>() != kFormat) bad("document.format", "expected \"toricval/1\"");
  Document doc;
  if (gamma_override) {
    doc.gamma = *gamma_override;
  } else if (j.contains("gamma")) {
    if (!j.at("gamma").is_string()) bad("document.gamma", "expected a string");
    doc.gamma = GammaSpec::parse(j.at("gamma").get<std::string>());
  }
  const long d = long_of(member(j, "ambient_dim", "document"), "document.ambient_dim");
  if (d < 1) bad("document.ambient_dim", "must be positive");
  doc.ambient_dim = static_cast<std::size_t>(d);
  const Json& payload = member(j, "payload", "document");
  if (!payload.is_object()) bad("document.payload", "expected an object");

  const std::size_t dim = doc.ambient_dim;
  if (payload.contains("polyhedron")) {
    check_rows(payload.at("polyhedron"), doc.gamma, "payload.polyhedron");
    doc.polyhedron = polyhedron_from_json(payload.at("polyhedron"), dim);
  }
  if (payload.contains("complex")) {
    doc.complex = cells_from_json(payload.at("complex"), dim, "cells", "payload.complex", &doc.gamma);
  }
  if (payload.contains("fan")) doc.fan = cells_from_json(payload.at("fan"), dim, "cones", "payload.fan", nullptr);
  if (payload.contains("halfspace_fan")) {
    doc.halfspace_fan = cells_from_json(payload.at("halfspace_fan"), dim + 1, "cones", "payload.halfspace_fan", nullptr);
  }
  if (payload.contains("family_complex")) {
    const Json& fc = payload.at("family_complex");
    if (fc.contains("finite_cells")) {
      const Json& list = fc.at("finite_cells");
      for (std::size_t i = 0; i < list.size(); ++i) {
        check_rows(list[i], doc.gamma, "payload.family_complex.finite_cells[" + std::to_string(i) + "]");
      }
    }
    doc.family_complex = family_complex_from_json(fc, dim);
  }
  if (payload.contains("terms")) {
    std::vector<MonomialTerm> terms;
    for (const auto& t : array_at(payload.at("terms"), "payload.terms")) {
      MonomialTerm m{intvec_from_json(member(t, "u", "payload.terms")), rat_from_json(member(t, "val", "payload.terms"))};
      if (m.u.size() != dim) bad("payload.terms", "u has the wrong length");
      terms.push_back(std::move(m));
    }
    doc.terms = std::move(terms);
  }
  if (payload.contains("point")) {
    const Json& p = payload.at("point");
    StratumPoint x;
    x.sigma = Polyhedron::point(RatVec(dim, Rat(0)));
    if (p.contains("stratum_rays")) {
      std::vector<RatVec> rays;
      for (const auto& r : p.at("stratum_rays")) rays.push_back(ratvec_from_json(r));
      x.sigma = Polyhedron::from_generators(dim, {RatVec(dim, Rat(0))}, rays);
    } else if (p.contains("stratum")) {
      x.sigma = polyhedron_from_json(p.at("stratum"), dim);
    }
    x.point = ratvec_from_json(member(p, "point", "payload.point"));
    doc.point = std::move(x);
  }
  if (payload.contains("report")) doc.report = payload.at("report");
  return doc;
}

Json print_document(const Document& doc) {
  Json out = document_header(doc.gamma, doc.ambient_dim);
  Json& payload = out["payload"];
  if (doc.polyhedron) payload["polyhedron"] = json_of(*doc.polyhedron);
  if (doc.complex) payload["complex"] = Json{{"cells", cells_json(*doc.complex)}};
  if (doc.fan) payload["fan"] = Json{{"cones", cells_json(*doc.fan)}};
  if (doc.halfspace_fan) payload["halfspace_fan"] = Json{{"cones", cells_json(*doc.halfspace_fan)}};
  if (doc.family_complex) payload["family_complex"] = json_of(*doc.family_complex);
  if (doc.terms) {
    Json terms = Json::array();
    for (const auto& t : *doc.terms) terms.push_back(Json{{"u", json_of(t.u)}, {"val", to_string(t.val)}});
    payload["terms"] = terms;
  }
  if (doc.point) payload["point"] = json_of(*doc.point);
  if (doc.report) payload["report"] = *doc.report;
  return out;
}

}  // namespace toricval
