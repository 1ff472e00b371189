#include "cli.hpp"

#include "toricval/registry.hpp"
#include "toricval/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

namespace toricval::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string gamma;
  long window = 8;
  std::string out;
  std::string svg;
  std::string viewport;
  long n_max = 4;
  std::string action;
  std::string example;
};

struct Outcome {
  Json result = Json::object();
  std::optional<Verdict> verdict;
  std::optional<int> exit_code;  // overrides the verdict-derived code
};

int exit_code(Status s) {
  switch (s) {
    case Status::Proved: return 0;
    case Status::Refuted: return 1;
    case Status::Unknown: return 2;
  }
  return 2;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Document load(const Options& o) {
  if (o.gamma.empty()) return parse_document(read_input(o.input));
  GammaSpec g = GammaSpec::parse(o.gamma);
  return parse_document(read_input(o.input), &g);
}

template <class T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw Error(ErrorKind::Input, std::string("payload has no ") + what);
  return *v;
}

Complex fan_of(const Document& doc) {
  if (!doc.fan) return face_closure(doc.ambient_dim, {Polyhedron::point(RatVec(doc.ambient_dim, Rat(0)))});
  Complex out;
  validate_fan(doc.ambient_dim, *doc.fan, &out);
  return out;
}

FamilyComplex phi_of(const Document& doc) {
  if (doc.family_complex) return *doc.family_complex;
  return as_family_complex(face_closure(doc.ambient_dim, need(doc.complex, "complex or family_complex")));
}

Complex halfspace_cones(const Document& doc) {
  Complex out;
  Verdict v = validate_fan(doc.ambient_dim + 1, need(doc.halfspace_fan, "halfspace_fan"), &out);
  if (!v.is_proved()) throw Error(ErrorKind::Input, "halfspace_fan is not a fan: " + v.reason);
  return out;
}

Polyhedron single_cone(const Document& doc) {
  auto cones = halfspace_cones(doc).maximal_cells();
  if (cones.size() != 1) throw Error(ErrorKind::Input, "expected a halfspace_fan with exactly one maximal cone");
  return cones.front();
}

Json cells_json(const std::vector<Polyhedron>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back(json_of(c));
  return out;
}

Json intvecs_json(const std::vector<IntVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(json_of(v));
  return out;
}

std::optional<Viewport> parse_viewport(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<Rat> xs;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) xs.push_back(parse_rat(item));
  if (xs.size() != 4) throw Error(ErrorKind::Input, "--viewport expects xmin,xmax,ymin,ymax");
  return Viewport{xs[0], xs[1], xs[2], xs[3]};
}

// Subcommands ---------------------------------------------------------------

Outcome cmd_validate(const Options& o) {
  Document doc = load(o);
  const std::size_t d = doc.ambient_dim;
  Outcome r;
  if (doc.halfspace_fan) {
    Complex closed, sigma, phi;
    Verdict fan = validate_fan(d + 1, *doc.halfspace_fan, &closed);
    Verdict slices = fan.is_proved() ? height_slices(d, closed.cells, &sigma, &phi) : Verdict::unknown("not a fan");
    r.verdict = combine({{"fan", fan}, {"height_slices", slices}});
    r.result = Json{{"cones", cells_json(closed.maximal_cells())}, {"faces_added", closed.added_faces}};
  } else if (doc.fan) {
    Complex closed;
    r.verdict = validate_fan(d, *doc.fan, &closed);
    r.result = json_of(closed);
  } else if (doc.complex) {
    Complex closed;
    r.verdict = validate_complex(d, *doc.complex, &closed);
    r.result = json_of(closed);
  } else if (doc.family_complex) {
    r.verdict = family_validate(*doc.family_complex, o.window);
  } else {
    const Polyhedron& p = need(doc.polyhedron, "polyhedron, complex, fan, halfspace_fan or family_complex");
    r.verdict = p.is_empty() ? Verdict::refuted("polyhedron is empty") : Verdict::proved();
    r.result = Json{{"polyhedron", json_of(p)}, {"dim", p.dim()}, {"pointed", p.is_pointed()}};
  }
  return r;
}

Outcome cmd_admissible(const Options& o) {
  Document doc = load(o);
  Complex cones = halfspace_cones(doc);
  Complex sigma, phi;
  std::vector<std::pair<std::string, Verdict>> parts;
  Json per = Json::array();
  for (const auto& c : cones.maximal_cells()) {
    Verdict v = is_gamma_admissible_cone(c, doc.gamma);
    per.push_back(Json{{"cone", json_of(c)}, {"verdict", to_json(v)}});
    parts.emplace_back("cone", v);
  }
  Verdict slices = height_slices(doc.ambient_dim, cones.cells, &sigma, &phi);
  Outcome r;
  r.verdict = combine(parts);
  r.result = Json{{"cones", per}, {"slice_criterion", to_json(slices)}};
  return r;
}

Outcome cmd_cone_over(const Options& o) {
  Document doc = load(o);
  Polyhedron c = cone_over(need(doc.polyhedron, "polyhedron"), doc.gamma);
  Outcome r;
  r.result = Json{{"cone", json_of(c)}, {"rays", intvecs_json(c.rays())}};
  return r;
}

Outcome cmd_slices(const Options& o) {
  Document doc = load(o);
  Complex sigma, phi;
  Outcome r;
  r.verdict = height_slices(doc.ambient_dim, halfspace_cones(doc).cells, &sigma, &phi);
  r.result = Json{{"ht0", json_of(sigma)}, {"ht1", json_of(phi)}};
  return r;
}

Outcome cmd_assemble(const Options& o) {
  Document doc = load(o);
  Complex phi = face_closure(doc.ambient_dim, need(doc.complex, "complex"));
  HalfSpaceFan delta;
  Outcome r;
  r.verdict = assemble_delta(fan_of(doc), phi, doc.gamma, &delta);
  r.result = json_of(delta);
  return r;
}

Outcome cmd_dual(const Options& o) {
  Document doc = load(o);
  Polyhedron dual = dual_cone(single_cone(doc));
  Outcome r;
  r.result = Json{{"dual", json_of(dual)}, {"rays", intvecs_json(dual.rays())}, {"lineality", intvecs_json(dual.lineality())}};
  return r;
}

Outcome cmd_hilbert(const Options& o) {
  Document doc = load(o);
  auto basis = hilbert_basis(single_cone(doc), doc.gamma);
  Json pairs = Json::array();
  for (auto& b : basis) {
    const Rat g = Rat(b.back()) * doc.gamma.unit();
    b.pop_back();
    pairs.push_back(Json{{"u", json_of(b)}, {"gamma", to_string(g)}});
  }
  Outcome r;
  r.result = Json{{"hilbert_basis", pairs}, {"size", pairs.size()}};
  return r;
}

Outcome cmd_member(const Options& o) {
  Document doc = load(o);
  const Polyhedron cone = single_cone(doc);
  const auto& terms = need(doc.terms, "terms");
  bool dd = semigroup_membership(cone, terms, MembershipRoute::DualDescription);
  bool lp = semigroup_membership(cone, terms, MembershipRoute::LinearProgram);
  Outcome r;
  if (dd != lp) {
    r.verdict = Verdict::unknown("membership routes disagree");
  } else {
    r.verdict = dd ? Verdict::proved(Json{{"routes_agree", true}}) : Verdict::refuted("some term lies outside the dual cone");
  }
  r.result = Json{{"member", dd}};
  return r;
}

Outcome cmd_finite_type(const Options& o) {
  Document doc = load(o);
  Outcome r;
  r.verdict = is_finite_type(halfspace_cones(doc).maximal_cells(), doc.gamma);
  return r;
}

Outcome cmd_closure(const Options& o) {
  Document doc = load(o);
  CompactifiedSet cl = compactified_closure(need(doc.polyhedron, "polyhedron"), fan_of(doc));
  Json pieces = Json::array();
  for (const auto& [sigma, piece] : cl.pieces) {
    pieces.push_back(Json{{"stratum", json_of(sigma)},
                          {"stratum_rays", intvecs_json(sigma.rays())},
                          {"projection", intvecs_json(make_stratum(sigma).projection)},
                          {"piece", json_of(piece)}});
  }
  Outcome r;
  r.result = Json{{"pieces", pieces}};
  return r;
}

Outcome cmd_locfin(const Options& o) {
  Document doc = load(o);
  Outcome r;
  if (doc.point) {
    r.verdict = locally_finite_at(phi_of(doc), fan_of(doc), *doc.point, o.window);
  } else {
    r.verdict = locally_finite_in_compactification(phi_of(doc), fan_of(doc), o.window);
  }
  return r;
}

Outcome cmd_condition_star(const Options& o) {
  Document doc = load(o);
  Outcome r;
  r.verdict = condition_star(phi_of(doc), fan_of(doc), o.window);
  return r;
}

Outcome cmd_verdict(const Options& o) {
  Document doc = load(o);
  Outcome r;
  r.verdict = domain_isomorphism_verdict(phi_of(doc), fan_of(doc), o.window);
  return r;
}

Outcome cmd_complete_fan(const Options& o) {
  Document doc = load(o);
  FanCompletion f = complete_fan(fan_of(doc));
  Outcome r;
  r.result = Json{{"fan", json_of(f.fan)}, {"weak", f.weak}, {"certificate", f.certificate}};
  if (f.weak) r.verdict = Verdict::unknown("weak completion: a refinement, not a completion of the input");
  return r;
}

Outcome cmd_complete_complex(const Options& o) {
  Document doc = load(o);
  Complex sigma = fan_of(doc);
  Complex phi = face_closure(doc.ambient_dim, doc.complex ? *doc.complex : std::vector<Polyhedron>{});
  Completion c = complete_complex(phi, sigma, doc.gamma);
  Outcome r;
  r.verdict = validate_completion(c.complex, phi, sigma, doc.gamma, o.window);
  r.result = Json{{"kind", std::string(to_string(c.kind))}, {"completion", json_of(c.complex)}};
  return r;
}

Outcome cmd_complete_model(const Options& o) {
  Document doc = load(o);
  HalfSpaceFan delta;
  delta.dim = doc.ambient_dim;
  delta.cones = halfspace_cones(doc);
  ModelReport rep = complete_model(delta, doc.gamma, o.window);
  Outcome r;
  r.verdict = rep.overall();
  r.result = to_json(rep);
  return r;
}

Outcome cmd_algebraize(const Options& o) {
  Document doc = load(o);
  ModelReport rep = algebraize(fan_of(doc), doc.gamma, o.window);
  Outcome r;
  r.verdict = rep.overall();
  r.result = to_json(rep);
  return r;
}

Outcome cmd_examples(const Options& o) {
  Outcome r;
  if (o.action == "list") {
    Json list = Json::array();
    for (const auto& e : list_examples()) list.push_back(Json{{"id", e.id}, {"summary", e.summary}});
    r.result = Json{{"examples", list}};
    return r;
  }
  if (o.example.empty()) throw Error(ErrorKind::Input, "examples " + o.action + " needs an example id");
  if (o.action == "show") {
    r.result = example_document(o.example);
    return r;
  }
  if (o.action != "run") throw Error(ErrorKind::Input, "examples action must be list, show or run");
  ExampleRun run = run_example(o.example, o.window);
  r.result = run.output;
  r.verdict = run.matches ? Verdict{run.headline, "", Json::object()}
                          : Verdict::unknown("result does not match the expected table");
  if (!run.matches) r.exit_code = 3;
  return r;
}

Outcome cmd_render(const Options& o) {
  Document doc = load(o);
  const std::size_t d = doc.ambient_dim;
  std::vector<Polyhedron> cells;
  if (doc.family_complex) {
    cells = render_cells(*doc.family_complex, o.n_max);
  } else if (doc.complex) {
    cells = face_closure(d, *doc.complex).cells;
  } else if (doc.fan) {
    cells = fan_of(doc).cells;
  } else {
    cells = {need(doc.polyhedron, "polyhedron, complex, fan or family_complex")};
  }
  Svg svg = export_svg(d, cells, parse_viewport(o.viewport));
  Outcome r;
  r.result = Json{{"census", {{"polygons", svg.census.polygons}, {"segments", svg.census.segments}, {"points", svg.census.points}}}};
  if (o.svg.empty()) {
    r.result["svg"] = svg.text;
  } else {
    std::ofstream f(o.svg);
    if (!f) throw Error(ErrorKind::Input, "cannot write " + o.svg);
    f << svg.text;
    r.result["svg_path"] = o.svg;
  }
  return r;
}

struct Command {
  const char* name;
  const char* help;
  std::function<Outcome(const Options&)> fn;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table{
      {"validate", "validate a polyhedron, complex, fan, halfspace fan or family complex", cmd_validate},
      {"admissible", "Gamma-admissibility of every cone of a halfspace fan", cmd_admissible},
      {"cone-over", "the cone c(P) over a polyhedron", cmd_cone_over},
      {"slices", "height slices ht_0 and ht_1 of a halfspace fan", cmd_slices},
      {"assemble", "build the halfspace fan from a fan and a complex", cmd_assemble},
      {"dual", "dual cone of a single admissible cone", cmd_dual},
      {"hilbert", "Hilbert basis of the dual cone (discrete Gamma)", cmd_hilbert},
      {"member", "membership of a Laurent polynomial in K[M]^sigma", cmd_member},
      {"finite-type", "finite-type test for the cones of a halfspace fan", cmd_finite_type},
      {"closure", "closure of a polyhedron in N_R(Sigma), stratum by stratum", cmd_closure},
      {"locfin", "local finiteness in N_R(Sigma), or at a point", cmd_locfin},
      {"condition-star", "condition (*) for the closures of the cells", cmd_condition_star},
      {"verdict", "whether the generic fiber maps isomorphically onto its image", cmd_verdict},
      {"complete-fan", "complete a fan", cmd_complete_fan},
      {"complete-complex", "complete a complex with recession cones in Sigma", cmd_complete_complex},
      {"complete-model", "complete a halfspace fan and certify the model", cmd_complete_model},
      {"algebraize", "model fan for a toric variety given by its fan", cmd_algebraize},
      {"examples", "list, show or run the canned examples", cmd_examples},
      {"render", "SVG of a complex, fan or truncated family complex", cmd_render},
  };
  return table;
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorKind::Input, "cannot write " + o.out);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact polyhedral tools for toric models over valuation rings", "toricval"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    by_app[sub] = &c;
    if (std::string(c.name) == "examples") {
      sub->add_option("action", o.action, "list, show or run")->required();
      sub->add_option("id", o.example, "example id");
    } else {
      sub->add_option("input", o.input, "toricval/1 document, or - for stdin");
      sub->add_option("--gamma", o.gamma, "value group: Z, Q, Z[1/p,...] or Z*q");
    }
    sub->add_option("--window", o.window, "family validation window")->check(CLI::Range(2L, 1000L));
    sub->add_option("--out", o.out, "write the JSON result here instead of stdout");
    if (std::string(c.name) == "render") {
      sub->add_option("--svg", o.svg, "write the SVG here");
      sub->add_option("--viewport", o.viewport, "xmin,xmax,ymin,ymax");
      sub->add_option("--n-max", o.n_max, "last family index drawn");
    }
  }

  std::vector<std::string> argv_store{"toricval"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << Json{{"error", {{"kind", "InputError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 3;
  }

  const Command* cmd = nullptr;
  for (auto* sub : app.get_subcommands()) cmd = by_app.at(sub);
  Json doc{{"command", cmd->name}};
  int code = 0;
  try {
    Outcome r = cmd->fn(o);
    doc["result"] = r.result;
    if (r.verdict) {
      doc["status"] = std::string(to_string(r.verdict->status));
      doc["verdict"] = to_json(*r.verdict);
      code = exit_code(r.verdict->status);
    }
    if (r.exit_code) code = *r.exit_code;
  } catch (const Error& e) {
    doc["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    code = 3;
  }
  try {
    emit(doc, o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 3;
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace toricval::cli
