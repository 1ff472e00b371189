#include "toricval/verdict.hpp"

namespace toricval {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Proved: return "Proved";
    case Status::Refuted: return "Refuted";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

Verdict Verdict::proved(Json cert) { return Verdict{Status::Proved, "", std::move(cert)}; }

Verdict Verdict::refuted(std::string reason, Json witness) {
  return Verdict{Status::Refuted, std::move(reason), std::move(witness)};
}

Verdict Verdict::unknown(std::string reason, Json cert) {
  return Verdict{Status::Unknown, std::move(reason), std::move(cert)};
}

Verdict combine(const std::vector<std::pair<std::string, Verdict>>& parts) {
  Json cert = Json::object();
  const Verdict* refuted = nullptr;
  const Verdict* unknown = nullptr;
  std::string refuted_name, unknown_name;
  for (const auto& [name, v] : parts) {
    cert[name] = to_json(v);
    if (v.is_refuted() && !refuted) {
      refuted = &v;
      refuted_name = name;
    } else if (v.is_unknown() && !unknown) {
      unknown = &v;
      unknown_name = name;
    }
  }
  if (refuted) return Verdict::refuted(refuted_name + ": " + refuted->reason, cert);
  if (unknown) return Verdict::unknown(unknown_name + ": " + unknown->reason, cert);
  return Verdict::proved(cert);
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  return j;
}

Json json_of(const Rat& r) { return to_string(r); }

Json json_of(const RatVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json json_of(const IntVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json json_of(const HalfSpace& h) {
  Json u = Json::array();
  static const Int limit = Int(1) << 53;
  for (const auto& x : h.u) {
    if (is_integer(x) && abs(numerator(x)) < limit) u.push_back(numerator(x).convert_to<long long>());
    else u.push_back(to_string(x));
  }
  return Json{{"u", u}, {"gamma", to_string(h.gamma)}};
}

Json json_of(const Polyhedron& p) {
  Json j;
  if (p.is_empty()) {
    j["empty"] = true;
    return j;
  }
  j["ineqs"] = Json::array();
  for (const auto& h : p.ineqs()) j["ineqs"].push_back(json_of(h));
  if (!p.eqs().empty()) {
    j["eqs"] = Json::array();
    for (const auto& h : p.eqs()) j["eqs"].push_back(json_of(h));
  }
  return j;
}

}  // namespace toricval
