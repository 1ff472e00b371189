// Three-valued verdicts carrying JSON certificates.
#pragma once

#include "toricval/polyhedron.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace toricval {

using Json = nlohmann::json;

enum class Status { Proved, Refuted, Unknown };

std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::string reason;
  Json certificate = Json::object();

  static Verdict proved(Json cert = Json::object());
  static Verdict refuted(std::string reason, Json witness = Json::object());
  static Verdict unknown(std::string reason, Json cert = Json::object());

  bool is_proved() const { return status == Status::Proved; }
  bool is_refuted() const { return status == Status::Refuted; }
  bool is_unknown() const { return status == Status::Unknown; }
};

/// Conjunction: Refuted dominates Unknown dominates Proved; first offender wins.
Verdict combine(const std::vector<std::pair<std::string, Verdict>>& parts);

Json to_json(const Verdict& v);

// Certificate encoders shared by every module.
Json json_of(const Rat& r);
Json json_of(const RatVec& v);
Json json_of(const IntVec& v);
Json json_of(const HalfSpace& h);
/// {"ineqs":[...], "eqs":[...]} in canonical form.
Json json_of(const Polyhedron& p);

}  // namespace toricval
