// The "toricval/1" JSON document format.
#pragma once

#include "toricval/compactification.hpp"
#include "toricval/completion.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricval {

inline constexpr std::string_view kFormat = "toricval/1";

/// A parsed document. The payload object may carry several of the optional
/// members at once; commands pick the ones they need.
struct Document {
  GammaSpec gamma = GammaSpec::discrete();
  std::size_t ambient_dim = 0;

  std::optional<Polyhedron> polyhedron;
  std::optional<std::vector<Polyhedron>> complex;  // cells as listed, not face-closed
  std::optional<std::vector<Polyhedron>> fan;
  std::optional<std::vector<Polyhedron>> halfspace_fan;  // cones in R^{d+1}
  std::optional<FamilyComplex> family_complex;
  std::optional<std::vector<MonomialTerm>> terms;
  std::optional<StratumPoint> point;
  std::optional<Json> report;
};

/// Throws Error(Input) with line and column on malformed JSON, and
/// Error(NotGammaRational) naming the row when a constant is outside Gamma.
/// A non-null gamma_override replaces the document's own "gamma".
Document parse_document(std::string_view text, const GammaSpec* gamma_override = nullptr);
Document document_from_json(const Json& j, const GammaSpec* gamma_override = nullptr);
Json print_document(const Document& doc);

Rat rat_from_json(const Json& j);
RatVec ratvec_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j, long n_min);
/// Accepts {"ineqs","eqs"} or {"vertices","rays","lineality"}.
Polyhedron polyhedron_from_json(const Json& j, std::size_t d);
FamilyComplex family_complex_from_json(const Json& j, std::size_t d);

Json json_of(const Poly& p);
Json json_of(const RatFun& f);
Json json_of(const Complex& c);  // maximal cells only
Json json_of(const FamilyComplex& phi);
Json json_of(const HalfSpaceFan& delta);
Json to_json(const ModelReport& r);

/// The document skeleton with format, gamma and ambient_dim filled in.
Json document_header(const GammaSpec& gamma, std::size_t d);

}  // namespace toricval
