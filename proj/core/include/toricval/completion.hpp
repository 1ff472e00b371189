// Completion of fans and complexes, and the end-to-end model pipelines.
#pragma once

#include "toricval/admissible.hpp"
#include "toricval/families.hpp"

#include <map>
#include <optional>
#include <string>

namespace toricval {

struct FanCompletion {
  Complex fan;
  bool weak = false;  // d >= 3: arrangement refinement, need not contain the input
  Json certificate = Json::object();
};

FanCompletion complete_fan(const Complex& sigma);
/// Every 2-cone spans less than pi and consecutive rays bound a 2-cone.
bool is_complete_fan_2d(const Complex& sigma);

enum class CompletionKind { Finite, Families, WeakOnly };
std::string_view to_string(CompletionKind k);

struct Completion {
  FamilyComplex complex;
  CompletionKind kind = CompletionKind::Finite;
};

/// Exact for d = 1 and for d = 2 with Sigma complete; otherwise a weak
/// arrangement completion. Throws RecessionNotInSigma.
Completion complete_complex(const Complex& phi, const Complex& sigma, const GammaSpec& gamma);

/// Vertices (and affine vertex paths of families) in N_Gamma; Proved for discrete Gamma.
Verdict vertices_in_gamma(const FamilyComplex& phi, const GammaSpec& gamma);

/// (a) subcomplex, (b) coverage of N_R, (c) recession cones in Sigma,
/// (d) vertices in N_Gamma for non-discrete Gamma, (e) local finiteness in N_R(Sigma).
Verdict validate_completion(const FamilyComplex& phi_bar, const Complex& phi, const Complex& sigma,
                            const GammaSpec& gamma, long window = 8);

struct ModelReport {
  Json input;
  Int e = 1;
  GammaSpec gamma_effective = GammaSpec::discrete();
  Complex sigma;
  Complex phi;
  FamilyComplex phi_bar;
  HalfSpaceFan delta_bar;  // the finite part of the completed fan
  CompletionKind kind = CompletionKind::Finite;
  std::map<std::string, Verdict> verdicts;
  bool subfan = false;
  bool ht0_preserved = false;
  bool rec_equals_sigma = false;
  std::optional<FanCompletion> sigma_prime;  // set by algebraize

  /// Conjunction of the verdicts with the structural checks.
  Verdict overall() const;
};

ModelReport complete_model(const HalfSpaceFan& delta, const GammaSpec& gamma, long window = 8);
/// Reports the fan completion Sigma' and runs complete_model on {c(sigma)} cup {sigma x 0}, sigma in Sigma.
ModelReport algebraize(const Complex& sigma, const GammaSpec& gamma, long window = 8);

}  // namespace toricval
