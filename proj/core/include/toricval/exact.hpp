// Exact scalars for toricval: arbitrary precision rationals and integers,
// univariate polynomials and rational functions in a family index n, and
// value groups Gamma inside Q.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toricval {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

/// Every failure the library reports through an exception carries one of
/// these kinds so the CLI can map it onto an exit code.
enum class ErrorKind {
  Input,
  NotPointed,
  Empty,
  NotACone,
  NotInUpperHalfSpace,
  NotGammaRational,
  RecessionNotInSigma,
  NonDiscreteGamma,
  OutOfDomain,
  StratumMismatch,
  UnsupportedDimension,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Rationals and vectors

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Int& i);
std::string to_string(const RatVec& v);

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rat& r) { return denominator(r) == 1; }
int sign(const Rat& r);
int sign(const Int& i);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Rat dot(const RatVec& a, const RatVec& b);
RatVec to_rat(const IntVec& v);
/// Positive multiple of v that is a primitive integer vector; zero stays zero.
IntVec primitive(const RatVec& v);
/// The positive factor c with c*v == primitive(v); 1 for the zero vector.
Rat primitive_scale(const RatVec& v);
bool is_zero(const RatVec& v);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& c, const RatVec& v);

/// Half-space <u, w> >= gamma. Used both for primitive integer rows of
/// canonical polyhedra and for raw rational rows fed to the LP layer.
struct HalfSpace {
  RatVec u;
  Rat gamma;

  bool operator==(const HalfSpace&) const = default;
};

// ---------------------------------------------------------------------------
// Polynomials and rational functions in the family parameter n

/// Coefficients are stored low degree first with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t degree);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat lead() const;
  Rat eval(const Rat& n) const;
  /// p(n + shift)
  Poly shifted(long shift) const;
  /// Smallest integer N such that p has no real root >= N (Cauchy bound).
  Int root_bound() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& c, const Poly& p);
  bool operator==(const Poly& other) const = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

std::string to_string(const Poly& p);

struct RfLimit {
  enum class Kind { Finite, PlusInfinity, MinusInfinity };
  Kind kind = Kind::Finite;
  Rat value;

  bool is_finite() const { return kind == Kind::Finite; }
  bool operator==(const RfLimit&) const = default;
};

/// num(n) / den(n) for integer n >= domain_start.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  RatFun(Poly num, Poly den, long domain_start);
  static RatFun constant(const Rat& c, long domain_start = 0);
  static RatFun polynomial(Poly p, long domain_start = 0);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  long domain_start() const { return domain_start_; }

  Rat eval(long n) const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  /// Sign of f(n) for all sufficiently large n.
  int eventual_sign() const;
  /// An integer N with f(n) having its eventual sign (or being zero) for n >= N.
  long eventual_threshold() const;
  RatFun shifted(long shift) const;
  RatFun with_domain_start(long n_min) const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a);

  /// Exact identity as functions (cross multiplication).
  bool equals(const RatFun& other) const;

 private:
  void normalize_sign();
  Poly num_;
  Poly den_;
  long domain_start_ = 0;
};

std::string to_string(const RatFun& f);

/// Limit of f(n) as n -> infinity, from degrees and leading coefficients.
RfLimit rf_limit(const RatFun& f);

using RatFunVec = std::vector<RatFun>;

// ---------------------------------------------------------------------------
// Value groups

/// A subgroup of Q: unit * Z, Q, or unit * Z[1/p : p in primes].
class GammaSpec {
 public:
  enum class Kind { Discrete, Divisible, PrimeLocalized };

  static GammaSpec discrete(const Rat& unit = 1);
  static GammaSpec divisible();
  static GammaSpec prime_localized(std::vector<long> primes, const Rat& unit = 1);
  /// Accepts "Z", "Q", "Z[1/2,1/3]", "Z*q", "Z[1/2]*q".
  static GammaSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Rat& unit() const { return unit_; }
  const std::vector<long>& primes() const { return primes_; }

  bool is_discrete() const { return kind_ == Kind::Discrete; }
  bool is_divisible() const { return kind_ == Kind::Divisible; }

  bool contains(const Rat& x) const;
  /// Smallest positive integer k with k * x in Gamma.
  Int multiplier(const Rat& x) const;
  /// The group (1/e) * Gamma.
  GammaSpec scaled_down(const Int& e) const;
  /// The step used for unit-translate families: the generator unit, or 1 for Q.
  Rat step() const;

  std::string to_string() const;
  bool operator==(const GammaSpec&) const = default;

 private:
  GammaSpec(Kind kind, Rat unit, std::vector<long> primes);
  void normalize();
  Kind kind_ = Kind::Discrete;
  Rat unit_ = 1;
  std::vector<long> primes_;
};

}  // namespace toricval
