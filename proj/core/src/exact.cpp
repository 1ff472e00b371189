#include "toricval/exact.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toricval {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::NotACone: return "NotACone";
    case ErrorKind::NotInUpperHalfSpace: return "NotInUpperHalfSpace";
    case ErrorKind::NotGammaRational: return "NotGammaRational";
    case ErrorKind::RecessionNotInSigma: return "RecessionNotInSigma";
    case ErrorKind::NonDiscreteGamma: return "NonDiscreteGamma";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::StratumMismatch: return "StratumMismatch";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int strip_primes(Int value, const std::vector<long>& primes) {
  for (long p : primes) {
    while (value != 0 && value % p == 0) value /= p;
  }
  return value;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::Input, "not a rational number: \"" + std::string(text) + "\"");
  }
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::Input, "zero denominator in \"" + std::string(text) + "\"");
  Rat r(n, d);
  return negative ? Rat(-r) : r;
}

std::string to_string(const Int& i) { return i.str(); }

std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
int sign(const Int& i) { return i > 0 ? 1 : (i < 0 ? -1 : 0); }

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Input, "dimension mismatch in dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Rat primitive_scale(const RatVec& v) {
  Int den_lcm = 1;
  for (const auto& x : v) {
    if (x != 0) den_lcm = lcm(den_lcm, denominator(x));
  }
  Int num_gcd = 0;
  for (const auto& x : v) {
    if (x != 0) num_gcd = gcd(num_gcd, numerator(x) * (den_lcm / denominator(x)));
  }
  if (num_gcd == 0) return 1;
  return Rat(den_lcm, boost::multiprecision::abs(num_gcd));
}

IntVec primitive(const RatVec& v) {
  Rat c = primitive_scale(v);
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rat y = c * x;
    out.push_back(numerator(y));
  }
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec operator*(const Rat& c, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> coeffs(degree + 1, Rat(0));
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::lead() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::eval(const Rat& n) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Poly Poly::shifted(long shift) const {
  // Horner in the polynomial ring: acc = acc * (n + shift) + c.
  Poly step(std::vector<Rat>{Rat(shift), Rat(1)});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + Poly::constant(*it);
  return acc;
}

Int Poly::root_bound() const {
  if (degree() <= 0) return 0;
  Rat m = 0;
  const Rat& l = coeffs_.back();
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    Rat r = boost::multiprecision::abs(coeffs_[i] / l);
    if (r > m) m = r;
  }
  Rat bound = 1 + m;
  return numerator(bound) / denominator(bound) + 1;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& c, const Poly& p) {
  std::vector<Rat> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rat a = boost::multiprecision::abs(c);
    if (i == 0 || a != 1) out += to_string(a);
    if (i >= 1) out += "n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(Poly num, Poly den, long domain_start)
    : num_(std::move(num)), den_(std::move(den)), domain_start_(domain_start) {
  if (den_.is_zero()) throw Error(ErrorKind::Input, "rational function with zero denominator");
  normalize_sign();
}

RatFun RatFun::constant(const Rat& c, long domain_start) {
  return RatFun(Poly::constant(c), Poly::constant(1), domain_start);
}

RatFun RatFun::polynomial(Poly p, long domain_start) {
  return RatFun(std::move(p), Poly::constant(1), domain_start);
}

void RatFun::normalize_sign() {
  Rat l = den_.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

Rat RatFun::eval(long n) const {
  if (n < domain_start_) {
    throw Error(ErrorKind::OutOfDomain,
                "n = " + std::to_string(n) + " is below the domain start " + std::to_string(domain_start_));
  }
  Rat d = den_.eval(Rat(n));
  if (d == 0) throw Error(ErrorKind::OutOfDomain, "denominator vanishes at n = " + std::to_string(n));
  return num_.eval(Rat(n)) / d;
}

bool RatFun::is_constant() const {
  if (num_.is_zero()) return true;
  if (num_.degree() != den_.degree()) return false;
  Rat c = num_.lead() / den_.lead();
  return num_ == c * den_;
}

int RatFun::eventual_sign() const { return sign(num_.lead()) * sign(den_.lead()); }

long RatFun::eventual_threshold() const {
  Int b = std::max(num_.root_bound(), den_.root_bound());
  long t = b.convert_to<long>();
  return std::max(t, domain_start_);
}

RatFun RatFun::shifted(long shift) const {
  return RatFun(num_.shifted(shift), den_.shifted(shift), domain_start_ - shift);
}

RatFun RatFun::with_domain_start(long n_min) const { return RatFun(num_, den_, n_min); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  long start = std::max(a.domain_start_, b.domain_start_);
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_, start);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, start);
}

RatFun operator-(const RatFun& a) { return RatFun(Rat(-1) * a.num_, a.den_, a.domain_start_); }

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  long start = std::max(a.domain_start_, b.domain_start_);
  return RatFun(a.num_ * b.num_, a.den_ * b.den_, start);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(ErrorKind::Input, "division by the zero rational function");
  long start = std::max(a.domain_start_, b.domain_start_);
  return RatFun(a.num_ * b.den_, a.den_ * b.num_, start);
}

bool RatFun::equals(const RatFun& other) const { return num_ * other.den_ == other.num_ * den_; }

std::string to_string(const RatFun& f) {
  if (f.den() == Poly::constant(1)) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

RfLimit rf_limit(const RatFun& f) {
  if (f.num().is_zero()) return {RfLimit::Kind::Finite, 0};
  int dn = f.num().degree();
  int dd = f.den().degree();
  if (dn < dd) return {RfLimit::Kind::Finite, 0};
  if (dn == dd) return {RfLimit::Kind::Finite, f.num().lead() / f.den().lead()};
  return f.eventual_sign() > 0 ? RfLimit{RfLimit::Kind::PlusInfinity, 0}
                               : RfLimit{RfLimit::Kind::MinusInfinity, 0};
}

// ---------------------------------------------------------------------------
// GammaSpec

GammaSpec::GammaSpec(Kind kind, Rat unit, std::vector<long> primes)
    : kind_(kind), unit_(std::move(unit)), primes_(std::move(primes)) {
  normalize();
}

void GammaSpec::normalize() {
  if (kind_ == Kind::Divisible) {
    unit_ = 1;
    primes_.clear();
    return;
  }
  if (unit_ == 0) throw Error(ErrorKind::Input, "value group generator must be nonzero");
  unit_ = boost::multiprecision::abs(unit_);
  if (kind_ == Kind::PrimeLocalized) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (long p : primes_) {
      if (!is_prime(p)) throw Error(ErrorKind::Input, std::to_string(p) + " is not a prime");
    }
    if (primes_.empty()) {
      kind_ = Kind::Discrete;
    } else {
      unit_ = Rat(strip_primes(numerator(unit_), primes_), strip_primes(denominator(unit_), primes_));
    }
  }
}

GammaSpec GammaSpec::discrete(const Rat& unit) { return GammaSpec(Kind::Discrete, unit, {}); }
GammaSpec GammaSpec::divisible() { return GammaSpec(Kind::Divisible, 1, {}); }
GammaSpec GammaSpec::prime_localized(std::vector<long> primes, const Rat& unit) {
  return GammaSpec(Kind::PrimeLocalized, unit, std::move(primes));
}

GammaSpec GammaSpec::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto fail = [&]() -> GammaSpec {
    throw Error(ErrorKind::Input, "unrecognised value group \"" + std::string(text) +
                                      "\" (expected Z, Q, Z[1/p,...] or Z*q)");
  };
  if (s == "Q") return divisible();
  if (s.empty() || s.front() != 'Z') return fail();
  s.remove_prefix(1);
  std::vector<long> primes;
  if (!s.empty() && s.front() == '[') {
    auto close = s.find(']');
    if (close == std::string_view::npos) return fail();
    std::string_view inside = s.substr(1, close - 1);
    s.remove_prefix(close + 1);
    while (!inside.empty()) {
      auto comma = inside.find(',');
      std::string_view item = trim(inside.substr(0, comma));
      if (item.size() < 3 || item.substr(0, 2) != "1/" || !all_digits(item.substr(2))) return fail();
      primes.push_back(std::stol(std::string(item.substr(2))));
      if (comma == std::string_view::npos) break;
      inside.remove_prefix(comma + 1);
    }
    if (primes.empty()) return fail();
  }
  Rat unit = 1;
  if (!s.empty()) {
    if (s.front() != '*') return fail();
    unit = parse_rat(s.substr(1));
    if (unit <= 0) return fail();
  }
  if (primes.empty()) return discrete(unit);
  return prime_localized(std::move(primes), unit);
}

bool GammaSpec::contains(const Rat& x) const { return multiplier(x) == 1; }

Int GammaSpec::multiplier(const Rat& x) const {
  switch (kind_) {
    case Kind::Divisible: return 1;
    case Kind::Discrete: return denominator(Rat(x / unit_));
    case Kind::PrimeLocalized: return strip_primes(denominator(Rat(x / unit_)), primes_);
  }
  return 1;
}

GammaSpec GammaSpec::scaled_down(const Int& e) const {
  if (e <= 0) throw Error(ErrorKind::Input, "ramification index must be positive");
  if (kind_ == Kind::Divisible) return *this;
  return GammaSpec(kind_, unit_ / Rat(e), primes_);
}

Rat GammaSpec::step() const { return kind_ == Kind::Divisible ? Rat(1) : unit_; }

std::string GammaSpec::to_string() const {
  std::string out;
  switch (kind_) {
    case Kind::Divisible: return "Q";
    case Kind::Discrete: out = "Z"; break;
    case Kind::PrimeLocalized: {
      out = "Z[";
      for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) out += ",";
        out += "1/" + std::to_string(primes_[i]);
      }
      out += "]";
      break;
    }
  }
  if (unit_ != 1) out += "*" + toricval::to_string(unit_);
  return out;
}

}  // namespace toricval
