#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gjs {

using Rat = mpq_class;

// Raised when a denominator (or a quantum integer inside a recursion)
// vanishes at the chosen specialization of d.
struct pole_error : std::runtime_error {
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed textual input; `pos` is a 0-based character offset.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& what, std::size_t pos_)
      : std::runtime_error(what), pos(pos_) {}
};

// Univariate polynomial over Q in the loop parameter d.
// Coefficients are stored ascending by degree; trailing zeros are trimmed,
// so degree() is size-1 (and -1 for the zero polynomial).
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT: implicit constant
  Poly(long c);        // NOLINT
  explicit Poly(std::vector<Rat> coeffs);

  static Poly var();  // the polynomial d

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int k) const;       // 0 outside range
  const Rat& leading() const;          // precondition: nonzero

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  // Field-coefficient division: *this = q*div + r with deg r < deg div.
  static void divmod(const Poly& a, const Poly& div, Poly& q, Poly& r);
  Poly operator/(const Poly& o) const;  // exact division; throws if remainder
  Poly operator%(const Poly& o) const;

  static Poly gcd(Poly a, Poly b);  // monic gcd
  // g = gcd(a,b) = s*a + t*b (extended Euclid; g monic).
  static Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

  Poly monic() const;
  Poly pow(unsigned e) const;

  Rat eval(const Rat& x) const;
  double eval(double x) const;

  std::string str() const;  // canonical: descending degree, symbol `d`

 private:
  void trim();
  std::vector<Rat> c_;
};

// Exact rational function in d: reduced fraction with monic denominator.
// Equality is structural (canonical form), hence decidable.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}  // NOLINT
  Scalar(const Rat& v) : num_(v), den_(1) {}  // NOLINT
  Scalar(Poly num, Poly den);

  static Scalar delta() { return Scalar(Poly::var(), Poly(1)); }
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }
  // True when the value is a constant rational with denominator 1.
  bool is_integer_constant() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws pole_error on /0
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(long e) const;  // negative exponents allowed

  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  void reduce();
  Poly num_, den_;
};

// Where d lives: fully symbolic, a numeric value > 1, or 2cos(pi/m).
struct DeltaSpec {
  enum class Mode { Generic, Numeric, RootOfUnity };
  Mode mode = Mode::Generic;
  double value = 0.0;  // Numeric mode
  int m = 0;           // RootOfUnity mode; delta = 2cos(pi/m), m >= 3

  static DeltaSpec generic() { return DeltaSpec{}; }
  static DeltaSpec numeric(double v);
  static DeltaSpec root_of_unity(int m);
  // Accepts "generic", "cos:M", or a decimal number.
  static DeltaSpec parse(const std::string& text);

  bool is_generic() const { return mode == Mode::Generic; }
  double delta_value() const;  // not valid in Generic mode
  std::string str() const;
};

// [n]: [0]=0, [1]=1, [n+1] = d*[n] - [n-1].
Scalar quantum_integer(int n);
Poly quantum_poly(int n);

// 2cos(m*theta) as a polynomial in x = 2cos(theta).
Poly two_cos_multiple(int m);

// Minimal polynomial of 2cos(pi/m) over Q, m >= 2 (monic, irreducible).
const Poly& minpoly_two_cos_pi_over(int m);

// Numeric evaluation of a reduced fraction; throws pole_error when the
// denominator vanishes at the specialization point (exactly detected in
// root-of-unity mode, since the minimal polynomial is irreducible).
double evaluate(const Scalar& s, const DeltaSpec& spec);

// Zero test under a specialization: exact in Generic and RootOfUnity modes,
// tolerance-based in Numeric mode.
bool is_zero_at(const Scalar& s, const DeltaSpec& spec, double tol = 1e-9);

// Canonical representative of s evaluated in Q[d]/(minpoly(2cos(pi/m))).
// Throws pole_error if the denominator vanishes there.
Poly reduce_at_root(const Scalar& s, int m);

}  // namespace gjs
