#include "gjs/scalar.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace gjs {

namespace {
const Rat kZeroRat = Rat(0);
}

Poly::Poly(const Rat& c) {
  if (c != 0) {
    c_.push_back(c);
    // GMP rationals built from a separate numerator and denominator are not
    // reduced automatically; structural equality needs canonical form.
    c_.back().canonicalize();
  }
}

Poly::Poly(long c) {
  if (c != 0) c_.push_back(Rat(c));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::var() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroRat;
  return c_[k];
}

const Rat& Poly::leading() const { return c_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

void Poly::divmod(const Poly& a, const Poly& div, Poly& q, Poly& r) {
  if (div.is_zero()) throw pole_error("polynomial division by zero");
  r = a;
  q = Poly();
  std::vector<Rat> qc(a.degree() >= div.degree()
                          ? static_cast<std::size_t>(a.degree() - div.degree() + 1)
                          : 0,
                      Rat(0));
  while (!r.is_zero() && r.degree() >= div.degree()) {
    int k = r.degree() - div.degree();
    Rat f = r.leading() / div.leading();
    qc[static_cast<std::size_t>(k)] = f;
    // r -= f * d^k * div
    std::vector<Rat> sub(static_cast<std::size_t>(k), Rat(0));
    sub.insert(sub.end(), div.c_.begin(), div.c_.end());
    for (auto& c : sub) c *= f;
    r = r - Poly(std::move(sub));
  }
  q = Poly(std::move(qc));
}

Poly Poly::operator/(const Poly& o) const {
  Poly q, r;
  divmod(*this, o, q, r);
  if (!r.is_zero()) throw std::runtime_error("inexact polynomial division");
  return q;
}

Poly Poly::operator%(const Poly& o) const {
  Poly q, r;
  divmod(*this, o, q, r);
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  // Invariants: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  Poly r0 = a, r1 = b, s0(1), s1(0), t0(0), t1(1);
  while (!r1.is_zero()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.is_zero()) { s = s0; t = t0; return r0; }
  Rat lc = r0.leading();
  Poly scale(Rat(1) / lc);
  s = s0 * scale;
  t = t0 * scale;
  return r0 * scale;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rat lc = leading();
  for (auto& c : r.c_) c /= lc;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat xc = x;
  xc.canonicalize();
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xc + *it;
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + it->get_d();
  return acc;
}

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string term_str(const Rat& abs_coeff, int k) {
  if (k == 0) return rat_str(abs_coeff);
  std::string dpart = (k == 1) ? "d" : "d^" + std::to_string(k);
  if (abs_coeff == 1) return dpart;
  return rat_str(abs_coeff) + "*" + dpart;
}

}  // namespace

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeff(k);
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      out += term_str(a, k);
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
      out += term_str(a, k);
    }
  }
  return out;
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw pole_error("zero denominator");
  reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Rat lc = den_.leading();
  if (lc != 1) {
    Poly scale(Rat(1) / lc);
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

bool Scalar::is_integer_constant() const {
  if (den_ != Poly(1)) return false;
  if (num_.degree() > 0) return false;
  Rat c = num_.coeff(0);
  return c.get_den() == 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw pole_error("division by zero scalar");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw pole_error("inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::one(), base = *this;
  auto u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1ul) r = r * base;
    base = base * base;
    u >>= 1ul;
  }
  return r;
}

std::string Scalar::str() const {
  if (den_ == Poly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Parsing: expr := term (('+'|'-') term)*
//          term := unary (('*'|'/') unary)*
//          unary := '-' unary | power
//          power := primary ('^' INT)?
//          primary := INT | 'd' | '(' expr ')'
// This grammar covers everything the printer emits.
// ---------------------------------------------------------------------------
namespace {

struct ScalarParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ScalarParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw parse_error(std::string("expected '") + c + "'", pos);
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) throw parse_error("expected integer", pos);
    return std::stol(s.substr(start, pos - start));
  }

  Scalar primary() {
    skip_ws();
    if (pos >= s.size()) throw parse_error("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Scalar r = expr();
      expect(')');
      return r;
    }
    if (c == 'd') {
      ++pos;
      return Scalar::delta();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(parse_int());
    throw parse_error("expected number, 'd' or '('", pos);
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      long e = parse_int();
      return base.pow(e);
    }
    return base;
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar term() {
    Scalar r = unary();
    for (;;) {
      if (accept('*')) r = r * unary();
      else if (accept('/')) r = r / unary();
      else return r;
    }
  }

  Scalar expr() {
    Scalar r = term();
    for (;;) {
      if (accept('+')) r = r + term();
      else if (accept('-')) r = r - term();
      else return r;
    }
  }

  Scalar run() {
    Scalar r = expr();
    skip_ws();
    if (pos != s.size()) throw parse_error("trailing input", pos);
    return r;
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  return ScalarParser(text).run();
}

// ---------------------------------------------------------------------------

DeltaSpec DeltaSpec::numeric(double v) {
  if (!(v > 1.0))
    throw std::invalid_argument("numeric delta must be > 1");
  DeltaSpec d;
  d.mode = Mode::Numeric;
  d.value = v;
  return d;
}

DeltaSpec DeltaSpec::root_of_unity(int m) {
  if (m < 3) throw std::invalid_argument("root-of-unity order must be >= 3");
  DeltaSpec d;
  d.mode = Mode::RootOfUnity;
  d.m = m;
  return d;
}

DeltaSpec DeltaSpec::parse(const std::string& text) {
  if (text == "generic") return generic();
  if (text.rfind("cos:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(text.substr(4));
    } catch (const std::exception&) {
      throw parse_error("malformed cos:M delta spec", 4);
    }
    return root_of_unity(m);
  }
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw parse_error("malformed delta value", used);
    return numeric(v);
  } catch (const std::invalid_argument&) {
    throw parse_error("malformed delta spec '" + text + "'", 0);
  }
}

double DeltaSpec::delta_value() const {
  switch (mode) {
    case Mode::Numeric: return value;
    case Mode::RootOfUnity: return 2.0 * std::cos(std::acos(-1.0) / m);
    case Mode::Generic:
      throw std::invalid_argument("generic delta has no numeric value");
  }
  return 0.0;
}

std::string DeltaSpec::str() const {
  switch (mode) {
    case Mode::Generic: return "generic";
    case Mode::Numeric: {
      std::ostringstream os;
      os << value;
      return os.str();
    }
    case Mode::RootOfUnity: return "cos:" + std::to_string(m);
  }
  return "";
}

Poly quantum_poly(int n) {
  if (n < 0) throw std::invalid_argument("quantum integer needs n >= 0");
  Poly prev(0), cur(1);  // [0], [1]
  if (n == 0) return prev;
  Poly x = Poly::var();
  for (int k = 1; k < n; ++k) {
    Poly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Scalar quantum_integer(int n) { return Scalar(quantum_poly(n), Poly(1)); }

Poly two_cos_multiple(int m) {
  // p_0 = 2, p_1 = d, p_{k+1} = d*p_k - p_{k-1}; p_m(2cos t) = 2cos(mt).
  Poly prev(2), cur = Poly::var();
  if (m == 0) return prev;
  Poly x = Poly::var();
  for (int k = 1; k < m; ++k) {
    Poly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

const Poly& minpoly_two_cos_pi_over(int m) {
  static std::map<int, Poly> memo;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  if (m < 2) throw std::invalid_argument("minpoly needs m >= 2");
  // gcd([m], p_m + 2) has roots {2cos(j pi/m) : j odd}; the conjugates of
  // 2cos(pi/m) are the j coprime to 2m, and the spurious odd-j roots are
  // exactly the conjugates of 2cos(pi/(m/g)) for proper odd cofactors m/g...
  // i.e. gcd = prod over d | m, d >= 2, m/d odd of minpoly(2cos(pi/d)).
  Poly g = Poly::gcd(quantum_poly(m), two_cos_multiple(m) + Poly(2));
  for (int d = 2; d < m; ++d) {
    if (m % d != 0) continue;
    if ((m / d) % 2 == 0) continue;
    g = g / minpoly_two_cos_pi_over(d);
  }
  return memo.emplace(m, g.monic()).first->second;
}

double evaluate(const Scalar& s, const DeltaSpec& spec) {
  switch (spec.mode) {
    case DeltaSpec::Mode::Generic:
      throw std::invalid_argument("cannot evaluate at generic delta");
    case DeltaSpec::Mode::RootOfUnity: {
      const Poly& psi = minpoly_two_cos_pi_over(spec.m);
      if ((s.den() % psi).is_zero())
        throw pole_error("specialization pole at delta = 2cos(pi/" +
                         std::to_string(spec.m) + ")");
      double x = spec.delta_value();
      return s.num().eval(x) / s.den().eval(x);
    }
    case DeltaSpec::Mode::Numeric: {
      double dv = s.den().eval(spec.value);
      if (std::abs(dv) < 1e-12)
        throw pole_error("specialization pole near delta = " +
                         std::to_string(spec.value));
      return s.num().eval(spec.value) / dv;
    }
  }
  return 0.0;
}

bool is_zero_at(const Scalar& s, const DeltaSpec& spec, double tol) {
  switch (spec.mode) {
    case DeltaSpec::Mode::Generic:
      return s.is_zero();
    case DeltaSpec::Mode::RootOfUnity: {
      const Poly& psi = minpoly_two_cos_pi_over(spec.m);
      if ((s.den() % psi).is_zero())
        throw pole_error("specialization pole at delta = 2cos(pi/" +
                         std::to_string(spec.m) + ")");
      return (s.num() % psi).is_zero();
    }
    case DeltaSpec::Mode::Numeric:
      return std::abs(evaluate(s, spec)) <= tol;
  }
  return false;
}

Poly reduce_at_root(const Scalar& s, int m) {
  const Poly& psi = minpoly_two_cos_pi_over(m);
  Poly dr = s.den() % psi;
  if (dr.is_zero())
    throw pole_error("specialization pole at delta = 2cos(pi/" +
                     std::to_string(m) + ")");
  // psi is irreducible, so dr is invertible mod psi.
  Poly u, v;
  Poly g = Poly::ext_gcd(dr, psi, u, v);
  if (g.degree() != 0)
    throw pole_error("unexpected gcd while inverting mod minpoly");
  Poly inv = (u / g) % psi;
  return (s.num() * inv) % psi;
}

}  // namespace gjs
