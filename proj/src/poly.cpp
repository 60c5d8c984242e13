#include "liespec/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liespec {

HomogeneousPolynomial HomogeneousPolynomial::constant(int nvars, const Rat& c) {
  HomogeneousPolynomial p(nvars, 0);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(int nvars, const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("monomial: exponent arity mismatch");
  HomogeneousPolynomial p(nvars, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  p.add_term(e, c);
  return p;
}

HomogeneousPolynomial HomogeneousPolynomial::radial_power(int nvars, int m) {
  HomogeneousPolynomial r2(nvars, 2);
  for (int i = 0; i < nvars; ++i) {
    Exponents e(nvars, 0);
    e[i] = 2;
    r2.add_term(e, 1);
  }
  HomogeneousPolynomial acc = constant(nvars, 1);
  for (int i = 0; i < m; ++i) acc = acc * r2;
  return acc;
}

void HomogeneousPolynomial::add_term(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("add_term: exponent arity mismatch");
  unsigned d = std::accumulate(e.begin(), e.end(), 0u);
  if (terms_.empty() && degree_ == 0) degree_ = static_cast<int>(d);
  if (static_cast<int>(d) != degree_)
    throw std::invalid_argument("add_term: term degree breaks homogeneity");
  Rat cc = c;
  cc.canonicalize();
  Rat& slot = terms_[e];
  slot += cc;
  if (slot == 0) terms_.erase(e);
}

HomogeneousPolynomial HomogeneousPolynomial::operator+(const HomogeneousPolynomial& o) const {
  if (nvars_ != o.nvars_ || (!is_zero() && !o.is_zero() && degree_ != o.degree_))
    throw std::invalid_argument("polynomial +: mismatched arity or degree");
  HomogeneousPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(const HomogeneousPolynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial *: arity mismatch");
  HomogeneousPolynomial r(nvars_, degree_ + o.degree_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(const Rat& c) const {
  HomogeneousPolynomial r(nvars_, degree_);
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
  return r;
}

Rat HomogeneousPolynomial::eval(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("eval: arity mismatch");
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
    sum += t;
  }
  sum.canonicalize();
  return sum;
}

Rat HomogeneousPolynomial::eval_scaled(const std::vector<long>& y, const Int& q) const {
  Int num = eval_int_num(y);
  Rat r(num, common_den() * int_pow(q, static_cast<unsigned long>(degree_)));
  r.canonicalize();
  return r;
}

Int HomogeneousPolynomial::common_den() const {
  Int den = 1;
  for (const auto& [e, c] : terms_)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  return den;
}

Int HomogeneousPolynomial::eval_int_num(const std::vector<long>& y) const {
  Int den = common_den();
  Int sum = 0;
  Int t;
  for (const auto& [e, c] : terms_) {
    t = c.get_num() * (den / c.get_den());
    for (int i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= y[i];
    sum += t;
  }
  return sum;
}

std::string HomogeneousPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

// \int_{B_1^n} prod x_i^{e_i} dx  (all e_i even, p = sum e_i):
//   2/(p+n) * prod Gamma((e_i+1)/2) / Gamma((p+n)/2)
// and the sphere integral is the same without the 2/(p+n) radial factor times
// ... precisely: \int_{S^{n-1}} = 2 prod Gamma((e_i+1)/2) / Gamma((p+n)/2).
PiScaled monomial_sphere_integral(const HomogeneousPolynomial::Exponents& e) {
  int n = static_cast<int>(e.size());
  long p = 0;
  for (unsigned k : e) {
    if (k % 2 == 1) return {Rat(0), 0};
    p += k;
  }
  Rat coeff = 2;
  int sqrt_pi_count = 0;
  for (unsigned k : e) {
    HalfGamma g = gamma_half(static_cast<long>(k) + 1);
    coeff *= g.r;
    if (g.sqrt_pi) ++sqrt_pi_count;
  }
  HalfGamma gd = gamma_half(p + n);
  coeff /= gd.r;
  if (gd.sqrt_pi) --sqrt_pi_count;
  if (sqrt_pi_count % 2 != 0)
    throw std::logic_error("monomial_sphere_integral: stray sqrt(pi)");
  return {coeff, sqrt_pi_count / 2};
}

}  // namespace

PiScaled sphere_integral_exact(const HomogeneousPolynomial& F) {
  PiScaled total{Rat(0), 0};
  for (const auto& [e, c] : F.terms()) {
    PiScaled m = monomial_sphere_integral(e);
    if (m.coeff == 0) continue;
    m.coeff *= c;
    if (total.coeff == 0) total = m;
    else if (total.pi_pow == m.pi_pow) total.coeff += m.coeff;
    else throw std::logic_error("sphere_integral_exact: inconsistent pi powers");
  }
  return total;
}

PiScaled ball_integral_exact(const HomogeneousPolynomial& F) {
  PiScaled s = sphere_integral_exact(F);
  s.coeff /= F.degree() + F.nvars();
  return s;
}

PiScaled sphere_area_exact(int n) {
  HomogeneousPolynomial one = HomogeneousPolynomial::constant(n, 1);
  return sphere_integral_exact(one);
}

Rat sphere_average_integral_exact(const HomogeneousPolynomial& F) {
  PiScaled num = sphere_integral_exact(F);
  PiScaled den = sphere_area_exact(F.nvars());
  if (num.coeff == 0) return Rat(0);
  if (num.pi_pow != den.pi_pow)
    throw std::logic_error("sphere_average_integral_exact: pi powers must cancel");
  Rat r = num.coeff / den.coeff;
  r.canonicalize();
  return r;
}

HomogeneousPolynomial parse_polynomial(int nvars, const std::string& text) {
  HomogeneousPolynomial p;
  bool have_any = false;
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_polynomial: empty input");
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (term.empty()) throw std::invalid_argument("parse_polynomial: empty term");

    Rat coeff = 1;
    HomogeneousPolynomial::Exponents e(nvars, 0);
    size_t tp = 0;
    bool coeff_seen = false;
    while (tp < term.size()) {
      size_t star = term.find('*', tp);
      std::string f = term.substr(tp, star == std::string::npos ? std::string::npos : star - tp);
      tp = star == std::string::npos ? term.size() : star + 1;
      if (f.empty()) throw std::invalid_argument("parse_polynomial: empty factor");
      if (f[0] == 'x') {
        size_t caret = f.find('^');
        std::string idx = f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        int var = std::stoi(idx);
        if (var < 1 || var > nvars)
          throw std::invalid_argument("parse_polynomial: variable index out of range");
        unsigned exp = 1;
        if (caret != std::string::npos) exp = static_cast<unsigned>(std::stoul(f.substr(caret + 1)));
        e[var - 1] += exp;
      } else {
        if (coeff_seen) throw std::invalid_argument("parse_polynomial: two coefficients in a term");
        auto q = parse_rat(f);
        if (!q) throw std::invalid_argument("parse_polynomial: bad coefficient '" + f + "'");
        coeff = *q;
        coeff_seen = true;
      }
    }
    HomogeneousPolynomial t = HomogeneousPolynomial::monomial(nvars, e, coeff);
    p = have_any ? p + t : t;
    have_any = true;
  }
  return p;
}

}  // namespace liespec
