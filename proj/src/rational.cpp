#include "liespec/rational.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace liespec {

double PiScaled::value() const {
  return to_double(coeff) * std::pow(std::numbers::pi, pi_pow);
}

std::string PiScaled::str() const {
  std::string s = rat_str(coeff);
  if (pi_pow == 1) s += "*pi";
  else if (pi_pow != 0) s += "*pi^" + std::to_string(pi_pow);
  return s;
}

HalfGamma gamma_half(long k) {
  if (k < 1) throw std::invalid_argument("gamma_half: argument must be >= 1");
  if (k % 2 == 0) {
    long m = k / 2;  // Gamma(m) = (m-1)!
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m - 1));
    return {Rat(f), false};
  }
  long m = (k - 1) / 2;  // Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
  Int num, den;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(2 * m));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(m));
  den *= int_pow(4, static_cast<unsigned long>(m));
  Rat r(num, den);
  r.canonicalize();
  return {r, true};
}

Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

Int floor_div(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

double to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }
double to_double(const Int& z) { return mpz_get_d(z.get_mpz_t()); }

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Rat q(s);
      if (q.get_den() == 0) return std::nullopt;
      q.canonicalize();
      return q;
    }
    // integer?
    if (s.find_first_of(".eE") == std::string::npos) {
      Rat q(s);
      return q;
    }
    // decimal float: parse as double, keep the exact binary rational
    size_t pos = 0;
    double d = std::stod(s, &pos);
    if (pos != s.size() || !std::isfinite(d)) return std::nullopt;
    Rat q;
    mpq_set_d(q.get_mpq_t(), d);
    return q;
  } catch (...) {
    return std::nullopt;
  }
}

std::string vec_str(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace liespec
