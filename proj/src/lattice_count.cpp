#include "liespec/lattice_count.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liespec {

namespace {

long long isqrt_ll(long long s) {
  if (s < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(s)));
  while (r > 0 && r * r > s) --r;
  while ((r + 1) * (r + 1) <= s) ++r;
  return r;
}

// Gauss-Jordan over Q; returns det, fills inv.
Rat invert(const std::vector<std::vector<Rat>>& m, std::vector<std::vector<Rat>>& inv) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a = m;
  inv.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    Rat p = a[col][col];
    det *= p;
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  det.canonicalize();
  return det;
}

}  // namespace

Lattice Lattice::make(std::vector<std::vector<Rat>> basis, std::vector<Rat> shift) {
  Lattice L;
  L.n_ = static_cast<int>(basis.size());
  if (L.n_ == 0) throw std::invalid_argument("Lattice: empty basis");
  for (const auto& row : basis)
    if (static_cast<int>(row.size()) != L.n_)
      throw std::invalid_argument("Lattice: basis must be square");
  if (!shift.empty() && static_cast<int>(shift.size()) != L.n_)
    throw std::invalid_argument("Lattice: shift arity mismatch");
  L.basis_ = std::move(basis);
  L.shift_ = std::move(shift);
  L.det_ = invert(L.basis_, L.inv_);
  if (L.det_ == 0) throw std::invalid_argument("Lattice: basis is singular");
  return L;
}

Lattice Lattice::integer(int n) { return scaled_identity(n, Rat(1)); }

Lattice Lattice::scaled_identity(int n, const Rat& s) {
  std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) b[i][i] = s;
  return make(std::move(b));
}

bool Lattice::has_shift() const {
  for (const auto& q : shift_)
    if (q != 0) return true;
  return false;
}

Lattice Lattice::with_shift(std::vector<Rat> h) const {
  return Lattice::make(basis_, std::move(h));
}

namespace {

struct Scan {
  int n = 0;
  std::vector<std::vector<long long>> cols;  // cols[j][i] = (qB)_{ij}
  std::vector<long long> H;                  // q h
  long long limit = 0;                       // floor(q^2 R^2)
  bool diagonal = true;
  std::vector<long> lo, hi;

  const HomogeneousPolynomial* F = nullptr;
  bool constant_F = false;
  Int coeff_den{1};
  Int acc{0};  // sum of coeff_den * F(Y) over accepted points (or point count)

  std::vector<long long> Y;
  std::vector<long> pt;

  void leaf_accumulate() {
    if (constant_F) {
      acc += 1;
      return;
    }
    for (int i = 0; i < n; ++i) pt[i] = static_cast<long>(Y[i]);
    acc += F->eval_int_num(pt);
  }

  void run(int level, long long ss) {
    if (level == n) {
      if (!diagonal) {
        long long s2 = 0;
        for (int i = 0; i < n; ++i) s2 += Y[i] * Y[i];
        if (s2 > limit) return;
      }
      leaf_accumulate();
      return;
    }
    long a = lo[level], b = hi[level];
    if (diagonal) {
      long long m = cols[level][level];
      long long rem = limit - ss;
      if (rem < 0) return;
      long long r = isqrt_ll(rem);
      // |l*m + H| <= r
      long long lo2, hi2;
      if (m > 0) {
        lo2 = static_cast<long long>(std::ceil(double(-r - H[level]) / double(m))) - 2;
        hi2 = static_cast<long long>(std::floor(double(r - H[level]) / double(m))) + 2;
      } else {
        lo2 = static_cast<long long>(std::ceil(double(r - H[level]) / double(m))) - 2;
        hi2 = static_cast<long long>(std::floor(double(-r - H[level]) / double(m))) + 2;
      }
      a = std::max<long long>(a, lo2);
      b = std::min<long long>(b, hi2);
      if (level == n - 1 && constant_F) {
        // closed-form innermost row: count l with |l*m + H| <= r exactly
        long cnt = 0;
        for (long long l = a; l <= b; ++l) {
          long long y = l * m + H[level];
          if (y * y <= rem) ++cnt;
        }
        acc += cnt;
        return;
      }
      for (long long l = a; l <= b; ++l) {
        long long y = l * m + H[level];
        long long t = y * y;
        if (t > rem) continue;
        Y[level] = y;
        run(level + 1, ss + t);
      }
      return;
    }
    for (long long l = a; l <= b; ++l) {
      for (int i = 0; i < n; ++i) Y[i] += l * cols[level][i];
      run(level + 1, 0);
      for (int i = 0; i < n; ++i) Y[i] -= l * cols[level][i];
    }
  }
};

}  // namespace

Rat weighted_count(const Lattice& L, const HomogeneousPolynomial& F, const Rat& R,
                   double budget) {
  if (R < 0) throw std::invalid_argument("weighted_count: R must be >= 0");
  int n = L.n();
  if (F.nvars() != n) throw std::invalid_argument("weighted_count: polynomial arity mismatch");

  // common denominator q: work on the integer-rescaled lattice q*B l + q*h
  Int q = 1;
  for (const auto& row : L.basis())
    for (const auto& e : row) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), e.get_den().get_mpz_t());
  for (const auto& e : L.shift()) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), e.get_den().get_mpz_t());

  Scan sc;
  sc.n = n;
  sc.cols.assign(n, std::vector<long long>(n, 0));
  sc.H.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat e = L.basis()[i][j] * Rat(q);
      e.canonicalize();
      if (!e.get_num().fits_slong_p())
        throw budget_error("weighted_count: basis entries too large for enumeration");
      sc.cols[j][i] = e.get_num().get_si();
      if (i != j && sc.cols[j][i] != 0) sc.diagonal = false;
    }
    if (!L.shift().empty()) {
      Rat h = L.shift()[i] * Rat(q);
      h.canonicalize();
      if (!h.get_num().fits_slong_p())
        throw budget_error("weighted_count: shift entries too large for enumeration");
      sc.H[i] = h.get_num().get_si();
    }
  }

  Rat t = Rat(q * q) * R * R;
  Int tf = floor_div(t);
  if (!tf.fits_slong_p()) throw budget_error("weighted_count: radius too large for enumeration");
  sc.limit = tf.get_si();

  // enumeration box from B^{-1}: |l_j| <= ||row_j(B^{-1})|| R + |(B^{-1} h)_j|
  double bb = 1;
  sc.lo.resize(n);
  sc.hi.resize(n);
  double Rd = to_double(R);
  for (int j = 0; j < n; ++j) {
    double norm2 = 0;
    Rat center = 0;
    for (int i = 0; i < n; ++i) {
      double e = to_double(L.inv_[j][i]);
      norm2 += e * e;
      if (!L.shift().empty()) center -= L.inv_[j][i] * L.shift()[i];
    }
    double w = std::sqrt(norm2) * Rd * (1 + 1e-12) + 1e-9;
    double c = to_double(center);
    sc.lo[j] = static_cast<long>(std::floor(c - w)) - 1;
    sc.hi[j] = static_cast<long>(std::ceil(c + w)) + 1;
    bb *= double(sc.hi[j] - sc.lo[j] + 1);
  }
  if (bb > budget)
    throw budget_error("weighted_count: enumeration box of ~" + std::to_string(bb) +
                       " visits exceeds budget");

  // 64-bit safety: the scan accumulates |Y|^2 in long long
  double ymax = 0;
  for (int i = 0; i < n; ++i) {
    double yi = std::fabs(double(sc.H[i]));
    for (int j = 0; j < n; ++j)
      yi += std::fabs(double(sc.cols[j][i])) *
            std::max(std::fabs(double(sc.lo[j])), std::fabs(double(sc.hi[j])));
    ymax = std::max(ymax, yi);
  }
  if (n * ymax * ymax > 9e18)
    throw budget_error("weighted_count: coordinates exceed 64-bit enumeration safety");

  sc.F = &F;
  sc.constant_F = F.degree() == 0;
  sc.pt.assign(n, 0);
  sc.Y.assign(n, 0);
  if (!sc.diagonal)
    for (int i = 0; i < n; ++i) sc.Y[i] = sc.H[i];
  sc.run(0, 0);

  Rat result;
  if (sc.constant_F) {
    Rat c = F.is_zero() ? Rat(0) : F.terms().begin()->second;
    result = Rat(sc.acc) * c;
  } else {
    // acc = sum over points of D * F(q * point), D = common denominator
    Int D = F.common_den();
    result = Rat(sc.acc, D * int_pow(q, static_cast<unsigned long>(F.degree())));
  }
  result.canonicalize();
  return result;
}

double ball_integral(const HomogeneousPolynomial& F) { return ball_integral_exact(F).value(); }

Rat dual_volume_exact(const Lattice& L) {
  Rat d = abs(L.det());
  Rat r = Rat(1) / d;
  r.canonicalize();
  return r;
}

double dual_volume(const Lattice& L) { return to_double(dual_volume_exact(L)); }

Asymptote predicted_asymptote(const Lattice& L, const HomogeneousPolynomial& F, double R) {
  Asymptote a;
  int n = L.n();
  int p = F.degree();
  a.leading_exponent = Rat(p + n);
  a.remainder_exponent = Rat(p + n) - Rat(2, n + 1);
  a.remainder_exponent.canonicalize();
  a.value = dual_volume(L) * ball_integral(F) * std::pow(R, p + n);
  return a;
}

CountSeries lattice_remainder_series(const Lattice& L, const HomogeneousPolynomial& F,
                                     const std::vector<Rat>& R_grid, double budget) {
  CountSeries s;
  double coeff = dual_volume(L) * ball_integral(F);
  int pn = F.degree() + L.n();
  double theta = pn - 2.0 / (L.n() + 1);
  for (const auto& R : R_grid) {
    SeriesRow row;
    row.param = R;
    row.count = weighted_count(L, F, R, budget);
    double Rd = to_double(R);
    row.leading = coeff * std::pow(Rd, pn);
    row.remainder = to_double(row.count) - row.leading;
    row.normalized = Rd > 0 ? std::fabs(row.remainder) / std::pow(Rd, theta) : 0.0;
    s.rows.push_back(std::move(row));
  }
  return s;
}

EnvelopeFit remainder_exponent_fit(const CountSeries& series) {
  std::vector<double> params, values;
  params.reserve(series.rows.size());
  for (const auto& r : series.rows) {
    params.push_back(to_double(r.param));
    values.push_back(r.remainder);
  }
  return fit_envelope_exponent(params, values);
}

}  // namespace liespec
