#include "liespec/arithmetic.hpp"

#include <cmath>
#include <stdexcept>

namespace liespec {

namespace {

// out[k] = sum_{j^2 <= k} w_j * in[k - j^2], w_0 = 1, w_j = 2; uint64 with
// overflow detection.
bool conv_step_u64(const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out) {
  long K = static_cast<long>(in.size()) - 1;
  out = in;  // j = 0 term
  for (long j = 1; j * j <= K; ++j) {
    long j2 = j * j;
    for (long k = j2; k <= K; ++k) {
      std::uint64_t t;
      if (__builtin_mul_overflow(in[k - j2], std::uint64_t(2), &t)) return false;
      if (__builtin_add_overflow(out[k], t, &out[k])) return false;
    }
  }
  return true;
}

std::vector<Int> conv_step_big(const std::vector<Int>& in) {
  long K = static_cast<long>(in.size()) - 1;
  std::vector<Int> out = in;
  for (long j = 1; j * j <= K; ++j) {
    long j2 = j * j;
    for (long k = j2; k <= K; ++k)
      mpz_addmul_ui(out[k].get_mpz_t(), in[k - j2].get_mpz_t(), 2);
  }
  return out;
}

Int ipow_int(long base, unsigned e) {
  if (e == 0) return 1;  // including 0^0 = 1 by the summation convention
  return int_pow(base, e);
}

}  // namespace

Int RepNumberTable::value(long k) const {
  if (k < 0 || k > K) throw std::out_of_range("RepNumberTable::value");
  if (is_small()) return Int(static_cast<unsigned long>(small[k]));
  return big[k];
}

RepNumberTable rep_numbers(int n, long K, double memory_budget_bytes) {
  if (n < 1) throw std::invalid_argument("rep_numbers: n must be >= 1");
  if (K < 0) throw std::invalid_argument("rep_numbers: K must be >= 0");
  if (2.0 * (K + 1) * 8 > memory_budget_bytes)
    throw budget_error("rep_numbers: table of " + std::to_string(K + 1) +
                       " entries exceeds memory budget");
  RepNumberTable r;
  r.n = n;
  r.K = K;
  // r_1
  std::vector<std::uint64_t> cur(K + 1, 0);
  cur[0] = 1;
  for (long j = 1; j * j <= K; ++j) cur[j * j] = 2;
  bool small_ok = true;
  for (int step = 1; step < n && small_ok; ++step) {
    std::vector<std::uint64_t> next;
    if (!conv_step_u64(cur, next)) {
      small_ok = false;
      break;
    }
    cur.swap(next);
  }
  if (small_ok) {
    r.small.swap(cur);
    return r;
  }
  // rare escalation: redo in bignums
  std::vector<Int> big(K + 1, Int(0));
  big[0] = 1;
  for (long j = 1; j * j <= K; ++j) big[j * j] = 2;
  for (int step = 1; step < n; ++step) big = conv_step_big(big);
  r.big.swap(big);
  return r;
}

long sigma(long k) {
  if (k < 1) throw std::invalid_argument("sigma: k must be >= 1");
  long s = 0;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d) continue;
    s += d;
    if (d != k / d) s += k / d;
  }
  return s;
}

std::vector<long> sigma_table(long t) {
  std::vector<long> s(t + 1, 0);
  for (long d = 1; d <= t; ++d)
    for (long k = d; k <= t; k += d) s[k] += d;
  return s;
}

Int S_m(long t, int m) {
  if (t < 0) throw std::invalid_argument("S_m: t must be >= 0");
  Int acc = 0;
  for (long d = 1; d <= t; ++d) {
    long top = t / d;
    for (long j = 1; j <= top; ++j) {
      // k = d*j, term k^m * d
      Int term = ipow_int(d * j, static_cast<unsigned>(m));
      mpz_addmul_ui(acc.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(d));
    }
  }
  return acc;
}

std::vector<Int> S_m_table(long t, int m) {
  std::vector<long> sig = sigma_table(t);
  std::vector<Int> pre(t + 1, Int(0));
  Int acc = 0;
  for (long k = 1; k <= t; ++k) {
    Int term = ipow_int(k, static_cast<unsigned>(m));
    mpz_addmul_ui(acc.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(sig[k]));
    pre[k] = acc;
  }
  return pre;
}

Rat psi(const Rat& u) {
  Rat r = u - Rat(floor_div(u)) - Rat(1, 2);
  r.canonicalize();
  return r;
}

Rat D_sum(long t) {
  if (t < 1) throw std::invalid_argument("D_sum: t must be >= 1");
  Rat acc = 0;
  for (long k = 1; k <= t; ++k) {
    Rat u(t, k);
    u.canonicalize();
    acc += psi(u) / k;
  }
  acc.canonicalize();
  return acc;
}

Int weighted_ball_sum(const RepNumberTable& r, int m, long R2) {
  if (m < 0) throw std::invalid_argument("weighted_ball_sum: m must be >= 0");
  if (R2 > r.K) throw std::invalid_argument("weighted_ball_sum: R^2 beyond table");
  Int acc = 0;
  for (long k = 1; k <= R2; ++k) {
    Int km = ipow_int(k, static_cast<unsigned>(m));
    if (r.is_small())
      mpz_addmul_ui(acc.get_mpz_t(), km.get_mpz_t(), r.small[k]);
    else
      acc += km * r.big[k];
  }
  return acc;
}

Int weighted_ball_sum(int n, int m, long R2) {
  return weighted_ball_sum(rep_numbers(n, std::max(0L, R2)), m, R2);
}

std::vector<Int> weighted_prefix(const RepNumberTable& r, int m) {
  std::vector<Int> pre(r.K + 1, Int(0));
  Int acc = 0;
  for (long k = 1; k <= r.K; ++k) {
    Int km = ipow_int(k, static_cast<unsigned>(m));
    if (r.is_small())
      mpz_addmul_ui(acc.get_mpz_t(), km.get_mpz_t(), r.small[k]);
    else
      acc += km * r.big[k];
    pre[k] = acc;
  }
  return pre;
}

std::pair<Int, Int> jacobi_identity_check(int m, long t) {
  if (t < 1) throw std::invalid_argument("jacobi_identity_check: t must be >= 1");
  Int lhs = weighted_ball_sum(4, m, t);
  Int rhs = 8 * S_m(t, m);
  Int corr = 32 * int_pow(4, static_cast<unsigned>(m)) * S_m(t / 4, m);
  rhs -= corr;
  return {lhs, rhs};
}

std::pair<Int, Int> dimension_recursion_check(int n, int m, long R) {
  if (R < 0) throw std::invalid_argument("dimension_recursion_check: R must be >= 0");
  long R2 = R * R;
  Int lhs = weighted_ball_sum(n + 1, m, R2);

  RepNumberTable rn = rep_numbers(n, R2);
  // Tk[k][t] = sum_{i=0}^{t} i^k r_n(i): slice weights expand binomially
  std::vector<std::vector<Int>> Tk(m + 1, std::vector<Int>(R2 + 1, Int(0)));
  for (int k = 0; k <= m; ++k) {
    Int acc = 0;
    for (long i = 0; i <= R2; ++i) {
      Int term = ipow_int(i, static_cast<unsigned>(k)) * rn.value(i);
      acc += term;
      Tk[k][i] = acc;
    }
  }
  Int rhs = 0;
  for (long j = -R; j <= R; ++j) {
    long rem = R2 - j * j;
    for (int k = 0; k <= m; ++k) {
      Int w = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)) *
              ipow_int(std::labs(j), static_cast<unsigned>(2 * (m - k)));
      rhs += w * Tk[k][rem];
    }
  }
  if (m == 0) rhs -= 1;  // the global origin belongs to neither side's E
  return {lhs, rhs};
}

CountSeries sharp_leading_check(int n, int m, const std::vector<long>& R2_grid) {
  CountSeries s;
  if (R2_grid.empty()) return s;
  long K = R2_grid.back();
  RepNumberTable r = rep_numbers(n, K);
  std::vector<Int> pre = weighted_prefix(r, m);
  double vol_sphere = sphere_area_exact(n).value();
  double coeff = vol_sphere / (2 * m + n);
  for (long t : R2_grid) {
    SeriesRow row;
    row.param = Rat(t);
    row.count = Rat(pre[t]);
    double R = std::sqrt(double(t));
    row.leading = coeff * std::pow(R, 2 * m + n);
    row.remainder = to_double(row.count) - row.leading;
    row.normalized = R > 0 ? std::fabs(row.remainder) / std::pow(R, 2 * m + n - 2) : 0.0;
    s.rows.push_back(std::move(row));
  }
  return s;
}

std::vector<Int> shell_monomial_sums(const std::vector<unsigned>& e, long K) {
  for (unsigned ei : e)
    if (ei % 2 == 1) return std::vector<Int>(K + 1, Int(0));
  std::vector<Int> cur(K + 1, Int(0));
  cur[0] = 1;  // empty product seed
  for (unsigned ei : e) {
    std::vector<Int> next(K + 1, Int(0));
    // j = 0 contributes 0^ei (only for ei = 0)
    if (ei == 0)
      for (long k = 0; k <= K; ++k) next[k] = cur[k];
    for (long j = 1; j * j <= K; ++j) {
      long j2 = j * j;
      Int w = 2 * ipow_int(j, ei);
      for (long k = j2; k <= K; ++k)
        if (cur[k - j2] != 0) next[k] += w * cur[k - j2];
    }
    cur.swap(next);
  }
  return cur;
}

std::vector<Rat> shell_polynomial_sums(const HomogeneousPolynomial& P, long K) {
  std::vector<Rat> total(K + 1, Rat(0));
  for (const auto& [e, c] : P.terms()) {
    std::vector<Int> t = shell_monomial_sums(e, K);
    for (long k = 0; k <= K; ++k)
      if (t[k] != 0) total[k] += Rat(t[k]) * c;
  }
  for (auto& q : total) q.canonicalize();
  return total;
}

namespace {

void shell_enum(int level, int n, long rem, std::vector<long>& x,
                const HomogeneousPolynomial& P, Int& sum_num, long& count) {
  if (level == n) {
    if (rem != 0) return;
    ++count;
    sum_num += P.eval_int_num(x);
    return;
  }
  long r = static_cast<long>(std::sqrt(double(rem)));
  while (r * r > rem) --r;
  while ((r + 1) * (r + 1) <= rem) ++r;
  for (long v = -r; v <= r; ++v) {
    x[level] = v;
    shell_enum(level + 1, n, rem - v * v, x, P, sum_num, count);
  }
}

}  // namespace

Rat sphere_average(const HomogeneousPolynomial& P, int n, long k) {
  if (P.nvars() != n) throw std::invalid_argument("sphere_average: arity mismatch");
  if (k < 1) throw std::invalid_argument("sphere_average: k must be >= 1");
  std::vector<long> x(n, 0);
  Int sum_num = 0;
  long count = 0;
  shell_enum(0, n, k, x, P, sum_num, count);
  if (count == 0) throw std::invalid_argument("sphere_average: empty shell");
  int p = P.degree();
  if (p % 2 == 1) return Rat(0);  // odd degree vanishes on the symmetric shell
  Rat avg(sum_num, P.common_den() * Int(count) * ipow_int(k, static_cast<unsigned>(p / 2)));
  avg.canonicalize();
  return avg;
}

Rat sphere_integral_average_exact(const HomogeneousPolynomial& P) {
  return sphere_average_integral_exact(P);
}

double sphere_integral_average(const HomogeneousPolynomial& P) {
  return to_double(sphere_average_integral_exact(P));
}

std::vector<EquiRow> equidistribution_trend(const HomogeneousPolynomial& P, int n, long K) {
  if (P.nvars() != n) throw std::invalid_argument("equidistribution_trend: arity mismatch");
  RepNumberTable r = rep_numbers(n, K);
  std::vector<Rat> shells = shell_polynomial_sums(P, K);
  Rat kappa = sphere_average_integral_exact(P);
  int p = P.degree();
  std::vector<EquiRow> rows;
  for (long k = 1; k <= K; ++k) {
    Int rk = r.value(k);
    if (rk == 0) continue;
    Rat avg;
    if (p % 2 == 1) avg = 0;
    else {
      avg = shells[k] / (Rat(rk) * Rat(ipow_int(k, static_cast<unsigned>(p / 2))));
      avg.canonicalize();
    }
    EquiRow row;
    row.k = k;
    row.deviation = abs(avg - kappa);
    row.deviation.canonicalize();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace liespec
