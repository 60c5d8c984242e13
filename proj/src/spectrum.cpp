#include "liespec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "liespec/lattice_count.hpp"

namespace liespec {

namespace {

using detail::ScaledGroup;
using detail::make_scaled;
using detail::scaled_mult;

long long isqrt_ll(long long s) {
  if (s < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(s)));
  while (r > 0 && r * r > s) --r;
  while ((r + 1) * (r + 1) <= s) ++r;
  return r;
}

double unit_ball_volume(int n) {
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1);
}

// floor(scale^2 lambda) + |scale rho|^2; the scan compares integer |X|^2
// against this, which is exact for rational lambda.
long long scaled_limit(const ScaledGroup& sg, const Rat& lambda) {
  Rat t = Rat(sg.scale) * Rat(sg.scale) * lambda;
  Int f = floor_div(t) + sg.rho_norm2_s;
  if (!f.fits_slong_p())
    throw budget_error("spectrum: eigenvalue cutoff too large for 64-bit enumeration");
  return f.get_si();
}

void check_budget(const ScaledGroup& sg, const Rat& lambda, bool full, double budget) {
  double lam = to_double(lambda);
  double rho2 = double(sg.rho_norm2_s) / double(sg.scale * sg.scale);
  double R = std::sqrt(std::max(0.0, lam + rho2)) * 1.01 + 1;
  int n = sg.n;
  double pts;
  if (sg.id.family == Family::SU) {
    pts = std::pow(2 * R * std::sqrt(double(sg.id.N)) + sg.id.N + 1, n);
    if (!full) {
      double fact = 1;
      for (int j = 2; j <= n; ++j) fact *= j;
      pts /= fact;
    }
  } else {
    pts = unit_ball_volume(n) * std::pow(R + 1, n);
    if (!full) pts /= to_double(Rat(sg.weyl_order));
    if (sg.id.family == Family::Spin) pts *= 2;
  }
  pts = 2 * pts + 1000;  // safety factor
  if (pts > budget)
    throw budget_error("spectrum: predicted " + std::to_string(pts) + " lattice visits exceed budget of " +
                       std::to_string(budget));
}

// ---- dominant-cone scan for the SO/Spin/U families ---------------------

struct DomScanBDU {
  const ScaledGroup* sg = nullptr;
  long long S = 0;
  int coset = 0;  // 0: integer weights, 1: Spin half-integer coset (B odd)
  std::vector<long> X, B;

  // callback(X, B, |X|^2)
  template <typename Fn>
  void run(Fn&& fn, long b1_hi, long b1_lo) {
    int n = sg->arity;
    X.assign(n, 0);
    B.assign(n, 0);
    rec(0, 0, std::numeric_limits<long>::max() / 4, b1_hi, b1_lo, fn);
  }

  // Level-0 candidate range (descending iteration), for worker partitioning.
  std::pair<long, long> level0_range() const {
    long r = static_cast<long>(isqrt_ll(S));
    long hi = r - sg->rho_s[0];
    long lo = lower_bound_at(0, r, std::numeric_limits<long>::max() / 4);
    return {align_down(hi), align_up(lo)};
  }

 private:
  long align_down(long v) const { return (((v - coset) % 2 + 2) % 2 == 0) ? v : v - 1; }
  long align_up(long v) const { return (((v - coset) % 2 + 2) % 2 == 0) ? v : v + 1; }

  long lower_bound_at(int level, long r, long prevB) const {
    Family f = sg->id.family;
    int n = sg->arity;
    if (f == Family::U) return -r - sg->rho_s[level];
    bool oddN = sg->id.N % 2 == 1;
    if (oddN) return 0;
    if (n == 1) return -r - sg->rho_s[level];  // abelian SO(2): no chamber
    if (level < n - 1) return 0;
    return -prevB;  // D_n last coordinate: |b_n| <= b_{n-1}
  }

  template <typename Fn>
  void rec(int level, long long ss, long prevB, long b1_hi, long b1_lo, Fn&& fn) {
    int n = sg->arity;
    if (level == n) {
      fn(X, B, ss);
      return;
    }
    long long rem = S - ss;
    if (rem < 0) return;
    long r = static_cast<long>(isqrt_ll(rem));
    long hi = std::min(prevB, r - sg->rho_s[level]);
    long lo = lower_bound_at(level, r, prevB);
    if (level == 0) {
      hi = std::min(hi, b1_hi);
      lo = std::max(lo, b1_lo);
    }
    hi = align_down(hi);
    lo = align_up(lo);
    for (long b = hi; b >= lo; b -= 2) {
      long x = b + sg->rho_s[level];
      long long t = static_cast<long long>(x) * x;
      if (t > rem) continue;
      X[level] = x;
      B[level] = b;
      rec(level + 1, ss + t, b, b1_hi, b1_lo, fn);
    }
  }
};

// ---- dominant-cone scan for SU: partitions c_1 >= ... >= c_{N-1} >= 0 ---

// |X|^2 = 4N * sum over pairs j<k<=N of (x_j - x_k)^2 with all pairwise
// differences determined by c alone, so the scan never needs the trace shift.
struct DomScanSU {
  const ScaledGroup* sg = nullptr;
  long long S = 0;
  std::vector<long> c;

  template <typename Fn>
  void run(Fn&& fn, long c1_hi, long c1_lo) {
    int N = sg->id.N;
    c.assign(N - 1, 0);
    rec(0, 0, std::numeric_limits<long>::max() / 4, c1_hi, c1_lo, fn);
  }

  std::pair<long, long> level0_range() const {
    return {cap(0), 0};
  }

  long cap(int level) const {
    int N = sg->id.N;
    long long d = isqrt_ll(S / (4 * N));
    return static_cast<long>(d) - (N - 1 - level);
  }

  // finish: turn c into (X, |X|^2) and call fn
  template <typename Fn>
  void leaf(long long pairsum, Fn&& fn) {
    int N = sg->id.N;
    long long norm2 = 4LL * N * pairsum;
    if (norm2 > S) return;
    long s = 0;
    for (long v : c) s += v;
    std::vector<long> X(N);
    for (int j = 0; j < N - 1; ++j) X[j] = 2L * N * c[j] + sg->rho_s[j] - 2 * s;
    X[N - 1] = sg->rho_s[N - 1] - 2 * s;
    fn(X, c, norm2);
  }

  template <typename Fn>
  void rec(int level, long long pairsum, long prevC, long c1_hi, long c1_lo, Fn&& fn) {
    int N = sg->id.N;
    if (level == N - 1) {
      leaf(pairsum, fn);
      return;
    }
    long hi = std::min(prevC, cap(level));
    long lo = 0;
    if (level == 0) {
      hi = std::min(hi, c1_hi);
      lo = std::max(lo, c1_lo);
    }
    for (long v = hi; v >= lo; --v) {
      c[level] = v;
      // new squared differences against earlier coordinates and against x_N
      long long add = 0;
      for (int i = 0; i < level; ++i) {
        long d = c[i] - v + (level - i);
        add += static_cast<long long>(d) * d;
      }
      long dN = v + (N - 1 - level);
      add += static_cast<long long>(dN) * dN;
      if (4LL * N * (pairsum + add) > S) continue;
      rec(level + 1, pairsum + add, v, c1_hi, c1_lo, fn);
    }
  }
};

// ---- full-lattice scans (Weyl-average route) ----------------------------

struct FullScanBDU {
  const ScaledGroup* sg = nullptr;
  long long S = 0;
  int coset = 0;
  std::vector<long> X;
  Int acc{0};

  void run() {
    X.assign(sg->arity, 0);
    rec(0, 0);
  }

  void rec(int level, long long ss) {
    int n = sg->arity;
    if (level == n) {
      acc += scaled_mult(*sg, X);
      return;
    }
    long long rem = S - ss;
    long r = static_cast<long>(isqrt_ll(rem));
    int par = ((sg->rho_s[level] + coset) % 2 + 2) % 2;
    long hi = r;
    if (((hi % 2) + 2) % 2 != par) --hi;
    for (long x = hi; x >= -r; x -= 2) {
      long long t = static_cast<long long>(x) * x;
      if (t > rem) continue;
      X[level] = x;
      rec(level + 1, ss + t);
    }
  }
};

struct FullScanSU {
  const ScaledGroup* sg = nullptr;
  long long S = 0;
  std::vector<long> c;
  Int acc{0};

  void run() {
    c.assign(sg->id.N - 1, 0);
    rec(0, 0);
  }

  void leaf(long long pairsum) {
    int N = sg->id.N;
    long long norm2 = 4LL * N * pairsum;
    if (norm2 > S) return;
    long s = 0;
    for (long v : c) s += v;
    std::vector<long> X(N);
    for (int j = 0; j < N - 1; ++j) X[j] = 2L * N * c[j] + sg->rho_s[j] - 2 * s;
    X[N - 1] = sg->rho_s[N - 1] - 2 * s;
    acc += scaled_mult(*sg, X);
  }

  void rec(int level, long long pairsum) {
    int N = sg->id.N;
    if (level == N - 1) {
      leaf(pairsum);
      return;
    }
    long w = static_cast<long>(isqrt_ll(S / (4 * N)));
    long base = N - 1 - level;  // d_{level,N} = c + base
    for (long v = w - base; v >= -w - base; --v) {
      c[level] = v;
      long long add = 0;
      for (int i = 0; i < level; ++i) {
        long d = c[i] - v + (level - i);
        add += static_cast<long long>(d) * d;
      }
      long dN = v + base;
      add += static_cast<long long>(dN) * dN;
      if (4LL * N * (pairsum + add) > S) continue;
      rec(level + 1, pairsum + add);
    }
  }
};

std::vector<int> cosets_of(const GroupId& g) {
  if (g.family == Family::Spin) return {0, 1};
  return {0};
}

// Sum of multiplicities over the dominant cone restricted to a level-0 range.
Int count_chunk(const ScaledGroup& sg, long long S, int coset, long hi, long lo) {
  Int sum = 0;
  if (sg.id.family == Family::SU) {
    DomScanSU scan;
    scan.sg = &sg;
    scan.S = S;
    scan.run([&](const std::vector<long>& X, const std::vector<long>&, long long) {
      sum += scaled_mult(sg, X);
    }, hi, lo);
  } else {
    DomScanBDU scan;
    scan.sg = &sg;
    scan.S = S;
    scan.coset = coset;
    scan.run([&](const std::vector<long>& X, const std::vector<long>&, long long) {
      sum += scaled_mult(sg, X);
    }, hi, lo);
  }
  return sum;
}

}  // namespace

std::vector<SpectrumEntry> enumerate_dominant(const GroupId& g, const Rat& lambda_max,
                                              const EnumOptions& opt) {
  validate_group(g);
  if (lambda_max < 0) throw std::invalid_argument("enumerate_dominant: lambda_max must be >= 0");
  ScaledGroup sg = make_scaled(g);
  check_budget(sg, lambda_max, false, opt.budget);
  long long S = scaled_limit(sg, lambda_max);

  std::vector<SpectrumEntry> entries;
  long scale2 = sg.scale * sg.scale;
  auto eigen_of = [&](long long ss) {
    Rat lam(Int(static_cast<long>(ss)) - Int(sg.rho_norm2_s), Int(scale2));
    lam.canonicalize();
    return lam;
  };
  auto emit_bdu = [&](const std::vector<long>& X, const std::vector<long>& B, long long ss) {
    SpectrumEntry e;
    e.weight.resize(B.size());
    for (size_t i = 0; i < B.size(); ++i) {
      e.weight[i] = Rat(B[i], 2);
      e.weight[i].canonicalize();
    }
    e.eigenvalue = eigen_of(ss);
    e.mult = scaled_mult(sg, X);
    entries.push_back(std::move(e));
  };
  auto emit_su = [&](const std::vector<long>& X, const std::vector<long>& c, long long ss) {
    SpectrumEntry e;
    e.weight = su_weight_from_partition(g.N, c);
    e.eigenvalue = eigen_of(ss);
    e.mult = scaled_mult(sg, X);
    entries.push_back(std::move(e));
  };

  if (g.family == Family::SU) {
    DomScanSU scan;
    scan.sg = &sg;
    scan.S = S;
    auto [hi, lo] = scan.level0_range();
    scan.run(emit_su, hi, lo);
  } else {
    for (int coset : cosets_of(g)) {
      DomScanBDU scan;
      scan.sg = &sg;
      scan.S = S;
      scan.coset = coset;
      auto [hi, lo] = scan.level0_range();
      scan.run(emit_bdu, hi, lo);
    }
  }
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return std::lexicographical_compare(a.weight.begin(), a.weight.end(), b.weight.begin(),
                                        b.weight.end());
  });
  return entries;
}

Int counting_function(const GroupId& g, const Rat& lambda, const EnumOptions& opt) {
  validate_group(g);
  if (lambda < 0) throw std::invalid_argument("counting_function: lambda must be >= 0");
  ScaledGroup sg = make_scaled(g);
  check_budget(sg, lambda, false, opt.budget);
  long long S = scaled_limit(sg, lambda);

  Int total = 0;
  for (int coset : cosets_of(g)) {
    std::pair<long, long> range;
    if (g.family == Family::SU) {
      DomScanSU scan;
      scan.sg = &sg;
      scan.S = S;
      range = scan.level0_range();
    } else {
      DomScanBDU scan;
      scan.sg = &sg;
      scan.S = S;
      scan.coset = coset;
      range = scan.level0_range();
    }
    long hi = range.first, lo = range.second;
    int workers = std::max(1, opt.workers);
    if (workers == 1 || hi < lo) {
      total += count_chunk(sg, S, coset, hi, lo);
      continue;
    }
    // contiguous partition of the leading coordinate; exact partial sums make
    // the reduction independent of the split
    long step = g.family == Family::SU ? 1 : 2;
    long values = (hi - lo) / step + 1;
    long per = (values + workers - 1) / workers;
    std::vector<std::future<Int>> parts;
    for (int w = 0; w < workers; ++w) {
      long chunk_hi = hi - w * per * step;
      long chunk_lo = std::max(lo, chunk_hi - (per - 1) * step);
      if (chunk_hi < lo) break;
      parts.push_back(std::async(std::launch::async, [=, &sg]() {
        return count_chunk(sg, S, coset, chunk_hi, chunk_lo);
      }));
    }
    for (auto& p : parts) total += p.get();
  }
  return total;
}

Int counting_via_full_lattice(const GroupId& g, const Rat& lambda, const EnumOptions& opt) {
  validate_group(g);
  if (lambda < 0) throw std::invalid_argument("counting_via_full_lattice: lambda must be >= 0");
  ScaledGroup sg = make_scaled(g);
  check_budget(sg, lambda, true, opt.budget);
  long long S = scaled_limit(sg, lambda);

  Int total = 0;
  if (g.family == Family::SU) {
    FullScanSU scan;
    scan.sg = &sg;
    scan.S = S;
    scan.run();
    total = scan.acc;
  } else {
    for (int coset : cosets_of(g)) {
      FullScanBDU scan;
      scan.sg = &sg;
      scan.S = S;
      scan.coset = coset;
      scan.run();
      total += scan.acc;
    }
  }
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), total.get_mpz_t(), sg.weyl_order.get_mpz_t());
  if (r != 0)
    throw std::logic_error("counting_via_full_lattice: Weyl-average sum not divisible by |W|");
  return q;
}

PiScaled leading_coefficient_exact(const GroupId& g) {
  VolumeData v = group_volume(g);
  int d = g.dim();
  int nl = v.vol_pow;  // n + l
  HalfGamma gd = gamma_half(d + 2);  // Gamma(d/2 + 1)
  Rat coeff = (Rat(1) / gd.r) * v.vol_coeff;
  int omega_pow = gd.sqrt_pi ? (d - 1) / 2 : d / 2;
  // times 2^{n+l-d} from Vol's (2 pi)^{n+l} against (2 pi)^d
  int e2 = nl - d;
  if (e2 >= 0) coeff *= int_pow(2, e2);
  else coeff /= int_pow(2, -e2);
  coeff.canonicalize();
  return PiScaled{coeff, omega_pow + nl - d};
}

double leading_term(const GroupId& g, double lambda) {
  if (lambda < 0) throw std::invalid_argument("leading_term: lambda must be >= 0");
  return leading_coefficient_exact(g).value() * std::pow(lambda, g.dim() / 2.0);
}

CountSeries remainder_series(const GroupId& g, const std::vector<Rat>& lambda_grid,
                             const EnumOptions& opt) {
  CountSeries s;
  double c = leading_coefficient_exact(g).value();
  int d = g.dim();
  for (const auto& lam : lambda_grid) {
    SeriesRow row;
    row.param = lam;
    row.count = Rat(counting_function(g, lam, opt));
    double lamd = to_double(lam);
    row.leading = c * std::pow(lamd, d / 2.0);
    row.remainder = to_double(row.count) - row.leading;
    row.normalized = lamd > 0 ? std::fabs(row.remainder) / std::pow(lamd, (d - 1) / 2.0) : 0.0;
    s.rows.push_back(std::move(row));
  }
  return s;
}

AlphaPrediction predicted_alpha(const GroupId& g) {
  validate_group(g);
  AlphaPrediction a;
  int n = g.rank();
  int N = g.N;
  switch (g.family) {
    case Family::SO:
    case Family::Spin:
      a.family_exponent = (N % 2 == 0) ? Rat(2 * n * n * n + n * n - 3 * n, 2 * (n + 1))
                                       : Rat(2 * n * n * n + 3 * n * n - n, 2 * (n + 1));
      break;
    case Family::U:
      a.family_exponent = Rat(N * (N + 2) * (N - 1), 2 * (N + 1));
      break;
    case Family::SU:
      a.family_exponent = Rat(N * N * N - 3 * N + 2, 2 * N);
      break;
  }
  a.family_exponent.canonicalize();
  a.sharp_exponent = Rat(g.dim() - 2, 2);
  a.sharp_exponent.canonicalize();
  a.sharp_applicable = n >= 5;
  return a;
}

std::pair<Int, Int> spin_rescaling_check(int N, const Rat& R, const EnumOptions& opt) {
  if (N < 3) throw std::invalid_argument("spin_rescaling_check: N must be >= 3");
  if (R < 0) throw std::invalid_argument("spin_rescaling_check: R must be >= 0");
  GroupId so{Family::SO, N};
  int n = so.rank();
  int l = so.positive_root_count();
  HomogeneousPolynomial m = multiplicity_polynomial(so);

  // Spin weights on the half-integer lattice (1/2)Z^n, SO weights on Z^n
  Rat m_spin = weighted_count(Lattice::scaled_identity(n, Rat(1, 2)), m, R, opt.budget);
  Rat m_so = weighted_count(Lattice::integer(n), m, Rat(2) * R, opt.budget);

  Rat lhs = m_spin * int_pow(2, 2 * l);
  lhs.canonicalize();
  if (lhs.get_den() != 1 || m_so.get_den() != 1)
    throw std::logic_error("spin_rescaling_check: sides are not integral");
  return {lhs.get_num(), m_so.get_num()};
}

}  // namespace liespec
