// liespec command-line workbench: spectra of compact groups, weighted
// lattice counts, divisor-sum identities, geodesic counts and Bessel
// integral checks, exported as CSV/JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "liespec/arithmetic.hpp"
#include "liespec/bessel.hpp"
#include "liespec/cache.hpp"
#include "liespec/csv.hpp"
#include "liespec/errors.hpp"
#include "liespec/geodesics.hpp"
#include "liespec/lattice_count.hpp"
#include "liespec/lie_data.hpp"
#include "liespec/spectrum.hpp"

namespace {

using namespace liespec;

constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

std::vector<double> geometric_grid(const std::string& spec) {
  double start, stop, ratio;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &ratio) != 3)
    throw std::invalid_argument("grid must be start:stop:ratio, got '" + spec + "'");
  if (!(start > 0) || !(stop >= start) || !(ratio > 1))
    throw std::invalid_argument("grid needs start > 0, stop >= start, ratio > 1");
  std::vector<double> g;
  for (double v = start; v <= stop * (1 + 1e-12); v *= ratio) g.push_back(v);
  return g;
}

std::vector<Rat> rat_list(const std::vector<std::string>& items) {
  std::vector<Rat> out;
  for (const auto& s : items) {
    auto q = parse_rat(s);
    if (!q) throw std::invalid_argument("cannot parse rational '" + s + "'");
    out.push_back(*q);
  }
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  write_file_atomic(out_path, content);
}

std::vector<Rat> parse_vector(const std::string& text) {
  std::vector<Rat> v;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    auto q = parse_rat(cur);
    if (!q) throw std::invalid_argument("cannot parse vector entry '" + cur + "'");
    v.push_back(*q);
  }
  return v;
}

std::vector<std::vector<Rat>> parse_matrix(const std::string& text) {
  std::vector<std::vector<Rat>> m;
  std::string row;
  std::istringstream is(text);
  while (std::getline(is, row, ';')) m.push_back(parse_vector(row));
  return m;
}

// ---- spectrum ------------------------------------------------------------

struct SpectrumArgs {
  std::string group;
  int N = 0;
  std::vector<std::string> lambdas;
  std::string grid;
  bool full_lattice = false;
  std::string dump_json;
  std::string out;
  double budget = 1e9;
  int workers = 1;
  std::string cache_dir;
};

int run_spectrum(const SpectrumArgs& a) {
  GroupId g{parse_family(a.group), a.N};
  validate_group(g);
  EnumOptions opt{a.budget, a.workers};

  std::vector<Rat> lambdas = rat_list(a.lambdas);
  if (!a.grid.empty())
    for (double v : geometric_grid(a.grid)) {
      Rat q;
      mpq_set_d(q.get_mpq_t(), v);
      lambdas.push_back(q);
    }
  if (lambdas.empty()) throw std::invalid_argument("spectrum: no --lambda values given");

  CsvTable t;
  t.header = {"lambda", "count", "leading", "remainder"};
  double coeff = leading_coefficient_exact(g).value();
  for (const auto& lam : lambdas) {
    Int count = a.full_lattice ? counting_via_full_lattice(g, lam, opt)
                               : counting_function(g, lam, opt);
    double leading = coeff * std::pow(to_double(lam), g.dim() / 2.0);
    double rem = to_double(count) - leading;
    t.rows.push_back({fmt_param(lam), count.get_str(), fmt_double(leading), fmt_double(rem)});
  }
  emit(a.out, t.str());

  if (!a.dump_json.empty()) {
    Rat lmax = lambdas.front();
    for (const auto& l : lambdas) lmax = std::max(lmax, l);
    Cache cache = Cache::from_env(a.cache_dir);
    nlohmann::json params{
        {"family", family_name(g.family)}, {"N", g.N}, {"lambda_max", rat_str(lmax)}};
    nlohmann::json dump;
    auto hit = cache.load("spectrum", params);
    if (hit) {
      dump = *hit;
    } else {
      dump = {{"family", family_name(g.family)}, {"N", g.N}, {"entries", nlohmann::json::array()}};
      for (const auto& e : enumerate_dominant(g, lmax, opt)) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& q : e.weight) b.push_back(rat_str(q));
        dump["entries"].push_back(
            {{"b", b}, {"lambda", rat_str(e.eigenvalue)}, {"mult", e.mult.get_str()}});
      }
      cache.store("spectrum", params, dump);
    }
    write_file_atomic(a.dump_json, dump.dump(2) + "\n");
  }
  return 0;
}

// ---- lattice ------------------------------------------------------------

struct LatticeArgs {
  int dim = 2;
  std::string basis;
  std::string shift;
  std::string poly = "1";
  std::vector<std::string> rs;
  std::string grid;
  std::string out;
  double budget = 1e9;
};

int run_lattice(const LatticeArgs& a) {
  Lattice L = a.basis.empty() ? Lattice::integer(a.dim)
                              : Lattice::make(parse_matrix(a.basis),
                                              a.shift.empty() ? std::vector<Rat>{}
                                                              : parse_vector(a.shift));
  if (!a.basis.empty() && L.n() != a.dim)
    throw std::invalid_argument("lattice: basis size disagrees with --dim");
  if (a.basis.empty() && !a.shift.empty()) L = L.with_shift(parse_vector(a.shift));
  HomogeneousPolynomial F = parse_polynomial(a.dim, a.poly);

  std::vector<Rat> rs = rat_list(a.rs);
  if (!a.grid.empty())
    for (double v : geometric_grid(a.grid)) {
      Rat q;
      mpq_set_d(q.get_mpq_t(), v);
      rs.push_back(q);
    }
  if (rs.empty()) throw std::invalid_argument("lattice: no --r values given");

  CountSeries s = lattice_remainder_series(L, F, rs, a.budget);
  CsvTable t;
  t.header = {"R", "count", "leading", "remainder"};
  for (const auto& row : s.rows)
    t.rows.push_back({fmt_param(row.param), rat_str(row.count), fmt_double(row.leading),
                      fmt_double(row.remainder)});
  emit(a.out, t.str());
  return 0;
}

// ---- arith ---------------------------------------------------------------

struct ArithArgs {
  std::string check = "jacobi";
  int n = 5;
  int m = 0;
  long t = 0;
  long t_max = 0;
  long r = 0;
  long k_max = 0;
  std::string poly;
  std::string grid;
  std::string out;
  std::string cache_dir;
};

int run_arith(const ArithArgs& a) {
  CsvTable t;
  if (a.check == "jacobi") {
    t.header = {"t", "lhs", "rhs", "equal"};
    long lo = a.t_max > 0 ? 1 : a.t;
    long hi = a.t_max > 0 ? a.t_max : a.t;
    if (hi < 1) throw std::invalid_argument("arith jacobi: give --t or --t-max");
    RepNumberTable r4 = rep_numbers(4, hi);
    std::vector<Int> lhs_pre = weighted_prefix(r4, a.m);
    std::vector<Int> sm = S_m_table(hi, a.m);
    Int four_m = int_pow(4, static_cast<unsigned>(a.m));
    for (long tt = lo; tt <= hi; ++tt) {
      Int lhs = lhs_pre[tt];
      Int rhs = 8 * sm[tt] - 32 * four_m * sm[tt / 4];
      t.rows.push_back({std::to_string(tt), lhs.get_str(), rhs.get_str(),
                        lhs == rhs ? "true" : "false"});
    }
  } else if (a.check == "recursion") {
    t.header = {"t", "lhs", "rhs", "equal"};
    auto [lhs, rhs] = dimension_recursion_check(a.n, a.m, a.r);
    t.rows.push_back({std::to_string(a.r * a.r), lhs.get_str(), rhs.get_str(),
                      lhs == rhs ? "true" : "false"});
  } else if (a.check == "sharp") {
    t.header = {"R2", "count", "leading", "remainder", "normalized"};
    std::vector<long> grid;
    for (double v : geometric_grid(a.grid.empty() ? "64:1000000:2" : a.grid))
      grid.push_back(static_cast<long>(v));
    CountSeries s = sharp_leading_check(a.n, a.m, grid);
    for (const auto& row : s.rows)
      t.rows.push_back({fmt_param(row.param), rat_str(row.count), fmt_double(row.leading),
                        fmt_double(row.remainder), fmt_double(row.normalized)});
  } else if (a.check == "equi") {
    t.header = {"k", "deviation"};
    HomogeneousPolynomial P = parse_polynomial(a.n, a.poly.empty() ? "x1^2" : a.poly);
    for (const auto& row : equidistribution_trend(P, a.n, a.k_max > 0 ? a.k_max : 1000))
      t.rows.push_back({std::to_string(row.k), fmt_double(to_double(row.deviation))});
  } else if (a.check == "rep") {
    t.header = {"k", "r"};
    long K = a.k_max > 0 ? a.k_max : a.t;
    if (K < 0) throw std::invalid_argument("arith rep: give --k-max");
    Cache cache = Cache::from_env(a.cache_dir);
    nlohmann::json params{{"n", a.n}, {"K", K}};
    nlohmann::json values;
    auto hit = cache.load("rep_numbers", params);
    if (hit) {
      values = hit->at("values");
    } else {
      RepNumberTable r = rep_numbers(a.n, K);
      values = nlohmann::json::array();
      for (long k = 0; k <= K; ++k) values.push_back(r.value(k).get_str());
      cache.store("rep_numbers", params, nlohmann::json{{"values", values}});
    }
    for (long k = 0; k <= K; ++k)
      t.rows.push_back({std::to_string(k), values[k].get<std::string>()});
  } else {
    throw std::invalid_argument("arith: unknown --check '" + a.check + "'");
  }
  emit(a.out, t.str());
  return 0;
}

// ---- geodesics -----------------------------------------------------------

struct GeoArgs {
  int n = 2;
  std::vector<double> xs;
  std::string grid;
  double length_max = -1;
  std::string out;
  double budget = 1e9;
};

int run_geodesics(const GeoArgs& a) {
  if (a.length_max >= 0) {
    // length spectrum mode: squared lengths 4 pi^2 k with shell multiplicities
    CsvTable t;
    t.header = {"k", "length_sq", "count"};
    for (const auto& c : length_spectrum(a.n, a.length_max, a.budget))
      t.rows.push_back({std::to_string(c.k), fmt_double(c.length * c.length),
                        c.count.get_str()});
    emit(a.out, t.str());
    return 0;
  }
  std::vector<double> xs = a.xs;
  if (!a.grid.empty())
    for (double v : geometric_grid(a.grid)) xs.push_back(v);
  if (xs.empty()) throw std::invalid_argument("geodesics: no --x values given");
  std::sort(xs.begin(), xs.end());
  CircleReport rep = circle_problem_report(a.n, xs, a.budget);
  CsvTable t;
  t.header = {"x", "count", "leading", "remainder", "delta", "zeta"};
  for (const auto& row : rep.series.rows)
    t.rows.push_back({fmt_double(to_double(row.param)), rat_str(row.count),
                      fmt_double(row.leading), fmt_double(row.remainder), rat_str(rep.delta),
                      rat_str(rep.zeta)});
  emit(a.out, t.str());
  return 0;
}

// ---- bessel --------------------------------------------------------------

struct BesselArgs {
  double alpha = 2;
  double beta = 0;
  std::vector<double> zs;
  std::string grid;
  std::string out;
};

int run_bessel(const BesselArgs& a) {
  std::vector<double> zs = a.zs;
  if (!a.grid.empty())
    for (double v : geometric_grid(a.grid)) zs.push_back(v);
  if (zs.empty()) throw std::invalid_argument("bessel: no --z values given");
  std::sort(zs.begin(), zs.end());
  CsvTable t;
  t.header = {"z", "integral", "ratio"};
  double acc = 0, prev = 0;
  for (double z : zs) {
    acc += integrate_bessel_weighted(a.alpha + a.beta, a.beta, prev, z);
    prev = z;
    double ratio = z > 0 ? acc / std::pow(z, a.alpha + a.beta - 0.5) : 0.0;
    t.rows.push_back({fmt_double(z), fmt_double(acc), fmt_double(ratio)});
  }
  emit(a.out, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liespec: exact spectral counting for SO/SU/U/Spin, lattice counts, "
               "divisor identities, geodesic length spectra and Bessel checks"};
  app.set_config("--config");
  app.require_subcommand(1);

  SpectrumArgs sa;
  auto* sp = app.add_subcommand("spectrum", "spectral counting function of a compact group");
  sp->add_option("--group", sa.group, "family: SO, SU, U or Spin")->required();
  sp->add_option("--n", sa.N, "the N in SO(N)/SU(N)/U(N)/Spin(N)")->required();
  sp->add_option("--lambda", sa.lambdas, "eigenvalue cutoffs (rationals)");
  sp->add_option("--lambda-grid", sa.grid, "geometric grid start:stop:ratio");
  sp->add_flag("--full-lattice", sa.full_lattice, "count via the Weyl-averaged full lattice");
  sp->add_option("--dump-json", sa.dump_json, "write the spectrum entries as JSON");
  sp->add_option("--out", sa.out, "CSV output path (default stdout)");
  sp->add_option("--budget", sa.budget, "max predicted lattice visits");
  sp->add_option("--workers", sa.workers, "worker partitions of the leading coordinate");
  sp->add_option("--cache-dir", sa.cache_dir, "cache directory (or LIESPEC_CACHE_DIR)");

  LatticeArgs la;
  auto* lp = app.add_subcommand("lattice", "weighted lattice-point counting");
  lp->add_option("--dim", la.dim, "lattice dimension")->required();
  lp->add_option("--basis", la.basis, "rows 'a,b;c,d' (default identity)");
  lp->add_option("--shift", la.shift, "shift vector h, e.g. '1/3,1/7'");
  lp->add_option("--poly", la.poly, "homogeneous weight, e.g. 'x1^2 + 2*x1*x2'");
  lp->add_option("--r", la.rs, "radii (rationals)");
  lp->add_option("--r-grid", la.grid, "geometric grid start:stop:ratio");
  lp->add_option("--out", la.out, "CSV output path");
  lp->add_option("--budget", la.budget, "max enumeration box size");

  ArithArgs aa;
  auto* ap = app.add_subcommand("arith", "divisor sums, rep numbers, sharp-remainder checks");
  ap->add_option("--check", aa.check, "jacobi | recursion | sharp | equi | rep");
  ap->add_option("--n", aa.n, "dimension");
  ap->add_option("--m", aa.m, "radial weight exponent");
  ap->add_option("--t", aa.t, "single t = R^2");
  ap->add_option("--t-max", aa.t_max, "sweep all t up to this");
  ap->add_option("--r", aa.r, "radius (recursion check)");
  ap->add_option("--k-max", aa.k_max, "table cutoff");
  ap->add_option("--poly", aa.poly, "polynomial for equi check");
  ap->add_option("--grid", aa.grid, "R^2 grid start:stop:ratio (sharp check)");
  ap->add_option("--out", aa.out, "CSV output path");
  ap->add_option("--cache-dir", aa.cache_dir, "cache directory");

  GeoArgs ga;
  auto* gp = app.add_subcommand("geodesics", "closed-geodesic counting on the maximal torus");
  gp->add_option("--n", ga.n, "torus rank")->required();
  gp->add_option("--x", ga.xs, "squared-length cutoffs");
  gp->add_option("--x-grid", ga.grid, "geometric grid start:stop:ratio");
  gp->add_option("--length-max", ga.length_max,
                 "emit the length spectrum (k, length^2, multiplicity) up to this length");
  gp->add_option("--out", ga.out, "CSV output path");
  gp->add_option("--budget", ga.budget, "max predicted visits");

  BesselArgs ba;
  auto* bp = app.add_subcommand("bessel", "weighted Bessel integrals and growth ratios");
  bp->add_option("--alpha", ba.alpha, "alpha >= 2")->required();
  bp->add_option("--beta", ba.beta, "beta > -1/2")->required();
  bp->add_option("--z", ba.zs, "upper limits");
  bp->add_option("--z-grid", ba.grid, "geometric grid start:stop:ratio");
  bp->add_option("--out", ba.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (sp->parsed()) return run_spectrum(sa);
    if (lp->parsed()) return run_lattice(la);
    if (ap->parsed()) return run_arith(aa);
    if (gp->parsed()) return run_geodesics(ga);
    if (bp->parsed()) return run_bessel(ba);
  } catch (const budget_error& e) {
    std::cerr << "liespec: budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "liespec: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "liespec: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    std::cerr << "liespec: io: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
