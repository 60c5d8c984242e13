#pragma once

#include <string>
#include <vector>

#include "liespec/poly.hpp"
#include "liespec/rational.hpp"

namespace liespec {

enum class Family { SO, SU, U, Spin };

std::string family_name(Family f);
// Accepts "SO", "SU", "U", "Spin" (case-insensitive).
Family parse_family(const std::string& s);

// Which group: family and N. Rank and dimension follow from these.
struct GroupId {
  Family family = Family::SO;
  int N = 0;

  int rank() const;  // n: torus dimension
  int dim() const;   // d: group dimension
  int positive_root_count() const { return (dim() - rank()) / 2; }
  std::string str() const;
};

// Throws std::invalid_argument when N is below the family minimum
// (SO/SU/U need N >= 2, Spin needs N >= 3).
void validate_group(const GroupId& g);

// Weight in the E_j coordinate basis. SO/Spin weights have rank(g) entries
// with denominators dividing 2; U(N) weights have N integer entries; SU(N)
// weights are stored as the full traceless N-tuple (denominators divide N).
using WeightVector = std::vector<Rat>;

// For SU(N): weight from the integer partition parametrization
// c_1 >= ... >= c_{N-1} >= 0, mapped via b_j = c_j - (sum c)/N, b_N = -(sum c)/N.
WeightVector su_weight_from_partition(int N, const std::vector<long>& c);

// Accepts SU weights of length N-1 (b_N implied by the trace-zero constraint)
// and returns the canonical full-length form; other families pass through.
WeightVector normalize_weight(const GroupId& g, const WeightVector& b);

bool is_dominant_analytic(const GroupId& g, const WeightVector& b);

// A (and A + rho) as a union of shifted copies of a base integer lattice in
// the family's enumeration coordinates.
struct LatticeCosets {
  std::vector<std::vector<Rat>> shifts;
  std::string note;
};

struct RootSystemData {
  GroupId group;
  int rank = 0;
  int dim = 0;
  std::vector<WeightVector> positive_roots;  // i dropped: coordinates in the E_j basis
  WeightVector rho;                          // half-sum of positive roots
  std::vector<Rat> a_shift;                  // the shifts a_j (componentwise equal to rho)
  Int weyl_order;
  LatticeCosets cosets;
};

RootSystemData build_group_data(const GroupId& g);

// Casimir eigenvalue of the dominant analytic weight b, family closed form:
//   SO(2n):   sum b_j (b_j + 2n - 2j)
//   SO(2n+1): sum b_j (b_j + 2n + 1 - 2j)
//   U/SU(N):  sum b_j (b_j + N + 1 - 2j)
// Rejects non-dominant or non-analytic weights.
Rat casimir_eigenvalue(const GroupId& g, const WeightVector& b);

// The general form (mu+rho, mu+rho) - (rho, rho); cross-check route that only
// uses RootSystemData.
Rat casimir_eigenvalue_general(const RootSystemData& rs, const WeightVector& b);

// dim(pi_b)^2 via the family m_n(x) formula at x = b + a.
Int multiplicity(const GroupId& g, const WeightVector& b);

// Weyl dimension formula prod (alpha, b+rho) / prod (alpha, rho) evaluated
// generically over the positive-root list; multiplicity == weyl_dimension^2.
Int weyl_dimension(const GroupId& g, const WeightVector& b);

// m_n evaluated as a polynomial at an arbitrary point x (not necessarily
// dominant; vanishes exactly on the Weyl chamber walls).
Rat multiplicity_value(const GroupId& g, const std::vector<Rat>& x);

// m_n(x) = prod_{alpha > 0} (alpha, x)^2 / (alpha, rho)^2 expanded into an
// explicit homogeneous polynomial of degree d - n.
HomogeneousPolynomial multiplicity_polynomial(const GroupId& g);

struct VolumeData {
  Rat q_direct;              // Q = prod (alpha, rho), computed from the root list
  Rat vol_coeff;             // Vol = vol_coeff * (2 pi)^vol_pow
  int vol_pow = 0;
  double vol_float = 0;
  Rat lattice_covolume;      // Vol(A) convention: 1 for SO/U/SU, 2^{-n} for Spin
  Rat q_closed_form;         // tabulated closed form (comparison only)
  Rat table_vol_coeff;       // tabulated Vol*Q = table_vol_coeff * (2 pi)^table_vol_pow
  int table_vol_pow = 0;
  bool closed_form_matches_direct = false;
  std::string comparison_note;
};

VolumeData group_volume(const GroupId& g);

namespace detail {

// Integer-scaled view of a group used by the enumeration kernels: weight
// coordinates are multiplied by `scale` (2 for SO/Spin/U, 2N for SU) so that
// all x = b + rho vectors become integer vectors.
struct ScaledGroup {
  GroupId id;
  int n = 0;                // rank
  int arity = 0;            // length of X vectors (rank, or N for U/SU)
  long scale = 2;
  std::vector<long> rho_s;  // scale * rho
  Int weyl_order;
  long rho_norm2_s = 0;     // |scale * rho|^2
  Int dim_den;              // prod over positive roots of (alpha, scale*rho)
};

ScaledGroup make_scaled(const GroupId& g);

// dim(pi) at the scaled point X = scale * x; integer up to sign for any
// point of the (shifted) weight lattice, zero exactly on chamber walls.
Int scaled_dim(const ScaledGroup& sg, const std::vector<long>& X);
// dim^2; never negative.
Int scaled_mult(const ScaledGroup& sg, const std::vector<long>& X);

}  // namespace detail

}  // namespace liespec
