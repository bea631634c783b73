#pragma once

// Exact arithmetic for SU(2) flat connections on the torus and on torus
// bundles over the circle. The fundamental group of the bundle M_f,
//   < mu, lambda, tau | [mu, lambda] = 1, tau mu tau^-1 = mu lambda^2,
//                       tau lambda tau^-1 = mu^3 lambda^7 >,
// is not modelled as a group; only the holonomy condition it induces is.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "hermsymp/types.hpp"

namespace hermsymp::knot {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q", "-p/q" or an integer "p".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// Representative of r mod Z in [0, 1).
Rational mod_one(const Rational& r);
bool is_integer(const Rational& r);

/// Holonomy parameters: mu -> diag(e^{2 pi i phi}, e^{-2 pi i phi}),
/// lambda -> diag(e^{2 pi i psi}, e^{-2 pi i psi}).
struct RepPoint {
  Rational phi;
  Rational psi;
  friend bool operator==(const RepPoint&, const RepPoint&) = default;
};

using RowVector = std::array<Rational, 2>;

/// 2x2 integer matrix of determinant 1, acting on row vectors from the right.
class GluingMatrix {
 public:
  GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  std::int64_t operator()(int row, int col) const { return entries_[row][col]; }
  GluingMatrix inverse() const;
  RowVector apply(const RowVector& row) const;  // row * M

 private:
  std::array<std::array<std::int64_t, 2>, 2> entries_;
};

/// f = [[1, 3], [2, 7]], the monodromy of the worked trefoil example.
GluingMatrix trefoil_example_gluing();

/// Point (t, -6t + 1/2) of the open arc 1/12 < t < 5/12 of non-abelian
/// representations of the trefoil group; OutOfArc otherwise.
RepPoint trefoil_arc_point(const Rational& t);

struct CohomologyDims {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Twisted cohomology of the torus with coefficients C^2 via the Fox-calculus
/// complex C^2 -> C^2 (+) C^2 -> C^2 with
///   d0 = (alpha(mu) - I, alpha(lambda) - I),  d1 = (I - alpha(lambda); alpha(mu) - I),
/// acting on row vectors. Ranks use the singular-value cutoff `rank_cutoff`.
CohomologyDims torus_twisted_cohomology(const RepPoint& rep, double rank_cutoff = 1e-8, double alg_tol = 1e-10);

/// (phi, psi)(f + I), exact.
RowVector mapping_torus_row(const RepPoint& rep, const GluingMatrix& f);

/// True iff (phi, psi)(f + I) has integer entries, i.e. the holonomy extends
/// over the mapping torus with tau -> [[0, 1], [-1, 0]].
bool mapping_torus_condition(const RepPoint& rep, const GluingMatrix& f);

struct ChernSimons {
  Rational m;      // (m, n) = (phi, psi)(I + f^{-1})
  Rational n;
  Rational value;  // phi n - psi m, reduced to [0, 1)
};

/// Chern-Simons invariant mod Z of the flat connection on M_f with holonomy
/// (phi, psi); ConditionFailed unless mapping_torus_condition holds.
ChernSimons chern_simons(const RepPoint& rep, const GluingMatrix& f);

/// 4 (cs(rep1) - cs(rep2)) mod Z.
///
/// For the closed bundle the rho-invariant difference satisfies
/// rho(M_f, rep1) - rho(M_f, rep2) = 4 (cs(rep2) - cs(rep1)) mod Z, which is
/// this function with its arguments swapped.
Rational rho_difference_mod_z(const RepPoint& rep1, const RepPoint& rep2, const GluingMatrix& f);

}  // namespace hermsymp::knot
