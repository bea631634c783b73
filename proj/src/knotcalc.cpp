#include "hermsymp/knotcalc.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

#include "hermsymp/linalg.hpp"

namespace hermsymp::knot {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ValidationError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

// Complex unit e^{2 pi i r} evaluated on the representative of r in [0, 1).
std::complex<double> unit(const Rational& r) {
  const Rational frac = mod_one(r);
  const double angle = 2 * std::numbers::pi * static_cast<double>(frac.numerator()) /
                       static_cast<double>(frac.denominator());
  return std::polar(1.0, angle);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational mod_one(const Rational& r) {
  // floor division for negative numerators
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return r - q;
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

GluingMatrix::GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : entries_{{{a, b}, {c, d}}} {
  if (a * d - b * c != 1) throw ValidationError("gluing matrix must have determinant 1");
}

GluingMatrix GluingMatrix::inverse() const {
  const auto& e = entries_;
  return GluingMatrix(e[1][1], -e[0][1], -e[1][0], e[0][0]);
}

RowVector GluingMatrix::apply(const RowVector& row) const {
  const auto& e = entries_;
  return {row[0] * e[0][0] + row[1] * e[1][0], row[0] * e[0][1] + row[1] * e[1][1]};
}

GluingMatrix trefoil_example_gluing() { return GluingMatrix(1, 3, 2, 7); }

RepPoint trefoil_arc_point(const Rational& t) {
  if (!(t > Rational(1, 12) && t < Rational(5, 12))) {
    throw OutOfArc("t = " + format_rational(t) + " is outside the open arc 1/12 < t < 5/12");
  }
  return {t, Rational(-6) * t + Rational(1, 2)};
}

CohomologyDims torus_twisted_cohomology(const RepPoint& rep, double rank_cutoff, double alg_tol) {
  using M = CMatrix<double>;
  const std::complex<double> mu = unit(rep.phi);
  const std::complex<double> la = unit(rep.psi);
  M alpha_mu = M::Zero(2, 2), alpha_la = M::Zero(2, 2);
  alpha_mu(0, 0) = mu;
  alpha_mu(1, 1) = std::conj(mu);
  alpha_la(0, 0) = la;
  alpha_la(1, 1) = std::conj(la);
  const M id = M::Identity(2, 2);

  M d0(2, 4), d1(4, 2);
  d0 << alpha_mu - id, alpha_la - id;
  d1 << id - alpha_la, alpha_mu - id;
  if ((d0 * d1).norm() > alg_tol) throw NonComplex("Fox-calculus differentials do not compose to zero");

  const auto r0 = linalg::numerical_rank<double>(d0, rank_cutoff).rank;
  const auto r1 = linalg::numerical_rank<double>(d1, rank_cutoff).rank;
  return {static_cast<int>(2 - r0), static_cast<int>(4 - r0 - r1), static_cast<int>(2 - r1)};
}

RowVector mapping_torus_row(const RepPoint& rep, const GluingMatrix& f) {
  const RowVector row{rep.phi, rep.psi};
  const RowVector image = f.apply(row);
  return {image[0] + row[0], image[1] + row[1]};
}

bool mapping_torus_condition(const RepPoint& rep, const GluingMatrix& f) {
  const RowVector row = mapping_torus_row(rep, f);
  return is_integer(row[0]) && is_integer(row[1]);
}

ChernSimons chern_simons(const RepPoint& rep, const GluingMatrix& f) {
  if (!mapping_torus_condition(rep, f)) {
    throw ConditionFailed("(phi, psi) = (" + format_rational(rep.phi) + ", " + format_rational(rep.psi) +
                          ") does not extend over the mapping torus");
  }
  const RowVector row{rep.phi, rep.psi};
  const RowVector image = f.inverse().apply(row);
  ChernSimons cs;
  cs.m = row[0] + image[0];
  cs.n = row[1] + image[1];
  cs.value = mod_one(rep.phi * cs.n - rep.psi * cs.m);
  return cs;
}

Rational rho_difference_mod_z(const RepPoint& rep1, const RepPoint& rep2, const GluingMatrix& f) {
  return mod_one(Rational(4) * (chern_simons(rep1, f).value - chern_simons(rep2, f).value));
}

}  // namespace hermsymp::knot
