#pragma once

// Harmonic forms on the flat torus R^2/Z^2 with the metric for which
// {dx, t dy} is orthonormal. Coordinates are taken in the basis
// (1, dx, dy, dx^dy).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "hermsymp/maslov.hpp"

namespace hermsymp {

template <typename Real>
class TorusModel {
 public:
  explicit TorusModel(Real t, const Tolerances& tol = {}) : t_(t) {
    if (!(t > Real(0)) || !std::isfinite(static_cast<double>(t))) {
      throw ValidationError("torus metric parameter must be positive");
    }
    const Real area = 4 * std::numbers::pi_v<Real> * std::numbers::pi_v<Real>;
    CMatrix<Real> gram = CMatrix<Real>::Zero(4, 4);
    gram(0, 0) = area * t;  // <1, 1>
    gram(1, 1) = area * t;  // <dx, dx>
    gram(2, 2) = area / t;  // <dy, dy>
    gram(3, 3) = area / t;  // <dx^dy, dx^dy>

    // Columns are the images of the basis forms.
    CMatrix<Real> gamma = CMatrix<Real>::Zero(4, 4);
    gamma(3, 0) = t;             // 1     -> t dx^dy
    gamma(2, 1) = t;             // dx    -> t dy
    gamma(1, 2) = -Real(1) / t;  // dy    -> -(1/t) dx
    gamma(0, 3) = -Real(1) / t;  // dx^dy -> -(1/t)
    space_ = make_space<Real>(std::move(gram), std::move(gamma), tol);
  }

  Real t() const { return t_; }
  const SpacePtr<Real>& space() const { return space_; }

 private:
  Real t_;
  SpacePtr<Real> space_;
};

/// V = H^0 (+) span{a dx + b dy}, the boundary Lagrangian of a solid torus
/// whose meridian disc kills the complementary class.
template <typename Real>
Lagrangian<Real> integer_pair_lagrangian(const TorusModel<Real>& model, std::int64_t a, std::int64_t b,
                                         bool reduce_gcd = false) {
  if (a == 0 && b == 0) throw ValidationError("(a, b) must not both be zero");
  if (reduce_gcd) {
    const std::int64_t g = std::gcd(a, b);
    a /= g;
    b /= g;
  }
  CMatrix<Real> basis = CMatrix<Real>::Zero(4, 2);
  basis(0, 0) = 1;
  basis(1, 1) = static_cast<Real>(a);
  basis(2, 1) = static_cast<Real>(b);
  return lagrangian_from_basis<Real>(model.space(), basis);
}

/// Closed form of m(V_X, V_Y) on the torus:
///   -(1/(pi i)) (pi i + log(-((ita+b)/(ita-b)) ((itA-B)/(itA+B)))) + dim(V_X cap V_Y)
/// with dim(V_X cap V_Y) = 1 + [(a,b) parallel to (A,B)].
template <typename Real>
Real torus_m_closed_form(std::int64_t a, std::int64_t b, std::int64_t big_a, std::int64_t big_b, Real t,
                         const Tolerances& tol = {}) {
  if ((a == 0 && b == 0) || (big_a == 0 && big_b == 0)) throw ValidationError("integer pairs must be nonzero");
  if (!(t > Real(0))) throw ValidationError("torus metric parameter must be positive");
  using C = Complex<Real>;
  const C it(0, t);
  const Real ra = static_cast<Real>(a), rb = static_cast<Real>(b);
  const Real rA = static_cast<Real>(big_a), rB = static_cast<Real>(big_b);
  const C ratio = ((it * ra + rb) / (it * ra - rb)) * ((it * rA - rB) / (it * rA + rB));
  const C arg = -ratio;

  const Real gap = std::abs(arg + Real(1));
  const Real near = static_cast<Real>(tol.eig);
  Real log_imag;
  if (gap < near) {
    log_imag = std::numbers::pi_v<Real>;  // log(-1) = i pi on the chosen branch
  } else if (gap < 100 * near) {
    throw BranchCut("log argument lies too close to -1");
  } else {
    log_imag = std::arg(arg);
  }
  const Index dim = 1 + ((a * big_b - b * big_a) == 0 ? 1 : 0);
  // Real part of -(1/(pi i)) (pi i + log z) is -1 - Im(log z) / pi.
  return -Real(1) - log_imag / std::numbers::pi_v<Real> + static_cast<Real>(dim);
}

template <typename Real>
Real torus_m_generic(std::int64_t a, std::int64_t b, std::int64_t big_a, std::int64_t big_b, Real t,
                     const Tolerances& tol = {}) {
  const TorusModel<Real> model(t, tol);
  return m_value(integer_pair_lagrangian(model, a, b), integer_pair_lagrangian(model, big_a, big_b));
}

template <typename Real>
struct SweepRow {
  Real t;
  Real m_closed;
  Real m_generic;
  Real delta;
};

template <typename Real>
struct SweepReport {
  std::vector<SweepRow<Real>> rows;
  Real max_delta = 0;
  bool varies = false;  // m_generic not constant over the sweep (beyond 1e-9)
};

template <typename Real>
SweepReport<Real> torus_m_sweep(std::int64_t a, std::int64_t b, std::int64_t big_a, std::int64_t big_b,
                                const std::vector<Real>& t_values, const Tolerances& tol = {}) {
  SweepReport<Real> report;
  report.rows.reserve(t_values.size());
  for (const Real t : t_values) {
    SweepRow<Real> row{t, torus_m_closed_form(a, b, big_a, big_b, t, tol), torus_m_generic(a, b, big_a, big_b, t, tol),
                       0};
    row.delta = std::abs(row.m_closed - row.m_generic);
    report.max_delta = std::max(report.max_delta, row.delta);
    report.rows.push_back(row);
  }
  if (!report.rows.empty()) {
    const auto [lo, hi] = std::minmax_element(report.rows.begin(), report.rows.end(),
                                              [](const auto& x, const auto& y) { return x.m_generic < y.m_generic; });
    report.varies = hi->m_generic - lo->m_generic > Real(1e-9);
  }
  return report;
}

/// t_min, ..., t_max in `steps` evenly spaced points (a single point if steps == 1).
template <typename Real>
std::vector<Real> linspace(Real t_min, Real t_max, std::size_t steps) {
  std::vector<Real> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(steps == 1 ? t_min : t_min + (t_max - t_min) * static_cast<Real>(i) / static_cast<Real>(steps - 1));
  }
  return out;
}

}  // namespace hermsymp
