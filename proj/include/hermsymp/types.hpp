#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace hermsymp {

using Index = Eigen::Index;

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Numerical thresholds shared by every operation. The defaults are sized for
// problems of dimension <= ~50 in double precision.
struct Tolerances {
  double alg = 1e-10;      // algebraic identities (gamma^2 = -I, omega = 0, ...)
  double rank = 1e-8;      // singular-value cutoff for ranks and intersections
  double eig = 1e-8;       // distance to -1 at which an eigenvalue is excluded
  double integer = 1e-6;   // allowed distance of a triple index from Z
};

enum class ErrorCode {
  validation,
  eigenvalue_ambiguity,
  intersection_mismatch,
  non_integer_sum,
  rank_collapse,
  branch_cut,
  splitting_failure,
  not_a_graph,
  out_of_arc,
  condition_failed,
  non_complex,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation: return "validation";
    case ErrorCode::eigenvalue_ambiguity: return "eigenvalue_ambiguity";
    case ErrorCode::intersection_mismatch: return "intersection_mismatch";
    case ErrorCode::non_integer_sum: return "non_integer_sum";
    case ErrorCode::rank_collapse: return "rank_collapse";
    case ErrorCode::branch_cut: return "branch_cut";
    case ErrorCode::splitting_failure: return "splitting_failure";
    case ErrorCode::not_a_graph: return "not_a_graph";
    case ErrorCode::out_of_arc: return "out_of_arc";
    case ErrorCode::condition_failed: return "condition_failed";
    case ErrorCode::non_complex: return "non_complex";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define HERMSYMP_DEFINE_ERROR(Name, Code)                              \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  }

HERMSYMP_DEFINE_ERROR(ValidationError, validation);
HERMSYMP_DEFINE_ERROR(EigenvalueAmbiguity, eigenvalue_ambiguity);
HERMSYMP_DEFINE_ERROR(IntersectionMismatch, intersection_mismatch);
HERMSYMP_DEFINE_ERROR(NonIntegerSum, non_integer_sum);
HERMSYMP_DEFINE_ERROR(RankCollapse, rank_collapse);
HERMSYMP_DEFINE_ERROR(BranchCut, branch_cut);
HERMSYMP_DEFINE_ERROR(SplittingFailure, splitting_failure);
HERMSYMP_DEFINE_ERROR(NotAGraph, not_a_graph);
HERMSYMP_DEFINE_ERROR(OutOfArc, out_of_arc);
HERMSYMP_DEFINE_ERROR(ConditionFailed, condition_failed);
HERMSYMP_DEFINE_ERROR(NonComplex, non_complex);

#undef HERMSYMP_DEFINE_ERROR

}  // namespace hermsymp
