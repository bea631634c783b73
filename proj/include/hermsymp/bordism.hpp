#pragma once

#include <utility>

#include "hermsymp/lagrangian.hpp"

namespace hermsymp {

/// H0 (+) H1 with block-diagonal gram. With `flip_source` the first factor
/// carries -gamma0, the orientation-reversed structure of an incoming boundary.
template <typename Real>
SpacePtr<Real> product_space(const HermitianSymplecticSpace<Real>& h0, const HermitianSymplecticSpace<Real>& h1,
                             bool flip_source) {
  const Index n0 = h0.dim();
  const Index n1 = h1.dim();
  CMatrix<Real> gram = CMatrix<Real>::Zero(n0 + n1, n0 + n1);
  CMatrix<Real> gamma = CMatrix<Real>::Zero(n0 + n1, n0 + n1);
  gram.topLeftCorner(n0, n0) = h0.gram();
  gram.bottomRightCorner(n1, n1) = h1.gram();
  gamma.topLeftCorner(n0, n0) = flip_source ? CMatrix<Real>(-h0.gamma()) : h0.gamma();
  gamma.bottomRightCorner(n1, n1) = h1.gamma();
  return make_space<Real>(std::move(gram), std::move(gamma), h1.tolerances());
}

/// A Lagrangian relation from H0 to H1: a Lagrangian in H0^- (+) H1.
template <typename Real>
class BordismRelation {
 public:
  BordismRelation(SpacePtr<Real> source, SpacePtr<Real> target, const CMatrix<Real>& graph_basis)
      : source_(std::move(source)),
        target_(std::move(target)),
        product_(product_space(*source_, *target_, true)),
        graph_(lagrangian_from_basis<Real>(product_, graph_basis)) {}

  const SpacePtr<Real>& source() const { return source_; }
  const SpacePtr<Real>& target() const { return target_; }
  const SpacePtr<Real>& product() const { return product_; }
  const Lagrangian<Real>& graph() const { return graph_; }

  CMatrix<Real> source_part() const { return graph_.basis().topRows(source_->dim()); }
  CMatrix<Real> target_part() const { return graph_.basis().bottomRows(target_->dim()); }

 private:
  SpacePtr<Real> source_;
  SpacePtr<Real> target_;
  SpacePtr<Real> product_;
  Lagrangian<Real> graph_;
};

/// Graph {(x, S x)} of a linear map S: H0 -> H1. It is a valid relation iff S
/// carries omega0 to omega1.
template <typename Real>
BordismRelation<Real> graph_relation(SpacePtr<Real> source, SpacePtr<Real> target, const CMatrix<Real>& map) {
  const Index n0 = source->dim();
  if (map.rows() != target->dim() || map.cols() != n0) throw ValidationError("map has the wrong shape");
  CMatrix<Real> basis(n0 + target->dim(), n0);
  basis << CMatrix<Real>::Identity(n0, n0), map;
  return BordismRelation<Real>(std::move(source), std::move(target), basis);
}

/// The cylinder: diagonal {(x, x)} in H^- (+) H.
template <typename Real>
BordismRelation<Real> identity_relation(const SpacePtr<Real>& space) {
  return graph_relation<Real>(space, space, CMatrix<Real>::Identity(space->dim(), space->dim()));
}

/// A relation out of the zero space, i.e. a bare Lagrangian of the target.
template <typename Real>
BordismRelation<Real> relation_from_lagrangian(const Lagrangian<Real>& v) {
  auto empty = make_space<Real>(CMatrix<Real>(0, 0), CMatrix<Real>(0, 0), v.space()->tolerances());
  return BordismRelation<Real>(std::move(empty), v.space(), v.basis());
}

namespace detail {

// Orthonormal (gram) basis of a subspace of `space` given by spanning columns,
// requiring exactly half the dimension.
template <typename Real>
CMatrix<Real> half_span(const HermitianSymplecticSpace<Real>& space, const CMatrix<Real>& spanning,
                        const char* what) {
  const CMatrix<Real> q = linalg::column_span<Real>(space.whiten(spanning), space.tolerances().rank);
  if (q.cols() != space.half_dim()) {
    throw RankCollapse(std::string(what) + " has dimension " + std::to_string(q.cols()) + ", expected " +
                       std::to_string(space.half_dim()));
  }
  return space.unwhiten(q);
}

}  // namespace detail

/// Symplectic reduction: L(W) = P1(V cap (W (+) H1)) for V the relation graph.
template <typename Real>
Lagrangian<Real> reduce(const BordismRelation<Real>& rel, const Lagrangian<Real>& w) {
  detail::require_same_space(*rel.source(), *w.space());
  const auto& product = *rel.product();
  const Index n0 = rel.source()->dim();
  const Index n1 = rel.target()->dim();
  const double cutoff = product.tolerances().rank;

  CMatrix<Real> constraint = CMatrix<Real>::Zero(n0 + n1, w.dim() + n1);
  constraint.topLeftCorner(n0, w.dim()) = w.basis();
  constraint.bottomRightCorner(n1, n1) = CMatrix<Real>::Identity(n1, n1);

  const CMatrix<Real> qv = product.whiten(rel.graph().basis());
  const CMatrix<Real> qc = linalg::column_span<Real>(product.whiten(constraint), cutoff);
  CMatrix<Real> stacked(n0 + n1, qv.cols() + qc.cols());
  stacked << qv, -qc;
  const CMatrix<Real> kernel = linalg::null_space<Real>(stacked, cutoff);
  const CMatrix<Real> meet = product.unwhiten(qv * kernel.topRows(qv.cols()));

  const CMatrix<Real> image = detail::half_span(*rel.target(), CMatrix<Real>(meet.bottomRows(n1)), "reduced subspace");
  return lagrangian_from_basis<Real>(rel.target(), image);
}

/// Composite relation {(x, z) : (x, y) in rel1, (y, z) in rel2 for some y}.
template <typename Real>
BordismRelation<Real> compose(const BordismRelation<Real>& rel1, const BordismRelation<Real>& rel2) {
  const auto& middle = *rel1.target();
  if (!middle.same_structure(*rel2.source())) {
    throw ValidationError("cannot compose: target of the first relation is not the source of the second");
  }
  const double cutoff = rel1.product()->tolerances().rank;
  const CMatrix<Real> y1 = middle.whiten(rel1.target_part());
  const CMatrix<Real> y2 = middle.whiten(rel2.source_part());
  CMatrix<Real> matching(middle.dim(), y1.cols() + y2.cols());
  matching << y1, -y2;
  const CMatrix<Real> kernel = linalg::null_space<Real>(matching, cutoff);

  const Index n0 = rel1.source()->dim();
  const Index n2 = rel2.target()->dim();
  CMatrix<Real> pairs(n0 + n2, kernel.cols());
  pairs << rel1.source_part() * kernel.topRows(y1.cols()), rel2.target_part() * kernel.bottomRows(y2.cols());

  const auto product = product_space(*rel1.source(), *rel2.target(), true);
  return BordismRelation<Real>(rel1.source(), rel2.target(), detail::half_span(*product, pairs, "composite relation"));
}

/// gamma0(W) (+) L(W), a Lagrangian of the un-flipped boundary H0 (+) H1.
template <typename Real>
Lagrangian<Real> glued_boundary_lagrangian(const Lagrangian<Real>& w, const BordismRelation<Real>& rel) {
  const Lagrangian<Real> propagated = reduce(rel, w);
  const Index n0 = rel.source()->dim();
  const Index n1 = rel.target()->dim();
  CMatrix<Real> basis = CMatrix<Real>::Zero(n0 + n1, (n0 + n1) / 2);
  basis.topLeftCorner(n0, w.dim()) = rel.source()->gamma() * w.basis();
  basis.bottomRightCorner(n1, propagated.dim()) = propagated.basis();
  return lagrangian_from_basis<Real>(product_space(*rel.source(), *rel.target(), false), basis);
}

}  // namespace hermsymp
