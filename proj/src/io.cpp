#include "hermsymp/io.hpp"

#include <fstream>
#include <sstream>

namespace hermsymp::io {

namespace {

std::complex<double> entry_from_json(const Json& z, const char* field) {
  if (z.is_number()) return {z.get<double>(), 0.0};
  if (z.is_object() && z.contains("re") && z.contains("im") && z["re"].is_number() && z["im"].is_number()) {
    return {z["re"].get<double>(), z["im"].get<double>()};
  }
  throw ValidationError(std::string("malformed complex entry in '") + field + "'");
}

const Json& require(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw ValidationError(std::string("missing field '") + field + "'");
  }
  return j[field];
}

Index require_index(const Json& j, const char* field) {
  const Json& v = require(j, field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ValidationError(std::string("field '") + field + "' must be a non-negative integer");
  }
  return static_cast<Index>(v.get<std::int64_t>());
}

}  // namespace

CMatrix<double> matrix_from_json(const Json& j, const char* field) {
  if (!j.is_array()) throw ValidationError(std::string("'") + field + "' must be an array of rows");
  const Index rows = static_cast<Index>(j.size());
  Index cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw ValidationError(std::string("'") + field + "' must be an array of rows");
    cols = static_cast<Index>(j[0].size());
  }
  CMatrix<double> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ValidationError(std::string("ragged rows in '") + field + "'");
    }
    for (Index c = 0; c < cols; ++c) m(i, c) = entry_from_json(row[static_cast<std::size_t>(c)], field);
  }
  return m;
}

Json matrix_to_json(const CMatrix<double>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back({{"re", m(i, c).real()}, {"im", m(i, c).imag()}});
    rows.push_back(std::move(row));
  }
  return rows;
}

SpacePtr<double> space_from_json(const Json& j, const Tolerances& tol) {
  const Index dim = require_index(j, "dim");
  CMatrix<double> gram = matrix_from_json(require(j, "gram"), "gram");
  CMatrix<double> gamma = matrix_from_json(require(j, "gamma"), "gamma");
  if (gram.rows() != dim || gram.cols() != dim || gamma.rows() != dim || gamma.cols() != dim) {
    throw ValidationError("gram and gamma must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  return make_space<double>(std::move(gram), std::move(gamma), tol);
}

Json space_to_json(const HermitianSymplecticSpace<double>& space) {
  return {{"dim", space.dim()}, {"gram", matrix_to_json(space.gram())}, {"gamma", matrix_to_json(space.gamma())}};
}

Lagrangian<double> lagrangian_from_json(const SpacePtr<double>& space, const Json& j) {
  CMatrix<double> basis = matrix_from_json(require(j, "basis"), "basis");
  if (basis.rows() == 0 && space->dim() == 0) basis.resize(0, 0);
  return lagrangian_from_basis<double>(space, basis);
}

Json lagrangian_to_json(const Lagrangian<double>& w) { return {{"basis", matrix_to_json(w.basis())}}; }

BordismRelation<double> relation_from_json(const SpacePtr<double>& source, const SpacePtr<double>& target,
                                           const Json& j) {
  const Index n0 = require_index(j, "source_dim");
  const Index n1 = require_index(j, "target_dim");
  if (n0 != source->dim() || n1 != target->dim()) {
    throw ValidationError("relation dimensions do not match the given spaces");
  }
  return BordismRelation<double>(source, target, matrix_from_json(require(j, "basis"), "basis"));
}

Json relation_to_json(const BordismRelation<double>& rel) {
  return {{"source_dim", rel.source()->dim()},
          {"target_dim", rel.target()->dim()},
          {"basis", matrix_to_json(rel.graph().basis())}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace hermsymp::io
