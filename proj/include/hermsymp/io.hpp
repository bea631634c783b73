#pragma once

// JSON encoding of spaces, Lagrangians and relations (double precision).
//
//   space:      {"dim": 2k, "gram": [[z, ...], ...], "gamma": [[z, ...], ...]}
//   Lagrangian: {"basis": [[z, ...], ...]}              (2k rows, k columns)
//   relation:   {"source_dim": n0, "target_dim": n1, "basis": [[z, ...], ...]}
//
// where z is {"re": x, "im": y} or a bare real number. Relation bases are in
// the coordinates of H0 (+) H1, source block first.

#include <string>

#include <json.hpp>

#include "hermsymp/bordism.hpp"
#include "hermsymp/lagrangian.hpp"

namespace hermsymp::io {

using Json = nlohmann::json;

CMatrix<double> matrix_from_json(const Json& j, const char* field);
Json matrix_to_json(const CMatrix<double>& m);

SpacePtr<double> space_from_json(const Json& j, const Tolerances& tol = {});
Json space_to_json(const HermitianSymplecticSpace<double>& space);

Lagrangian<double> lagrangian_from_json(const SpacePtr<double>& space, const Json& j);
Json lagrangian_to_json(const Lagrangian<double>& w);

BordismRelation<double> relation_from_json(const SpacePtr<double>& source, const SpacePtr<double>& target,
                                           const Json& j);
Json relation_to_json(const BordismRelation<double>& rel);

/// Reads and parses a JSON file; ValidationError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace hermsymp::io
