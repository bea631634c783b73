// Writes the JSON fixtures used by the CLI tests.
//
//   make_fixtures <output-dir>
//
// The random 6-dimensional triple is cross-checked against the eigen-solve
// oracle before its index is written to golden_triple.txt.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "hermsymp/hermsymp.hpp"
#include "hermsymp/io.hpp"
#include "hermsymp/random.hpp"
#include "oracles.hpp"

using namespace hermsymp;
using M = CMatrix<double>;

namespace {

std::string dir;

void write(const std::string& name, const io::Json& j) {
  std::ofstream out(dir + "/" + name);
  out << j.dump(2) << '\n';
}

io::Json basis_json(const M& basis) { return {{"basis", io::matrix_to_json(basis)}}; }

M column(std::initializer_list<double> entries) {
  M c(static_cast<Index>(entries.size()), 1);
  Index i = 0;
  for (double x : entries) c(i++, 0) = x;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  dir = argv[1];

  const auto plane = standard_space<double>(1);
  write("plane.json", io::space_to_json(*plane));
  write("plane_x.json", basis_json(column({1, 0})));
  write("plane_diag.json", basis_json(column({1, 1})));
  write("plane_near_x.json", basis_json(column({1, 1e-7})));
  write("plane_bad_shape.json", basis_json(M::Identity(2, 2)));

  const auto std4 = standard_space<double>(2);
  write("standard4.json", io::space_to_json(*std4));

  write("not_symplectic.json",
        {{"dim", 2}, {"gram", io::matrix_to_json(M::Identity(2, 2))}, {"gamma", io::matrix_to_json(M::Identity(2, 2))}});

  const TorusModel<double> torus(1.0);
  write("torus_t1.json", io::space_to_json(*torus.space()));
  write("torus_vx.json", io::lagrangian_to_json(integer_pair_lagrangian(torus, 1, 1)));
  write("torus_vy.json", io::lagrangian_to_json(integer_pair_lagrangian(torus, 1, 0)));

  // Rotation by a quarter turn preserves the standard form.
  M rotation(2, 2);
  rotation << 0, -1, 1, 0;
  write("rel_rotation.json", io::relation_to_json(graph_relation<double>(plane, plane, rotation)));
  write("rel_identity.json", io::relation_to_json(identity_relation(plane)));

  random::Engine rng(20261018);
  const auto space6 = random::space<double>(3, rng);
  const auto u = random::lagrangian<double>(space6, rng);
  const auto v = random::lagrangian<double>(space6, rng);
  const auto w = random::lagrangian<double>(space6, rng);
  const auto sigma = triple_index(u, v, w);
  const double oracle_sum = oracle::m(*space6, u.basis(), v.basis()) + oracle::m(*space6, v.basis(), w.basis()) +
                            oracle::m(*space6, w.basis(), u.basis());
  if (std::abs(oracle_sum - static_cast<double>(sigma.value)) > 1e-9) {
    std::cerr << "oracle disagrees: " << oracle_sum << " vs " << sigma.value << '\n';
    return 1;
  }
  write("random6.json", io::space_to_json(*space6));
  write("random6_u.json", io::lagrangian_to_json(u));
  write("random6_v.json", io::lagrangian_to_json(v));
  write("random6_w.json", io::lagrangian_to_json(w));
  std::ofstream(dir + "/golden_triple.txt") << sigma.value << '\n';

  std::ofstream(dir + "/malformed.json") << "{\"dim\": 2, \"gram\": [[1, 0], [0, 1]\n";
  std::cout << "wrote fixtures to " << dir << " (golden triple index " << sigma.value << ")\n";
  return 0;
}
