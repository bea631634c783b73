#include <gtest/gtest.h>

#include "hermsymp/knotcalc.hpp"

using namespace hermsymp;
using namespace hermsymp::knot;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("1/5"), q(1, 5));
  EXPECT_EQ(parse_rational("-7/10"), q(-7, 10));
  EXPECT_EQ(parse_rational("14/10"), q(7, 5));
  EXPECT_EQ(parse_rational("3"), q(3));
  EXPECT_EQ(parse_rational("+2/4"), q(1, 2));
  EXPECT_EQ(format_rational(q(-19, 10)), "-19/10");
  EXPECT_EQ(format_rational(q(4, 2)), "2");
  for (const char* bad : {"", "1/", "/2", "1/0", "a/b", "1.5", "1/2/3", "1 /2"}) {
    EXPECT_THROW(parse_rational(bad), ValidationError) << bad;
  }
}

TEST(Rationals, ModOneUsesTheUnitInterval) {
  EXPECT_EQ(mod_one(q(17, 10)), q(7, 10));
  EXPECT_EQ(mod_one(q(-16, 10)), q(2, 5));
  EXPECT_EQ(mod_one(q(-3)), q(0));
  EXPECT_EQ(mod_one(q(3, 5)), q(3, 5));
  EXPECT_EQ(mod_one(q(-1, 10)), q(9, 10));
}

TEST(GluingMatrix, DeterminantAndInverse) {
  const auto f = trefoil_example_gluing();
  const auto inv = f.inverse();
  EXPECT_EQ(inv(0, 0), 7);
  EXPECT_EQ(inv(0, 1), -3);
  EXPECT_EQ(inv(1, 0), -2);
  EXPECT_EQ(inv(1, 1), 1);
  EXPECT_THROW(GluingMatrix(1, 2, 3, 4), ValidationError);
  const RowVector v{q(1, 3), q(-2, 7)};
  const RowVector back = inv.apply(f.apply(v));
  EXPECT_EQ(back[0], v[0]);
  EXPECT_EQ(back[1], v[1]);
}

TEST(TrefoilArc, Points) {
  EXPECT_EQ(trefoil_arc_point(q(1, 5)), (RepPoint{q(1, 5), q(-7, 10)}));
  EXPECT_EQ(trefoil_arc_point(q(2, 5)), (RepPoint{q(2, 5), q(-19, 10)}));
  EXPECT_THROW(trefoil_arc_point(q(1, 12)), OutOfArc);
  EXPECT_THROW(trefoil_arc_point(q(5, 12)), OutOfArc);
  EXPECT_THROW(trefoil_arc_point(q(1, 2)), OutOfArc);
}

TEST(TwistedCohomology, ExampleRepresentationsAreAcyclic) {
  EXPECT_EQ(torus_twisted_cohomology({q(1, 5), q(-7, 10)}), (CohomologyDims{0, 0, 0}));
  EXPECT_EQ(torus_twisted_cohomology({q(2, 5), q(-19, 10)}), (CohomologyDims{0, 0, 0}));
}

TEST(TwistedCohomology, TrivialRepresentation) {
  EXPECT_EQ(torus_twisted_cohomology({q(0), q(0)}), (CohomologyDims{2, 4, 2}));
  EXPECT_EQ(torus_twisted_cohomology({q(3), q(-2)}), (CohomologyDims{2, 4, 2}));
}

TEST(TwistedCohomology, VanishesExactlyOffTheIntegerLattice) {
  // Brute force over a rational grid: the complex is acyclic iff phi or psi
  // is non-integral, and otherwise every differential vanishes.
  for (int pn = -12; pn <= 12; ++pn) {
    for (int sn = -12; sn <= 12; ++sn) {
      for (int den : {1, 2, 3, 4, 6}) {
        const RepPoint rep{q(pn, den), q(sn, den)};
        const bool trivial = is_integer(rep.phi) && is_integer(rep.psi);
        const auto expected = trivial ? CohomologyDims{2, 4, 2} : CohomologyDims{0, 0, 0};
        EXPECT_EQ(torus_twisted_cohomology(rep), expected) << format_rational(rep.phi) << " "
                                                           << format_rational(rep.psi);
      }
    }
  }
}

TEST(MappingTorus, Condition) {
  const auto f = trefoil_example_gluing();
  const auto row = mapping_torus_row({q(1, 5), q(-7, 10)}, f);
  EXPECT_EQ(row[0], q(-1));
  EXPECT_EQ(row[1], q(-5));
  EXPECT_TRUE(mapping_torus_condition({q(1, 5), q(-7, 10)}, f));
  EXPECT_TRUE(mapping_torus_condition({q(2, 5), q(-19, 10)}, f));
  EXPECT_FALSE(mapping_torus_condition({q(1, 3), q(0)}, f));
}

TEST(ChernSimons, ExampleValues) {
  const auto f = trefoil_example_gluing();
  const auto cs1 = chern_simons({q(1, 5), q(-7, 10)}, f);
  EXPECT_EQ(cs1.m, q(3));
  EXPECT_EQ(cs1.n, q(-2));
  EXPECT_EQ(cs1.value, q(7, 10));
  const auto cs2 = chern_simons({q(2, 5), q(-19, 10)}, f);
  EXPECT_EQ(cs2.m, q(7));
  EXPECT_EQ(cs2.n, q(-5));
  EXPECT_EQ(cs2.value, q(3, 10));
  EXPECT_EQ(chern_simons({q(0), q(0)}, f).value, q(0));
  EXPECT_THROW(chern_simons({q(1, 3), q(0)}, f), ConditionFailed);
}

TEST(ChernSimons, IntegerShiftsPreservingTheConditionDoNotChangeTheValue) {
  const auto f = trefoil_example_gluing();
  for (const RepPoint base : {RepPoint{q(1, 5), q(-7, 10)}, RepPoint{q(2, 5), q(-19, 10)}}) {
    const Rational cs = chern_simons(base, f).value;
    for (int p = -3; p <= 3; ++p) {
      for (int s = -3; s <= 3; ++s) {
        const RepPoint shifted{base.phi + p, base.psi + s};
        ASSERT_TRUE(mapping_torus_condition(shifted, f));
        EXPECT_EQ(chern_simons(shifted, f).value, cs) << p << " " << s;
      }
    }
  }
}

TEST(RhoDifference, ExampleValue) {
  const auto f = trefoil_example_gluing();
  const RepPoint r1{q(1, 5), q(-7, 10)};
  const RepPoint r2{q(2, 5), q(-19, 10)};
  EXPECT_EQ(rho_difference_mod_z(r1, r2, f), q(3, 5));
  EXPECT_EQ(rho_difference_mod_z(r2, r1, f), q(2, 5));
  EXPECT_EQ(rho_difference_mod_z(r1, r1, f), q(0));
}
