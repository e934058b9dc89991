#include <doctest.h>

#include "upsem/enumerate.hpp"
#include "upsem/errors.hpp"
#include "upsem/extension.hpp"

using namespace upsem;

TEST_CASE("building the standard extensions") {
  ExtensionSemigroup u2 = build_extension(chain_table(2), SpaceKind::upsilon);
  CHECK(u2.size() == 4);

  ExtensionSemigroup l3 = build_extension(chain_table(3), SpaceKind::lambda);
  CHECK(l3.size() == 4);
  const AnalysisReport a3 = analyze_extension(l3);
  CHECK(a3.semilattice);
  CHECK(a3.linear);

  ExtensionSemigroup l4 = build_extension(chain_table(4), SpaceKind::lambda);
  CHECK(l4.size() == 12);
  const AnalysisReport a4 = analyze_extension(l4);
  CHECK(a4.commutative);
  CHECK(a4.band);
  CHECK_FALSE(a4.linear);
}

TEST_CASE("the upsilon(2) product table over the 2-chain") {
  ExtensionSemigroup e = build_extension(chain_table(2), SpaceKind::upsilon);
  // carrier order: <{0}>, <{0},{1}>, <{1}>, <{0,1}>
  REQUIRE(e.at(0) == point_family(2, 0));
  REQUIRE(e.at(1) == up_closure(2, {1, 2}));
  REQUIRE(e.at(2) == point_family(2, 1));
  REQUIRE(e.at(3) == principal(2, 3));
  const int expected[4][4] = {
      {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 2, 3}, {0, 0, 3, 3}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(e.product_index(i, j) == expected[i][j]);
}

TEST_CASE("analysis of upsilon over the 3-chain and the vee") {
  ExtensionSemigroup chain = build_extension(chain_table(3), SpaceKind::upsilon);
  const AnalysisReport a = analyze_extension(chain);
  CHECK(a.band);
  CHECK(a.commutative);
  CHECK(a.semilattice);
  CHECK(a.idempotent_count == chain.size());

  ExtensionSemigroup vee = build_extension(vee_table(), SpaceKind::upsilon);
  const AnalysisReport b = analyze_extension(vee);
  CHECK_FALSE(b.band);
  REQUIRE(b.band_witness.has_value());
  // first non-idempotent in enumeration order, rechecked from scratch
  CHECK(b.band_witness->f == up_closure(3, {0b001, 0b110}));
  CHECK(b.band_witness->ff == point_family(3, 0));
  CHECK(product(b.band_witness->f, b.band_witness->f, vee_table()) ==
        b.band_witness->ff);
  CHECK(b.idempotent_count < vee.size());
}

TEST_CASE("N2 over the vee is not commutative") {
  const SpaceCarrier sc = make_carrier(SpaceKind::n2, 3);
  const auto w = find_commutativity_violation(vee_table(), sc);
  REQUIRE(w.has_value());
  CHECK(w->a == up_closure(3, {0b011, 0b101}));
  CHECK(w->b == principal(3, 0b110));
  CHECK(w->ab == up_closure(3, {0b011, 0b101}));
  CHECK(w->ba == point_family(3, 0));
  // soundness against the antichain route
  CHECK(product(w->a, w->b, vee_table()) == w->ab);
  CHECK(product(w->b, w->a, vee_table()) == w->ba);
  // {0} separates the two products
  CHECK(member(w->ba, 0b001));
  CHECK_FALSE(member(w->ab, 0b001));
}

TEST_CASE("Clifford violations in phi and lambda over the vee") {
  const SpaceCarrier phi = make_carrier(SpaceKind::phi, 3);
  const auto wp = find_nm_clifford_violation(vee_table(), phi, 1, 2);
  REQUIRE(wp.has_value());
  CHECK(*wp == principal(3, 0b110));  // <{x,y}> itself

  const SpaceCarrier lam = make_carrier(SpaceKind::lambda, 3);
  const auto wl = find_nm_clifford_violation(vee_table(), lam, 1, 2);
  REQUIRE(wl.has_value());
  CHECK(*wl == up_closure(3, {0b011, 0b101, 0b110}));

  CHECK_FALSE(find_nm_clifford_violation(chain_table(3), phi, 1, 2).has_value());
  const SpaceCarrier lam3 = make_carrier(SpaceKind::lambda, 3);
  CHECK_FALSE(find_nm_clifford_violation(chain_table(3), lam3, 1, 2).has_value());
  CHECK_THROWS_AS(find_nm_clifford_violation(vee_table(), phi, 0, 1), input_error);
}

TEST_CASE("regularity in upsilon") {
  SpaceCache cache;
  // idempotents are regular via themselves
  CHECK(is_regular_in_upsilon(point_family(3, 1), vee_table(), cache));
  CHECK(is_regular_in_upsilon(principal(3, 0b111), vee_table(), cache));
  // the triangle family is not regular over the vee
  CHECK_FALSE(is_regular_in_upsilon(up_closure(3, {0b011, 0b101, 0b110}),
                                    vee_table(), cache));
  // every filter over the 2-chain is regular
  for (const UpFamily& f : enumerate_space(SpaceKind::phi, 2))
    CHECK(is_regular_in_upsilon(f, chain_table(2), cache));
  CHECK_THROWS_AS(
      is_regular_in_upsilon(point_family(2, 0), chain_table(3), cache),
      input_error);
}

TEST_CASE("closure of the subspaces under the product") {
  // product_index throws internal_error if a product escapes its space
  std::vector<CayleyTable> bases;
  for (int n = 1; n <= 3; ++n)
    for (const CayleyTable& t : enumerate_semigroups(n, SemigroupClass::all))
      bases.push_back(t);
  for (const CayleyTable& t : enumerate_semigroups(4, SemigroupClass::band))
    bases.push_back(t);
  for (const CayleyTable& t :
       enumerate_semigroups(4, SemigroupClass::commutative))
    bases.push_back(t);
  for (const CayleyTable& base : bases)
    for (const SpaceKind k : {SpaceKind::phi, SpaceKind::lambda, SpaceKind::n2,
                              SpaceKind::beta}) {
      ExtensionSemigroup e = build_extension(base, k);
      for (int i = 0; i < e.size(); ++i)
        for (int j = 0; j < e.size(); ++j) CHECK(e.product_index(i, j) >= 0);
    }
}

TEST_CASE("lattice analysis over the chains") {
  const CayleyTable c2 = chain_table(2);
  const auto j2 = join_table_of(c2);
  REQUIRE(j2.has_value());
  const LatticeAnalysis u2 = analyze_lattice_extension(c2, *j2, SpaceKind::upsilon);
  CHECK(u2.is_lattice);

  // upsilon(2) with both extended operations is the boolean square
  ExtensionSemigroup meet_ext = build_extension(c2, SpaceKind::upsilon);
  ExtensionSemigroup join_ext = build_extension(*j2, SpaceKind::upsilon);
  CayleyTable meet4(4), join4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      meet4.set(i, j, meet_ext.product_index(i, j));
      // the join extension enumerates the same carrier in the same order
      join4.set(i, j, join_ext.product_index(i, j));
    }
  CayleyTable bool_meet(4), bool_join(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      bool_meet.set(a, b, a & b);
      bool_join.set(a, b, a | b);
    }
  CHECK(are_isomorphic_pairs(meet4, join4, bool_meet, bool_join));

  const CayleyTable c3 = chain_table(3);
  const auto j3 = join_table_of(c3);
  const LatticeAnalysis l3 = analyze_lattice_extension(c3, *j3, SpaceKind::lambda);
  CHECK_FALSE(l3.is_lattice);
  REQUIRE(l3.witness.has_value());
  CHECK(l3.witness->a == point_family(3, 1));
  CHECK(l3.witness->b == up_closure(3, {0b011, 0b101, 0b110}));

  const LatticeAnalysis p3 = analyze_lattice_extension(c3, *j3, SpaceKind::phi);
  CHECK_FALSE(p3.is_lattice);
  REQUIRE(p3.witness.has_value());
  CHECK(p3.witness->a == point_family(3, 1));
  CHECK(p3.witness->b == principal(3, 0b101));

  const LatticeAnalysis u5 = analyze_lattice_extension(
      chain_table(5), *join_table_of(chain_table(5)), SpaceKind::upsilon);
  CHECK_FALSE(u5.is_lattice);
}

TEST_CASE("lattice analysis rejects non-lattice bases") {
  // absorption fails when join is not the real join
  CHECK_THROWS_AS(
      analyze_lattice_extension(chain_table(2), chain_table(2), SpaceKind::phi),
      input_error);
  CHECK_THROWS_AS(
      analyze_lattice_extension(chain_table(2), left_zero_table(2), SpaceKind::phi),
      input_error);
}

TEST_CASE("extension caps") {
  CHECK_THROWS_AS(build_extension(chain_table(5), SpaceKind::upsilon), cap_error);
  CHECK_THROWS_AS(build_extension(chain_table(7), SpaceKind::phi), cap_error);
  // beta stays available at the carrier cap
  ExtensionSemigroup b8 = build_extension(chain_table(8), SpaceKind::beta);
  CHECK(b8.size() == 8);
  const AnalysisReport a = analyze_space(chain_table(8), b8.carrier);
  CHECK(a.semilattice);
  CHECK(a.linear);
}

TEST_CASE("scans refuse a base that does not match the space") {
  const SpaceCarrier sc = make_carrier(SpaceKind::upsilon, 3);
  CHECK_THROWS_AS(find_band_violation(chain_table(2), sc), input_error);
  CHECK_THROWS_AS(count_idempotents(chain_table(4), sc), input_error);
}

TEST_CASE("index lookups") {
  ExtensionSemigroup e = build_extension(chain_table(3), SpaceKind::lambda);
  for (int i = 0; i < e.size(); ++i) CHECK(e.index_of(e.at(i)) == i);
  CHECK(e.index_of(principal(3, 0b011)) == -1);
}
