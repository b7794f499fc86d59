#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qcube/constructions.hpp"
#include "qcube/structures.hpp"

using namespace qcube;

TEST_CASE("bitrade checks") {
  const CubeShape s23(2, 3);
  for (int t = 0; t <= 2; ++t) CHECK(is_bitrade(VertexSet(s23), t));  // empty set

  // Even-weight set: faces fixing one coordinate hold 2 points, faces fixing
  // two hold 1, so the order is exactly 1.
  const VertexSet even = mds_sum_code(2, 3, 0);
  CHECK(is_bitrade(even, 0));
  CHECK(is_bitrade(even, 1));
  CHECK_FALSE(is_bitrade(even, 2));
  const BitradeCheck fail = check_bitrade(even, 2);
  REQUIRE(fail.odd_face.has_value());
  Index odd_members = 0;
  for (Index x = 0; x < 8; ++x)
    if (fail.odd_face->contains(x) && even.contains(x)) ++odd_members;
  CHECK(odd_members % 2 == 1);

  const VertexSet point = VertexSet::of(CubeShape(2, 2), std::vector<Index>{0});
  CHECK_FALSE(is_bitrade(point, 0));  // |S| = 1 is odd

  CHECK_THROWS_AS(is_bitrade(even, 3), InputError);
  CHECK_THROWS_AS(is_bitrade(even, -1), InputError);
}

TEST_CASE("bitrade order") {
  CHECK(bitrade_order(mds_sum_code(2, 3, 0)) == 1);
  CHECK_FALSE(bitrade_order(VertexSet::of(CubeShape(2, 2), std::vector<Index>{0})).has_value());
  CHECK(bitrade_order(VertexSet(CubeShape(2, 3))) == 2);  // empty: every face count is 0

  // Hamming code and its weight-1 translate: symmetric difference is a
  // bitrade of order >= 3 (both codes have cor 3 and equal size).
  const VertexSet c = hamming_code(2, 3);
  const VertexSet mobile = symmetric_difference(c, translate(c, Index{1}));
  const auto order = bitrade_order(mobile);
  REQUIRE(order.has_value());
  CHECK(*order >= 3);

  const BitradeVerdict v = bitrade_order_verdict(VertexSet::of(CubeShape(2, 2), std::vector<Index>{0}));
  CHECK_FALSE(v.order.has_value());
  REQUIRE(v.witness_face.has_value());
  CHECK(v.witness_face->fixed_positions.empty());  // the whole cube already fails
}

TEST_CASE("bitrade evenness is monotone downward") {
  std::mt19937_64 seeds(808);
  for (const CubeShape& shape : {CubeShape(2, 5), CubeShape(3, 3), CubeShape(4, 2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Index card = static_cast<Index>(seeds() % static_cast<std::uint64_t>(shape.point_count + 1));
      const VertexSet s = random_subset(shape, card, seeds());
      for (int t = 1; t <= shape.n - 1; ++t)
        if (is_bitrade(s, t)) REQUIRE(is_bitrade(s, t - 1));
    }
  }
}

TEST_CASE("mobile sets and components") {
  const VertexSet c = hamming_code(2, 3);
  const VertexSet c1 = translate(c, Index{1});  // translate by e_0

  SECTION("identical sets") {
    const MobileResult r = mobile_and_components(c, c);
    CHECK(r.mobile.empty());
    CHECK(r.comp_1_2.empty());
    CHECK(r.comp_2_1.empty());
    CHECK_FALSE(r.certified_order.has_value());
    CHECK(r.common_cor == 3);
  }

  SECTION("code and its translate") {
    const MobileResult r = mobile_and_components(c, c1);
    CHECK(r.comp_1_2 == c);   // distance-3 code is disjoint from its weight-1 translate
    CHECK(r.comp_2_1 == c1);
    CHECK(r.comp_1_2.cardinality() == 16);
    CHECK(r.comp_2_1.cardinality() == 16);
    CHECK(r.common_cor == 3);
    REQUIRE(r.certified_order.has_value());
    CHECK(*r.certified_order >= 3);
  }

  SECTION("two slabs") {
    const MobileResult r = mobile_and_components(slab(3, 2, 0, 0), slab(3, 2, 0, 1));
    CHECK(r.comp_1_2.cardinality() == 3);
    CHECK(r.comp_2_1.cardinality() == 3);
    CHECK(r.comp_1_2 == slab(3, 2, 0, 0));
    CHECK(r.common_cor == 0);
    REQUIRE(r.certified_order.has_value());
    CHECK(*r.certified_order >= 0);
  }

  SECTION("mobile set of two equal-matrix perfect colorings has order cor") {
    const MobileResult r = mobile_and_components(mds_sum_code(3, 2, 0), mds_sum_code(3, 2, 1));
    REQUIRE(r.certified_order.has_value());
    CHECK(*r.certified_order >= 1);  // (b+c)/q - 1 = 1
  }

  SECTION("errors") {
    CHECK_THROWS_AS(mobile_and_components(c, slab(2, 7, 0, 0)), InputError);        // sizes differ
    CHECK_THROWS_AS(mobile_and_components(c, mds_sum_code(3, 3, 0)), InputError);   // shapes differ
  }
}

TEST_CASE("component lower bound") {
  CHECK(component_lower_bound(ParameterMatrix{CubeShape(2, 7), 1, 7}) == 8);
  CHECK(component_lower_bound(ParameterMatrix{CubeShape(3, 3), 3, 6}) == 4);  // MDS: s = n
  CHECK(component_lower_bound(ParameterMatrix{CubeShape(3, 2), 1, 2}) == 1);
  CHECK_THROWS_AS(component_lower_bound(ParameterMatrix{CubeShape(3, 2), 1, 1}), InputError);
}

TEST_CASE("orthogonal array checks") {
  const CubeShape s23(2, 3);
  const OAResult full = oa_check(VertexSet::full(s23));
  CHECK(full.strength == 3);
  CHECK(full.index_lambda == Rational(1));

  const OAResult ham = oa_check(hamming_code(2, 3));
  CHECK(ham.strength == 3);
  CHECK(ham.index_lambda == Rational(2));
  CHECK(ham.paper_lambda == Rational(1));

  const OAResult mds = oa_check(mds_sum_code(3, 2, 0));
  CHECK(mds.strength == 1);
  CHECK(mds.index_lambda == Rational(1));
  CHECK(mds.paper_lambda == Rational(1));

  const OAResult pt = oa_check(VertexSet::of(s23, std::vector<Index>{3}));
  CHECK(pt.strength == 0);
  CHECK(pt.index_lambda == Rational(1));
  CHECK(pt.paper_lambda == Rational(1, 8));

  CHECK_THROWS_AS(oa_check(VertexSet(s23)), InputError);
}

TEST_CASE("MDS distance-2 verification") {
  CHECK(is_mds_distance2(mds_sum_code(2, 3, 0)));
  CHECK(is_mds_distance2(mds_sum_code(3, 2, 0)));
  CHECK(is_mds_distance2(mds_sum_code(4, 3, 2)));
  CHECK(is_mds_distance2(mds_sum_code(5, 2, 1)));
  CHECK_FALSE(is_mds_distance2(slab(3, 2, 0, 0)));
  CHECK_FALSE(is_mds_distance2(VertexSet(CubeShape(3, 2))));
  CHECK(is_mds_distance2(VertexSet::of(CubeShape(2, 1), std::vector<Index>{0})));

  // every MDS-distance-2 set is a perfect coloring with b = n, c = n(q-1)
  for (const VertexSet& s : {mds_sum_code(3, 2, 0), mds_sum_code(3, 3, 1), mds_sum_code(4, 2, 0),
                             mds_sum_code(5, 2, 3)}) {
    REQUIRE(is_mds_distance2(s));
    const auto m = check_perfect_direct(s);
    REQUIRE(m.has_value());
    const CubeShape& shape = s.shape();
    CHECK(m->b == shape.n);
    CHECK(m->c == static_cast<std::int64_t>(shape.n) * (shape.q - 1));
    CHECK(m->a00() == static_cast<std::int64_t>(shape.n) * (shape.q - 2));
    CHECK(m->a11() == 0);
  }
}

TEST_CASE("OA strength matches spectral cor on random sets") {
  std::mt19937_64 seeds(2718);
  for (const CubeShape& shape : {CubeShape(2, 5), CubeShape(3, 3), CubeShape(4, 2)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Index card =
          1 + static_cast<Index>(seeds() % static_cast<std::uint64_t>(shape.point_count));
      const VertexSet s = random_subset(shape, card, seeds());
      const OAResult oa = oa_check(s);  // throws InternalError on any mismatch
      REQUIRE(oa.strength == cor_spectral(s));
    }
  }
}
