#include <string>
#include <vector>

#include "doctest.h"
#include "proofscope.hpp"

using namespace sunitgcd;

TEST_CASE("parameter selection for the exponent budget") {
  ProofParams p1 = choose_params(1);
  CHECK(p1.k == 5);
  CHECK(p1.h == 52);
  CHECK(p1.n == 317);
  CHECK(p1.epsilon0 == 28);
  CHECK(p1.delta == Rational(28, 60));

  ProofParams p4 = choose_params(4);
  CHECK(p4.k == 2);
  CHECK(p4.h == 10);
  CHECK(p4.n == 32);
  CHECK(p4.epsilon0 == 22);
  CHECK(p4.delta == Rational(22, 15));

  ProofParams ph = choose_params(Rational(1, 2));
  CHECK(ph.k == 9);
  CHECK(ph.h == 164);
  CHECK(ph.n == 1649);
  CHECK(ph.epsilon0 == 43);

  ProofParams p35 = choose_params(Rational(3, 5));
  CHECK(p35.k == 7);
  CHECK(p35.h == 100);
  CHECK(p35.n == 807);
  CHECK(p35.epsilon0 == 12);
  CHECK(p35.delta == Rational(6, 55));

  ProofParams pq = choose_params(Rational(1, 4));
  CHECK(pq.k == 17);
  CHECK(pq.h == 580);
  CHECK(pq.n == 10457);
  CHECK(pq.epsilon0 == Rational(149, 2));

  CHECK_THROWS_AS(choose_params(0), DomainError);
  CHECK_THROWS_AS(choose_params(Rational(-1, 2)), DomainError);
}

TEST_CASE("parameter validation re-checks every constraint") {
  for (Rational eps : {Rational(1), Rational(4), Rational(1, 2), Rational(3, 5)}) {
    ProofParams p = choose_params(eps);
    CHECK(params_valid(p));

    ProofParams smaller_k = p;
    smaller_k.k -= 1;
    CHECK_FALSE(params_valid(smaller_k));

    ProofParams smaller_h = p;
    smaller_h.h -= 1;
    CHECK_FALSE(params_valid(smaller_h));

    ProofParams wrong_n = p;
    wrong_n.n += 1;
    CHECK_FALSE(params_valid(wrong_n));

    ProofParams wrong_eps0 = p;
    wrong_eps0.epsilon0 += 1;
    CHECK_FALSE(params_valid(wrong_eps0));

    ProofParams wrong_delta = p;
    wrong_delta.delta *= 2;
    CHECK_FALSE(params_valid(wrong_delta));
  }
}

TEST_CASE("auxiliary point coordinates follow the shifted and tail layout") {
  AuxPoint p = build_point(4, 9, 2, 1);
  CHECK(p.n() == 5);
  CHECK(p.coordinates ==
        std::vector<Rational>{Rational(3, 8), Rational(15, 8), Rational(1, 9),
                              Rational(4, 9), Rational(16, 9)});
  CHECK(p.z(1) == Rational(3, 8));
  CHECK(p.z(2) == Rational(15, 8));
  CHECK(p.y(0, 1) == Rational(1, 9));
  CHECK(p.y(1, 1) == Rational(4, 9));
  CHECK(p.y(2, 1) == Rational(16, 9));
  CHECK(p.special_form_value(1) == Rational(1, 24));
  CHECK(p.special_form_value(2) == Rational(5, 24));

  AuxPoint q = build_point(4, 9, 1, 1);
  CHECK(q.special_form_value(1) == Rational(1, 24));

  CHECK_THROWS_AS(build_point(4, 1, 2, 1), DomainError);
  CHECK_THROWS_AS(build_point(0, 9, 2, 1), DomainError);
  CHECK_THROWS_AS(build_point(4, 0, 2, 1), DomainError);
  CHECK_THROWS_AS(build_point(4, 9, 0, 1), DomainError);
  CHECK_THROWS_AS(build_point(4, 9, 2, 0), DomainError);
}

TEST_CASE("place partition splits S by the local size of v") {
  PlaceSet s({Integer(2), Integer(3)});
  SPartition big = SPartition::of(9, s);
  REQUIRE(big.s_plus.size() == 1);
  CHECK(big.s_plus[0].archimedean);
  REQUIRE(big.s_minus.size() == 2);
  CHECK(big.s_minus[0].prime == 2);
  CHECK(big.s_minus[1].prime == 3);
  CHECK(big.in_plus(Place::infinity()));
  CHECK_FALSE(big.in_plus(Place::finite(2)));

  SPartition small = SPartition::of(Rational(1, 9), s);
  REQUIRE(small.s_plus.size() == 1);
  CHECK(small.s_plus[0].prime == 3);
  CHECK(small.s_minus.size() == 2);
  CHECK(small.s_minus[0].archimedean);
}

TEST_CASE("linear form values use the closed form at large places") {
  AuxPoint p = build_point(4, 9, 2, 1);
  PlaceSet s({Integer(2), Integer(3)});
  LinearFormValues vals = linear_form_values(p, SPartition::of(9, s));
  REQUIRE(vals.places.size() == 3);
  CHECK(vals.places[0].archimedean);
  CHECK(vals.places[1].prime == 2);
  CHECK(vals.places[2].prime == 3);
  // Archimedean place is in S+: shifted rows take the closed-form value.
  CHECK(vals.abs_values[0] ==
        std::vector<Rational>{Rational(1, 24), Rational(5, 24), Rational(1, 9),
                              Rational(4, 9), Rational(16, 9)});
  // Finite places are in S-: shifted rows take the coordinate z_j.
  CHECK(vals.abs_values[1] ==
        std::vector<Rational>{8, 8, 1, Rational(1, 4), Rational(1, 16)});
  CHECK(vals.abs_values[2] ==
        std::vector<Rational>{Rational(1, 3), Rational(1, 3), 9, 9, 9});
}

TEST_CASE("double product splits into special block, tail block, and point factor") {
  AuxPoint p = build_point(4, 9, 2, 1);
  PlaceSet s({Integer(2), Integer(3)});
  DoubleProductLedger d = double_product(p, SPartition::of(9, s), s);
  CHECK_FALSE(d.vanishes);
  CHECK(d.p_s == 135);
  CHECK(d.special_part == Rational(5, 81));
  CHECK(d.tail_part == 1);  // the tail coordinates are S-units
  CHECK(d.n == 5);
  CHECK(d.log_value() < 0);

  // u = -1 with k >= 2 zeroes the second shifted coordinate.
  AuxPoint z = build_point(-1, -1, 2, 1);
  PlaceSet s5({Integer(5)});
  DoubleProductLedger dz = double_product(z, SPartition::of(-1, s5), s5);
  CHECK(dz.vanishes);
  CHECK(dz.special_part == 0);
  CHECK(dz.tail_part == 1);
  CHECK_THROWS_AS(dz.log_form(), InternalError);
}

TEST_CASE("inequality chain ledger without the outside-S hypothesis") {
  PlaceSet s({Integer(2), Integer(3)});
  ProofParams params = choose_params(1);
  ChainLedger led = verify_chain(SUnit::from_rational(16, s),
                                 SUnit::from_rational(81, s), params, s);
  CHECK_FALSE(led.swapped);
  CHECK(led.u == 16);
  CHECK(led.v == 81);
  CHECK(led.point_built);
  CHECK_FALSE(led.hypothesis_met);  // log 5 < (1/2) log 81
  CHECK(led.hypothesis_note == "outside-S inequality unmet at this epsilon");
  CHECK(led.tail_forms_unit);
  REQUIRE(led.rows.size() == 3);
  CHECK(led.rows[0].name == "unconditional-bound");
  CHECK_FALSE(led.rows[0].requires_hypothesis);
  CHECK(led.rows[0].checked);
  CHECK(led.rows[0].holds);
  CHECK(led.rows[1].name == "hypothesis-bound");
  CHECK(led.rows[1].requires_hypothesis);
  CHECK_FALSE(led.rows[1].checked);
  CHECK(led.rows[2].name == "final-bound");
  CHECK_FALSE(led.rows[2].checked);
  CHECK(led.all_checked_hold);

  // Height ordering is symmetrized: arguments arrive swapped.
  ChainLedger sw = verify_chain(SUnit::from_rational(81, s),
                                SUnit::from_rational(16, s), params, s);
  CHECK(sw.swapped);
  CHECK(sw.u == 16);
  CHECK(sw.v == 81);
}

TEST_CASE("inequality chain ledger with the hypothesis met") {
  // gcd(63, 728) has the part 7 outside {2,3}, and 7^4 > 729: the outside-S
  // inequality holds at epsilon = 1/2.
  PlaceSet s({Integer(2), Integer(3)});
  ProofParams params = choose_params(Rational(1, 2));
  ChainLedger led = verify_chain(SUnit::from_rational(64, s),
                                 SUnit::from_rational(729, s), params, s);
  CHECK(led.hypothesis_met);
  CHECK(led.hypothesis_note.empty());
  CHECK(led.point_built);
  CHECK(led.tail_forms_unit);
  REQUIRE(led.rows.size() == 3);
  for (const ChainRow& row : led.rows) {
    CHECK(row.checked);
    CHECK(row.holds);
  }
  CHECK(led.all_checked_hold);
}

TEST_CASE("inequality chain ledger on a vanishing double product") {
  PlaceSet s5({Integer(5)});
  ProofParams params = choose_params(4);  // k = 2, so the final row is live
  ChainLedger led = verify_chain(SUnit::from_rational(-1, s5),
                                 SUnit::from_rational(-1, s5), params, s5);
  CHECK(led.hypothesis_met);  // -log 2 < 0 = -(eps/2) log 1
  CHECK(led.point_built);
  CHECK(led.product.vanishes);
  CHECK(led.tail_forms_unit);
  REQUIRE(led.rows.size() == 3);
  for (const ChainRow& row : led.rows) {
    CHECK(row.checked);
    CHECK(row.holds);
    CHECK(row.relation == Cmp::Less);
  }
  CHECK(led.all_checked_hold);
}

TEST_CASE("inequality chain ledger degenerates when a shift vanishes identically") {
  PlaceSet s5({Integer(5)});
  ProofParams params = choose_params(4);
  ChainLedger led = verify_chain(SUnit::from_rational(1, s5),
                                 SUnit::from_rational(5, s5), params, s5);
  CHECK_FALSE(led.point_built);
  CHECK_FALSE(led.all_checked_hold);
  CHECK(led.rows.empty());
  CHECK(led.hypothesis_note == "u = 1 or v = 1: shifted values vanish");
}

TEST_CASE("two-sided height bound on the auxiliary point") {
  ProofParams params;
  params.epsilon = 1;
  params.k = 2;
  params.h = 1;
  params.n = 5;
  AuxHeightBound b = aux_height_bound(4, 9, params);
  CHECK(b.h_point == 135);
  CHECK(b.bound_mid == 2592);   // 2 * 16 * 81
  CHECK(b.bound_final == 59049);  // 9^5
  CHECK(b.preconditions_met);
  CHECK(b.holds);

  // Preconditions fail when H(v) < H(u); the final bound then collapses.
  AuxHeightBound r = aux_height_bound(9, 4, params);
  CHECK_FALSE(r.preconditions_met);
  CHECK_FALSE(r.holds);  // 2592 > 4^5 = 1024
}
