#include <catch2/catch_amalgamated.hpp>

#include <loctor/series.hpp>

#include "support/test_rng.hpp"

using namespace loctor;

namespace {

TowerElement random_element(loctor_test::Rng& rng) {
  const std::vector<long long> denoms{1, 3, 5, 7, 9, 15, 21, 45};
  long long dd = rng.pick(denoms);
  return TowerElement(TorsionCoset(mod1(Rat(rng.range(0, 50), dd))),
                      Int(rng.range(-2, 2)),
                      Rat(rng.range(-24, 24), rng.pick(denoms)),
                      Rat(rng.range(-24, 24), rng.pick(denoms)));
}

TowerElement random_torsion(loctor_test::Rng& rng) {
  const std::vector<long long> orders{3, 5, 7, 9, 15, 21, 45};
  long long m = rng.pick(orders);
  return TowerElement(TorsionCoset(Rat(rng.range(0, m - 1), m)), 0, 0, 0);
}

}  // namespace

TEST_CASE("lower central series membership closed forms") {
  Stage s3 = Stage::finite(3);
  TowerElement z = TowerElement::gen_z(s3);
  CHECK(series_member(z, SeriesIndex::omega()));
  CHECK_FALSE(series_member(z, SeriesIndex::omega_plus_1()));
  for (Int q = 1; q <= 64; ++q) CHECK(series_member(z, SeriesIndex::lcs(q)));

  TowerElement x = TowerElement::gen_x(s3);
  CHECK(series_member(x, SeriesIndex::lcs(1)));
  CHECK_FALSE(series_member(x, SeriesIndex::lcs(2)));
  CHECK(series_member(pow(x, 4), SeriesIndex::lcs(3)));
  CHECK_FALSE(series_member(pow(x, 4), SeriesIndex::lcs(4)));
  CHECK_FALSE(series_member(TowerElement::gen_t(), SeriesIndex::lcs(2)));
  CHECK(series_member(TowerElement::identity(), SeriesIndex::omega_plus_1()));
}

TEST_CASE("mixed-coefficient series membership") {
  CHECK_FALSE(series_member(TowerElement(TorsionCoset(Rat(1, 15)), 0, 0, 0),
                            SeriesIndex::mixed_term(3, 3)));
  CHECK(series_member(TowerElement(TorsionCoset(Rat(1, 7)), 0, 0, 0),
                      SeriesIndex::mixed_term(3, 3)));
  // p = 2: the third term equals the second
  loctor_test::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    TowerElement g = random_torsion(rng);
    CHECK(series_member(g, SeriesIndex::mixed_term(3, 2)) ==
          series_member(g, SeriesIndex::mixed_term(2, 2)));
  }
}

TEST_CASE("series terms are descending") {
  loctor_test::Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    TowerElement g = random_element(rng);
    for (Int q = 1; q <= 8; ++q)
      if (series_member(g, SeriesIndex::lcs(q + 1)))
        CHECK(series_member(g, SeriesIndex::lcs(q)));
    if (series_member(g, SeriesIndex::omega()))
      for (Int q = 1; q <= 12; ++q)
        CHECK(series_member(g, SeriesIndex::lcs(q)));
    for (int n = 1; n <= 2; ++n)
      for (long long p : {2, 3, 5})
        if (series_member(g, SeriesIndex::mixed_term(n + 1, p)))
          CHECK(series_member(g, SeriesIndex::mixed_term(n, p)));
  }
}

TEST_CASE("commutator closure of the lcs terms at stage 3") {
  // sampled g in term q, h a generator: [g,h] lands in term q+1
  loctor_test::Rng rng(10);
  Stage s3 = Stage::finite(3);
  std::vector<TowerElement> gens{TowerElement::gen_x(s3),
                                 TowerElement::gen_y(s3),
                                 TowerElement::gen_t()};
  for (Int q = 1; q <= 6; ++q) {
    Int scale = q == 1 ? Int(1) : int_pow(2, static_cast<unsigned long>(
                                               (q - 1).convert_to<long>()));
    for (int i = 0; i < 120; ++i) {
      // element of the q-th term inside stage 3
      TowerElement g(TorsionCoset(Rat(rng.range(0, 8), 9)),
                     q == 1 ? Int(rng.range(-2, 2)) : Int(0),
                     Rat(scale * rng.range(-5, 5), 3),
                     Rat(scale * rng.range(-5, 5), 3));
      REQUIRE(series_member(g, SeriesIndex::lcs(q)));
      for (const auto& h : gens) {
        CHECK(series_member(commutator(g, h), SeriesIndex::lcs(q + 1)));
        CHECK(series_member(commutator(h, g), SeriesIndex::lcs(q + 1)));
      }
    }
  }
}

TEST_CASE("torsion subgroup is central") {
  loctor_test::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    TowerElement g = random_torsion(rng);
    TowerElement h = random_element(rng);
    CHECK(mul(g, h) == mul(h, g));
  }
}

TEST_CASE("projection to the third mixed quotient") {
  TowerElement g15(TorsionCoset(Rat(1, 15)), 0, 0, 0);
  auto q3 = project_P3(g15, 3);
  CHECK(q3.dp == TorsionCoset(Rat(2, 3)));
  CHECK(quotient_order(q3) == Int(3));
  CHECK(quotient_order(project_P3(g15, 5)) == Int(5));
  CHECK(quotient_order(project_P3(g15, 7)) == Int(1));
  CHECK(project_P3(TowerElement(TorsionCoset(Rat(1, 7)), 0, 0, 0), 3)
            .is_identity());

  Stage s3 = Stage::finite(3);
  auto qx = project_P3(TowerElement::gen_x(Stage::finite(1)), 3);
  CHECK(qx.a == 1);
  CHECK(qx.dp->is_zero());
  CHECK_FALSE(quotient_order(qx).has_value());
  CHECK_FALSE(quotient_order(project_P3(TowerElement::gen_t(), 2)).has_value());
  CHECK(quotient_order(project_P3(TowerElement::gen_z(s3), 3)) == Int(9));
}

TEST_CASE("projection is a homomorphism with the right kernel") {
  loctor_test::Rng rng(12);
  for (long long p : {2, 3, 5, 7}) {
    for (int i = 0; i < 800; ++i) {
      TowerElement g = rng.coin() ? random_element(rng) : random_torsion(rng);
      TowerElement h = rng.coin() ? random_element(rng) : random_torsion(rng);
      CHECK(project_P3(mul(g, h), p) == mul(project_P3(g, p), project_P3(h, p)));
      CHECK(project_P3(g, p).is_identity() ==
            series_member(g, SeriesIndex::mixed_term(3, p)));
    }
  }
}

TEST_CASE("nilpotent invisibility") {
  Stage s3 = Stage::finite(3);
  CHECK(nilpotent_invisible(TowerElement::gen_z(s3), 64));
  CHECK_FALSE(nilpotent_invisible(TowerElement::gen_x(s3), 2));
  CHECK(nilpotent_invisible(TowerElement::identity(), 64));
  CHECK_THROWS_AS(nilpotent_invisible(TowerElement::identity(), 1),
                  std::invalid_argument);
  // torsion elements: invisibility to depth q coincides with omega-term
  loctor_test::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    TowerElement g = random_torsion(rng);
    CHECK(nilpotent_invisible(g, 32) ==
          series_member(g, SeriesIndex::omega()));
  }
}

TEST_CASE("series length report") {
  auto r1 = lcs_length_report(Stage::finite(1));
  CHECK(r1.length_tag == "omega");
  CHECK_FALSE(r1.witness.has_value());

  auto r3 = lcs_length_report(Stage::finite(3));
  CHECK(r3.length_tag == "omega+1");
  REQUIRE(r3.witness.has_value());
  CHECK(*r3.witness == TowerElement::gen_z(Stage::finite(3)));
  CHECK(series_member(*r3.witness, SeriesIndex::omega()));
  CHECK_FALSE(r3.witness->is_identity());

  auto rc = lcs_length_report(Stage::colimit());
  CHECK(rc.length_tag == "omega+1");
  CHECK(*rc.witness == TowerElement(TorsionCoset(Rat(1, 3)), 0, 0, 0));
  CHECK(series_member(*rc.witness, SeriesIndex::omega()));
}

TEST_CASE("series index JSON round-trip") {
  for (const auto& idx :
       {SeriesIndex::lcs(4), SeriesIndex::omega(), SeriesIndex::omega_plus_1(),
        SeriesIndex::mixed_term(3, 5)}) {
    auto j = idx.to_json();
    auto back = SeriesIndex::from_json(j);
    CHECK(back.to_json().dump() == j.dump());
  }
}
