#include <catch2/catch_amalgamated.hpp>

#include <loctor/numeric.hpp>
#include <loctor/subring.hpp>
#include <loctor/torsion.hpp>

#include "support/test_rng.hpp"

using namespace loctor;

TEST_CASE("ring membership by inverted primes") {
  auto Z = SubringSpec::integers();
  auto Z2 = SubringSpec::localized_at(2);
  auto Z13 = SubringSpec::inverting(3);

  CHECK(ring_contains(Rat(3, 5), Z2));
  CHECK_FALSE(ring_contains(Rat(1, 2), Z2));
  CHECK(ring_contains(Rat(1, 9), Z13));
  CHECK_FALSE(ring_contains(Rat(1, 6), Z13));
  CHECK(ring_contains(Rat(7), Z));
  CHECK_FALSE(ring_contains(Rat(7, 2), Z));
}

TEST_CASE("units of a subring") {
  auto Z = SubringSpec::integers();
  auto Z2 = SubringSpec::localized_at(2);

  CHECK(is_unit(Rat(3), Z2));
  CHECK_FALSE(is_unit(Rat(3), Z));
  CHECK(is_unit(Rat(-3, 5), Z2));
  CHECK_FALSE(is_unit(Rat(2), Z2));
  CHECK(is_unit(Rat(-1), Z));
  CHECK_THROWS_AS(is_unit(Rat(0), Z), std::domain_error);
}

TEST_CASE("unit products stay units") {
  loctor_test::Rng rng(101);
  auto Z2 = SubringSpec::localized_at(2);
  std::vector<Rat> units;
  for (int i = 0; i < 200; ++i) {
    Int n = 2 * rng.range(-40, 40) + 1;
    Int d = 2 * rng.range(0, 40) + 1;
    units.emplace_back(n, d);
  }
  for (size_t i = 0; i + 1 < units.size(); i += 2) {
    REQUIRE(is_unit(units[i], Z2));
    REQUIRE(is_unit(units[i + 1], Z2));
    CHECK(is_unit(units[i] * units[i + 1], Z2));
  }
}

TEST_CASE("membership is monotone under adding inverted primes") {
  auto Z = SubringSpec::integers();
  auto Z13 = SubringSpec::inverting(3);
  auto Z1315 = SubringSpec::make(false, {Int(3), Int(5)});
  auto Z3 = SubringSpec::localized_at(3);

  loctor_test::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Rat q(rng.range(-50, 50), rng.range(1, 60));
    if (ring_contains(q, Z)) {
      CHECK(ring_contains(q, Z13));
      CHECK(ring_contains(q, Z3));
    }
    if (ring_contains(q, Z13)) CHECK(ring_contains(q, Z1315));
  }
}

TEST_CASE("subring JSON round-trip") {
  auto specs = {SubringSpec::integers(), SubringSpec::localized_at(2),
                SubringSpec::inverting(7),
                SubringSpec::make(true, {Int(3), Int(5)})};
  for (const auto& R : specs) {
    auto j = R.to_json();
    CHECK(SubringSpec::from_json(j) == R);
    CHECK(SubringSpec::from_json(j).to_json().dump() == j.dump());
  }
}

TEST_CASE("torsion coset arithmetic") {
  TorsionCoset third(Rat(1, 3));
  CHECK((third + third).representative() == Rat(2, 3));
  CHECK((TorsionCoset(Rat(2, 3)) + third).is_zero());
  CHECK((-TorsionCoset(Rat(1, 9))).representative() == Rat(8, 9));
  CHECK(TorsionCoset(Rat(7, 3)).representative() == Rat(1, 3));
  CHECK(TorsionCoset(Rat(-1, 3)).representative() == Rat(2, 3));
  CHECK_THROWS_AS(TorsionCoset(Rat(1, 2)), std::invalid_argument);
  CHECK(TorsionCoset().order() == 1);
  CHECK(TorsionCoset(Rat(1, 15)).order() == 15);
}

// Brute search: the unique coset a/3^k with x - a/3^k of order coprime to 3.
static TorsionCoset p_part_by_search(const TorsionCoset& x, long long p) {
  Int m = x.order();
  Int pk = 1;
  while (m % p == 0) {
    m /= p;
    pk *= p;
  }
  for (Int u = 0; u < pk; ++u) {
    TorsionCoset cand(Rat(u, pk));
    if ((x - cand).order() % p != 0) return cand;
  }
  throw std::logic_error("p_part_by_search: no candidate found");
}

TEST_CASE("p-primary part matches CRT search oracle") {
  CHECK(TorsionCoset(Rat(1, 15)).p_primary_part(3) ==
        TorsionCoset(Rat(2, 3)));
  CHECK(TorsionCoset(Rat(1, 7)).p_primary_part(3).is_zero());
  CHECK(TorsionCoset(Rat(1, 9)).p_primary_part(3) == TorsionCoset(Rat(1, 9)));

  loctor_test::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    Int d = 2 * rng.range(0, 200) + 1;
    TorsionCoset x(Rat(rng.range(0, 400), d));
    for (long long p : {3, 5, 7}) {
      TorsionCoset part = x.p_primary_part(p);
      CHECK(part == p_part_by_search(x, p));
      // order of the part is the exact p-power dividing order(x)
      Int m = x.order(), pk = 1;
      while (m % p == 0) {
        m /= p;
        pk *= p;
      }
      CHECK(part.order() == pk);
    }
  }
  CHECK_THROWS_AS(TorsionCoset(Rat(1, 3)).p_primary_part(2),
                  std::domain_error);
  CHECK_THROWS_AS(TorsionCoset(Rat(1, 3)).p_primary_part(9),
                  std::domain_error);
}

TEST_CASE("p-primary part is additive") {
  // exhaustive over small odd denominators
  for (long long m = 1; m <= 45; m += 2) {
    for (long long u = 0; u < m; ++u) {
      for (long long v = 0; v < m; ++v) {
        TorsionCoset x(Rat(u, m)), y(Rat(v, m));
        CHECK((x + y).p_primary_part(3) ==
              x.p_primary_part(3) + y.p_primary_part(3));
      }
    }
  }
}

TEST_CASE("rational formatting") {
  CHECK(format_rat(Rat(-16, 3)) == "-16/3");
  CHECK(format_rat(Rat(0)) == "0/1");
  CHECK(format_rat_short(Rat(4)) == "4");
  CHECK(format_decimal(Rat(-4, 3), 6) == "-1.333333");
  CHECK(format_decimal(Rat(1, 2), 3) == "0.500");
  CHECK(parse_rat("-16/3") == Rat(-16, 3));
  CHECK(parse_rat("7") == Rat(7));
  CHECK_THROWS_AS(parse_rat("x/y"), std::invalid_argument);
}
