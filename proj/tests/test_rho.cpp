#include <catch2/catch_amalgamated.hpp>

#include <loctor/rho.hpp>
#include <loctor/star_search.hpp>

#include "support/test_rng.hpp"

using namespace loctor;

namespace {
SeifertMatrix star_knot() {
  // 18 trefoils and 7 mirrored T(2,7)s
  return assemble_combination({Int(18), Int(-7)},
                              {SeifertMatrix::torus_2(3),
                               SeifertMatrix::torus_2(7)});
}
}  // namespace

TEST_CASE("delta rho values") {
  CHECK(delta_rho(SeifertMatrix::torus_2(3), 3) == Rat(-4, 3));
  CHECK(delta_rho(SeifertMatrix::unknot(), 3) == 0);
  CHECK(delta_rho(star_knot(), 3) == Rat(-16, 3));
  CHECK_THROWS_AS(delta_rho(SeifertMatrix::unknot(), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(delta_rho(SeifertMatrix::unknot(), 9),
                  std::invalid_argument);
}

TEST_CASE("delta rho is additive and mirror-negated") {
  loctor_test::Rng rng(555);
  std::vector<SeifertMatrix> lib;
  for (long n : {3, 5, 7}) lib.push_back(SeifertMatrix::torus_2(n));
  for (int i = 0; i < 30; ++i) {
    const auto& A = lib[static_cast<size_t>(rng.range(0, 2))];
    const auto& B = lib[static_cast<size_t>(rng.range(0, 2))];
    for (long p : {3, 5}) {
      CHECK(delta_rho(connected_sum(A, B), p) ==
            delta_rho(A, p) + delta_rho(B, p));
      CHECK(delta_rho(mirror(A), p) == -delta_rho(A, p));
    }
  }
}

TEST_CASE("family tables") {
  auto t = family_table(star_knot(), 3, 3);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].value == 0);
  CHECK(t.rows[1].value == Rat(-16, 3));
  CHECK(t.rows[2].value == Rat(-32, 3));
  CHECK(t.rows[3].value == Rat(-16));
  CHECK(t.pairwise_distinct);

  auto tu = family_table(SeifertMatrix::unknot(), 3, 5);
  for (const auto& r : tu.rows) CHECK(r.value == 0);
  CHECK_FALSE(tu.pairwise_distinct);

  auto tt = family_table(SeifertMatrix::torus_2(3), 3, 2);
  CHECK(tt.rows[1].value == Rat(-4, 3));
  CHECK(tt.rows[2].value == Rat(-8, 3));
  CHECK(tt.pairwise_distinct);

  // linearity cross-checked against direct computation on assembled sums
  for (int i = 1; i <= 3; ++i) {
    auto direct = assemble_combination({Int(i)}, {SeifertMatrix::torus_2(5)});
    CHECK(delta_rho(direct, 3) ==
          family_table(SeifertMatrix::torus_2(5), 3, 3).rows[static_cast<size_t>(i)].value);
  }
}

TEST_CASE("obstruction reports") {
  auto r = obstruction_report(star_knot(), SeifertMatrix::unknot(), 3);
  CHECK(r.verdict == "obstructed");
  CHECK(r.value_i == Rat(-16, 3));
  CHECK(r.value_j == 0);

  auto same = obstruction_report(SeifertMatrix::torus_2(3),
                                 SeifertMatrix::torus_2(3), 3);
  CHECK(same.verdict == "inconclusive");

  auto cancel = obstruction_report(
      connected_sum(SeifertMatrix::torus_2(3), mirror(SeifertMatrix::torus_2(3))),
      SeifertMatrix::unknot(), 3);
  CHECK(cancel.verdict == "inconclusive");
  CHECK(cancel.value_i == 0);
  CHECK(cancel.value_j == 0);

  // symmetric in its arguments
  auto ab = obstruction_report(star_knot(), SeifertMatrix::torus_2(3), 3);
  auto ba = obstruction_report(SeifertMatrix::torus_2(3), star_knot(), 3);
  CHECK(ab.verdict == ba.verdict);
  CHECK(ab.value_i == ba.value_j);
}

TEST_CASE("star condition reports") {
  auto ks = star_certificate(star_knot(), 3);
  CHECK(ks.sum_nonzero);
  CHECK(ks.integral_zero);
  CHECK(ks.star);
  CHECK(ks.sum == -16);

  auto tr = star_certificate(SeifertMatrix::torus_2(3), 3);
  CHECK(tr.sum_nonzero);
  CHECK_FALSE(tr.integral_zero);
  CHECK_FALSE(tr.star);
  CHECK(tr.integral == Rat(-4, 3));

  auto un = star_certificate(SeifertMatrix::unknot(), 3);
  CHECK_FALSE(un.sum_nonzero);
  CHECK(un.integral_zero);
  CHECK_FALSE(un.star);
}

TEST_CASE("star search finds a certificate for {T(2,3), T(2,7)} at p = 3") {
  std::vector<SeifertMatrix> basis{SeifertMatrix::torus_2(3),
                                   SeifertMatrix::torus_2(7)};
  auto cert = search_star(3, basis);
  REQUIRE(cert.has_value());
  CHECK(verify_star_certificate(*cert, basis, 3));
  // minimal in (max-norm, lex) order: kernel is generated by (18, -7)
  CHECK(cert->coefficients == std::vector<Int>{-18, 7});
  CHECK(cert->sum_value == 16);

  // the known certificate passes independent verification
  StarCertificate known{{Int(18), Int(-7)}, Int(-16)};
  CHECK(verify_star_certificate(known, basis, 3));
  // and its halves recompute exactly on the assembled matrix
  auto K = assemble_combination(known.coefficients, basis);
  CHECK(K.size() == 78);
  CHECK(circle_integral(K) == 0);
  CHECK(root_sum(K, 3) == -16);
}

TEST_CASE("star search rejects hopeless bases") {
  CHECK_FALSE(search_star(3, {SeifertMatrix::torus_2(3)}, 32).has_value());
  CHECK_FALSE(search_star(3, {SeifertMatrix::unknot()}, 8).has_value());
  // a wrong certificate fails verification
  StarCertificate bogus{{Int(1), Int(0)},
                        root_sum(SeifertMatrix::torus_2(3), 3)};
  CHECK_FALSE(verify_star_certificate(
      bogus, {SeifertMatrix::torus_2(3), SeifertMatrix::torus_2(7)}, 3));
  StarCertificate zero{{Int(0), Int(0)}, Int(0)};
  CHECK_FALSE(verify_star_certificate(
      zero, {SeifertMatrix::torus_2(3), SeifertMatrix::torus_2(7)}, 3));
}
