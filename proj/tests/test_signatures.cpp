#include <catch2/catch_amalgamated.hpp>

#include <loctor/signature.hpp>

#include "support/hermitian_float.hpp"
#include "support/test_rng.hpp"

using namespace loctor;

namespace {
SeifertMatrix trefoil() { return SeifertMatrix::torus_2(3); }
}  // namespace

TEST_CASE("seifert matrix validation") {
  CHECK(SeifertMatrix::unknot().size() == 0);
  CHECK(trefoil().rows() == IntMatrix{{-1, 1}, {0, -1}});
  CHECK(SeifertMatrix::torus_2(7).size() == 6);
  CHECK(SeifertMatrix::torus_2(1).size() == 0);
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{0}}), std::invalid_argument);  // odd size
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{0, 2}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{0, 1}, {0, 0}, {0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SeifertMatrix::torus_2(4), std::invalid_argument);
}

TEST_CASE("cyclotomic field sanity") {
  CyclotomicField F6(6);
  CHECK(F6.degree() == 2);
  // zeta_6 satisfies x^2 - x + 1
  auto z = F6.root_power(1);
  auto z2 = F6.mul(z, z);
  CHECK(F6.sub(F6.add(z2, F6.from_rat(1)), z).is_zero());
  CHECK(F6.mul(z, F6.inverse(z)) == F6.from_rat(1));
  CHECK(F6.is_real(F6.add(z, F6.conj(z))));
  CHECK(F6.sign_real(F6.add(z, F6.conj(z))) == 1);  // 2cos(pi/3) = 1
  CHECK(F6.sign_real(F6.from_rat(Rat(-3, 7))) == -1);
  CHECK(F6.sign_real(F6.zero()) == 0);

  CyclotomicField F7(7);
  // 1 + 2cos(2pi*3/7) < 0 slightly: exercises refinement
  auto v = F7.add(F7.from_rat(1), F7.add(F7.root_power(3), F7.root_power(4)));
  CHECK(F7.sign_real(v) == -1);
}

TEST_CASE("signature at specific angles") {
  CHECK(signature_at(trefoil(), Angle(Rat(1, 2))) == -2);
  CHECK(signature_at(trefoil(), Angle(Rat(0))) == 0);
  CHECK(signature_at(trefoil(), Angle(Rat(1, 3))) == -2);
  // just inside/outside the first jump at 1/6
  CHECK(signature_at(trefoil(), Angle(Rat(1, 7))) == 0);
  CHECK(signature_at(trefoil(), Angle(Rat(1, 5))) == -2);
  // at the jump the matrix is singular; zero eigenvalue counts 0
  CHECK(signature_at(trefoil(), Angle(Rat(1, 6))) == -1);
  CHECK(signature_at(SeifertMatrix::unknot(), Angle(Rat(1, 3))) == 0);
  CHECK(signature_at(SeifertMatrix::torus_2(7), Angle(Rat(1, 2))) == -6);
}

TEST_CASE("alexander polynomials of torus knots") {
  // trefoil: t^2 - t + 1
  CHECK(alexander_polynomial(trefoil()) == RatPoly{1, -1, 1});
  // T(2,7): degree 6 cyclotomic of order 14
  CHECK(alexander_polynomial(SeifertMatrix::torus_2(7)) == cyclotomic(14));
  CHECK(alexander_polynomial(SeifertMatrix::unknot()) == RatPoly{1});
  // multiplicative across connected sums
  auto sum = connected_sum(trefoil(), SeifertMatrix::torus_2(5));
  CHECK(alexander_polynomial(sum) ==
        poly_mul(alexander_polynomial(trefoil()),
                 alexander_polynomial(SeifertMatrix::torus_2(5))));
}

TEST_CASE("step function of the trefoil") {
  StepFunction f = signature_function(trefoil());
  REQUIRE(f.breakpoints.size() == 2);
  CHECK(f.breakpoints[0] == Angle(Rat(1, 6)));
  CHECK(f.breakpoints[1] == Angle(Rat(5, 6)));
  CHECK(f.arc_values == std::vector<int>{0, -2});
  CHECK(f.point_values == std::vector<int>{-1, -1});
  CHECK(f.value_at(Angle(Rat(1, 2))) == -2);
  CHECK(f.value_at(Angle(Rat(1, 12))) == 0);
  CHECK(f.value_at(Angle(Rat(1, 6))) == -1);
  CHECK(f.integral() == Rat(-4, 3));
}

TEST_CASE("step function of T(2,7)") {
  StepFunction f = signature_function(SeifertMatrix::torus_2(7));
  std::vector<Angle> expect;
  for (long u : {1, 3, 5, 9, 11, 13}) expect.push_back(Angle(Rat(u, 14)));
  CHECK(f.breakpoints == expect);
  CHECK(f.arc_values == std::vector<int>{0, -2, -4, -6, -4, -2});
  CHECK(f.integral() == Rat(-24, 7));
}

TEST_CASE("step function of the unknot") {
  StepFunction f = signature_function(SeifertMatrix::unknot());
  CHECK(f.breakpoints.empty());
  CHECK(f.arc_values == std::vector<int>{0});
  CHECK(f.integral() == 0);
}

TEST_CASE("root sums") {
  CHECK(root_sum(trefoil(), 3) == -4);
  CHECK(root_sum(SeifertMatrix::unknot(), 3) == 0);
  CHECK(root_sum(SeifertMatrix::unknot(), 7) == 0);
  CHECK(root_sum(SeifertMatrix::torus_2(7), 3) == -8);
  CHECK(root_sum(mirror(SeifertMatrix::torus_2(7)), 3) == 8);
  CHECK_THROWS_AS(root_sum(trefoil(), 4), std::invalid_argument);
}

TEST_CASE("circle integrals") {
  CHECK(circle_integral(trefoil()) == Rat(-4, 3));
  CHECK(circle_integral(mirror(trefoil())) == Rat(4, 3));
  CHECK(circle_integral(SeifertMatrix::torus_2(7)) == Rat(-24, 7));
  CHECK(circle_integral(connected_sum(trefoil(), mirror(trefoil()))) == 0);
  CHECK(root_sum(connected_sum(trefoil(), mirror(trefoil())), 3) == 0);
}

TEST_CASE("connected sum and mirror plumbing") {
  auto s = connected_sum(SeifertMatrix::unknot(), trefoil());
  CHECK(s.rows() == trefoil().rows());
  CHECK(mirror(SeifertMatrix::unknot()).size() == 0);
  auto two = connected_sum(trefoil(), trefoil());
  CHECK(two.size() == 4);
  CHECK(root_sum(two, 3) == -8);
}

TEST_CASE("conjugation symmetry and bounds") {
  loctor_test::Rng rng(314);
  std::vector<SeifertMatrix> lib;
  for (long n : {3, 5, 7, 9}) lib.push_back(SeifertMatrix::torus_2(n));
  for (int i = 0; i < 60; ++i) {
    const auto& A = lib[static_cast<size_t>(rng.range(0, 3))];
    long d = rng.range(1, 36);
    long u = rng.range(0, d - 1);
    Angle w(Rat(u, d));
    Angle wc(Rat(d - u, d));
    int sig = signature_at(A, w);
    CHECK(sig == signature_at(A, wc));
    CHECK(std::abs(sig) <= static_cast<int>(A.size()));
  }
}

TEST_CASE("additivity under connected sum, negation under mirror") {
  loctor_test::Rng rng(2718);
  std::vector<SeifertMatrix> lib;
  for (long n : {3, 5, 7}) {
    lib.push_back(SeifertMatrix::torus_2(n));
    lib.push_back(mirror(SeifertMatrix::torus_2(n)));
  }
  for (int i = 0; i < 40; ++i) {
    const auto& A = lib[static_cast<size_t>(rng.range(0, 5))];
    const auto& B = lib[static_cast<size_t>(rng.range(0, 5))];
    auto S = connected_sum(A, B);
    long d = rng.range(1, 24);
    Angle w(Rat(rng.range(0, d - 1), d));
    CHECK(signature_at(S, w) == signature_at(A, w) + signature_at(B, w));
    CHECK(root_sum(S, 3) == root_sum(A, 3) + root_sum(B, 3));
    CHECK(circle_integral(S) == circle_integral(A) + circle_integral(B));
    CHECK(signature_at(mirror(A), w) == -signature_at(A, w));
  }
}

TEST_CASE("exact arc values agree with the floating-point eigenvalue oracle") {
  loctor_test::Rng rng(777);
  for (long n : {3, 5, 7, 9}) {
    auto A = SeifertMatrix::torus_2(n);
    StepFunction f = signature_function(A);
    for (int i = 0; i < 500; ++i) {
      double w = rng.unit_double();
      bool near_break = false;
      for (const auto& b : f.breakpoints)
        if (std::abs(static_cast<double>(b.turns) - w) < 1e-6) near_break = true;
      if (near_break || w < 1e-6 || w > 1 - 1e-6) continue;
      CHECK(f.value_near(w) == loctor_test::float_signature(A, w));
    }
  }
}

TEST_CASE("matrices with non-rational unit roots are rejected") {
  // A - A^T correct, Alexander roots real and reciprocal, off the unit
  // circle: accepted, constant signature
  SeifertMatrix ok({{1, 1}, {0, -1}});
  CHECK(alexander_polynomial(ok) == RatPoly{-1, 3, -1});
  auto f = signature_function(ok);
  CHECK(f.breakpoints.empty());
  CHECK(f.arc_values == std::vector<int>{0});

  // Alexander polynomial 2t^2 - 3t + 2: unit-circle roots at irrational
  // angles (cos = 3/4), must be rejected with the offending factor
  SeifertMatrix bad({{2, 1}, {0, 1}});
  REQUIRE(alexander_polynomial(bad) == RatPoly{2, -3, 2});
  CHECK_THROWS_AS(signature_function(bad), irrational_root_error);
  CHECK_THROWS_AS(circle_integral(bad), irrational_root_error);
  try {
    signature_function(bad);
  } catch (const irrational_root_error& e) {
    CHECK(std::string(e.factor()).find("t") != std::string::npos);
  }
  // pointwise signatures at rational angles still work
  CHECK(signature_at(bad, Angle(Rat(1, 2))) == 2);
}
