#include <doctest.h>

#include <cmath>
#include <random>

#include "ngopt/direction.hpp"
#include "ngopt/errors.hpp"

using ngopt::direction_multi;
using ngopt::direction_single;
using ngopt::DirectionBranch;
using ngopt::DirectionParams;
using ngopt::msdm_direction;
using ngopt::Problem;
using ngopt::ValueGrad;
using ngopt::VectorXd;
using ngopt::zeta_from_c;

namespace {

VectorXd vec2(double a, double b) {
  VectorXd v(2);
  v << a, b;
  return v;
}

VectorXd random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal;
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  return v / v.norm();
}

}  // namespace

TEST_CASE("single-constraint blend of normalized gradients") {
  const auto dir =
      direction_single(vec2(3, 4), vec2(0, -1), DirectionParams{0.5});
  CHECK(dir.branch == DirectionBranch::SingleConstraint);
  CHECK(dir.s(0) == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(dir.s(1) == doctest::Approx(-0.3).epsilon(1e-15));
  CHECK(dir.s_unit.norm() == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(dir.cos_theta.has_value());
  CHECK(*dir.cos_theta == doctest::Approx(-0.8).epsilon(1e-15));
}

TEST_CASE("blend is a descent direction: <s, grad_f> = -|grad_f|(1 + zeta cos)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const VectorXd grad_f = 3.0 * random_unit(rng, n);
    const VectorXd grad_g = 0.25 * random_unit(rng, n);
    const double zeta = 0.999 * static_cast<double>(rng() % 1000) / 1000.0;
    const auto dir = direction_single(grad_f, grad_g, DirectionParams{zeta});
    REQUIRE(dir.cos_theta.has_value());
    const double cos_theta = *dir.cos_theta;
    CHECK(dir.s.dot(grad_f) ==
          doctest::Approx(-grad_f.norm() * (1.0 + zeta * cos_theta))
              .epsilon(1e-12));
    // Blend length follows the same angle: |s|^2 = 1 + 2 zeta cos + zeta^2.
    CHECK(dir.s.squaredNorm() ==
          doctest::Approx(1.0 + 2.0 * zeta * cos_theta + zeta * zeta)
              .epsilon(1e-12));
    CHECK(dir.s.dot(grad_f) < 0.0); // 1 + zeta cos >= 1 - zeta > 0
  }
}

TEST_CASE("zero gradients raise the critical-point signals") {
  CHECK_THROWS_AS(direction_single(VectorXd::Zero(2), vec2(1, 0),
                                   DirectionParams{0.5}),
                  ngopt::CriticalPointSignal);
  CHECK_THROWS_AS(direction_single(vec2(1, 0), VectorXd::Zero(2),
                                   DirectionParams{0.5}),
                  ngopt::ConstraintCriticalSignal);
}

TEST_CASE("direction parameters are validated") {
  CHECK_THROWS_AS(direction_single(vec2(1, 0), vec2(0, 1),
                                   DirectionParams{1.0}),
                  ngopt::InputError);
  CHECK_THROWS_AS(direction_single(vec2(1, 0), vec2(0, 1),
                                   DirectionParams{-0.1}),
                  ngopt::InputError);
  CHECK_THROWS_AS(direction_single(vec2(1, 0), vec2(0, 1),
                                   DirectionParams{0.5, 0.0}),
                  ngopt::InputError);
}

namespace {

// Half squared norm above the line x_2 = 10, one constraint.
Problem quadratic_over_halfplane() {
  Problem p;
  p.n_dims = 2;
  p.objective = [](const VectorXd& x) {
    return ValueGrad{0.5 * x.squaredNorm(), x};
  };
  p.constraints = {[](const VectorXd& x) {
    return ValueGrad{-x(1) + 10.0, vec2(0.0, -1.0)};
  }};
  return p;
}

// Slab |x_1| <= 10: the two barrier gradients cancel on the x_1 = 0 axis.
Problem quadratic_in_slab() {
  Problem p;
  p.n_dims = 2;
  p.objective = [](const VectorXd& x) {
    return ValueGrad{0.5 * x.squaredNorm(), x};
  };
  p.constraints = {
      [](const VectorXd& x) { return ValueGrad{x(0) - 10.0, vec2(1, 0)}; },
      [](const VectorXd& x) { return ValueGrad{-x(0) - 10.0, vec2(-1, 0)}; },
  };
  return p;
}

}  // namespace

TEST_CASE("barrier blend cancels most of the push at high zeta") {
  const Problem p = quadratic_over_halfplane();
  const auto ev = ngopt::evaluate(p, vec2(0, 20));
  const auto dir = direction_multi(ev, ngopt::barrier(ev),
                                   DirectionParams{0.98});
  CHECK(dir.branch == DirectionBranch::BarrierBranch);
  CHECK(dir.s(0) == 0.0);
  CHECK(dir.s(1) == doctest::Approx(-0.02).epsilon(1e-12));
  CHECK(dir.s_unit(1) == doctest::Approx(-1.0).epsilon(1e-15));
  REQUIRE(dir.cos_theta.has_value());
  CHECK(*dir.cos_theta == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("vanishing barrier gradient falls back to raw steepest descent") {
  const Problem p = quadratic_in_slab();
  const auto ev = ngopt::evaluate(p, vec2(0, 3));
  const auto dir = direction_multi(ev, ngopt::barrier(ev),
                                   DirectionParams{0.9});
  CHECK(dir.branch == DirectionBranch::SafeguardBranch);
  CHECK(dir.s(0) == 0.0);
  CHECK(dir.s(1) == -3.0); // un-normalized on this branch
  CHECK(dir.s_unit(1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_FALSE(dir.cos_theta.has_value());
}

TEST_CASE("barrier blend requires a defined barrier") {
  const Problem p = quadratic_over_halfplane();
  const auto ev = ngopt::evaluate(p, vec2(0, 9)); // outside
  CHECK_THROWS_AS(direction_multi(ev, ngopt::barrier(ev),
                                  DirectionParams{0.5}),
                  ngopt::InputError);
}

TEST_CASE("two-direction decomposition, orthogonal gradients") {
  const auto d = msdm_direction(vec2(1, 0), vec2(0, 1), 3.0);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(d.v1(0) == doctest::Approx(-r).epsilon(1e-15));
  CHECK(d.v1(1) == doctest::Approx(r).epsilon(1e-15));
  CHECK(d.v2(0) == doctest::Approx(-r).epsilon(1e-15));
  CHECK(d.v2(1) == doctest::Approx(-r).epsilon(1e-15));
  CHECK(d.sigma1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.sigma2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.cos_alpha1 == doctest::Approx(r).epsilon(1e-15));
  CHECK(d.cos_alpha2 == doctest::Approx(r).epsilon(1e-15));
  CHECK(d.s_c(0) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(d.s_c(1) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("combination weight c = 1 reproduces pure normalized descent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const VectorXd grad_f = 2.0 * random_unit(rng, n);
    const VectorXd grad_g = random_unit(rng, n);
    const auto d = msdm_direction(grad_f, grad_g, 1.0);
    const VectorXd minus_f_hat = -grad_f / grad_f.norm();
    CHECK((d.s_c - minus_f_hat).norm() < 1e-12);
  }
}

TEST_CASE("decomposition equals the blend scaled by (c + 1)/2") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const VectorXd grad_f = 5.0 * random_unit(rng, n);
    const VectorXd grad_g = 0.5 * random_unit(rng, n);
    const double c = 1.0 + 99.0 * static_cast<double>(rng() % 1000) / 999.0;
    const auto d = msdm_direction(grad_f, grad_g, c);
    const auto blend =
        direction_single(grad_f, grad_g, DirectionParams{zeta_from_c(c)});
    const VectorXd expected = 0.5 * (c + 1.0) * blend.s;
    CHECK((d.s_c - expected).norm() < 1e-10 * expected.norm());
  }
}

TEST_CASE("parallel gradients have no two-direction decomposition") {
  CHECK_THROWS_AS(msdm_direction(vec2(2, 0), vec2(3, 0), 2.0),
                  ngopt::DegenerateGeometry);
  CHECK_THROWS_AS(msdm_direction(vec2(2, 0), vec2(-3, 0), 2.0),
                  ngopt::DegenerateGeometry);
  CHECK_THROWS_AS(msdm_direction(vec2(1, 1), vec2(0, 1), 0.5),
                  ngopt::InputError); // c < 1
}

TEST_CASE("weight map c -> zeta") {
  CHECK(zeta_from_c(1.0) == 0.0);
  CHECK(zeta_from_c(3.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(zeta_from_c(199.0) == doctest::Approx(0.99).epsilon(1e-15));
}
