#include <doctest.h>

#include <cmath>
#include <random>

#include "aleidp/euler.hpp"
#include "aleidp/system.hpp"

using namespace aleidp;

namespace {

State scalar(double v) {
  State s(1);
  s[0] = v;
  return s;
}

}  // namespace

TEST_CASE("transport: constant advection speeds and swirl stagnation point") {
  auto constant = make_transport([](const Vec2&, double) { return Vec2(1.0, 0.0); });
  CHECK(constant.max_speed(Vec2(1, 0), scalar(3.0), scalar(-2.0)) == doctest::Approx(1.0));

  auto zero = make_transport([](const Vec2&, double) { return Vec2(0.0, 0.0); });
  CHECK(zero.max_speed(Vec2(1, 0), scalar(1.0), scalar(2.0)) == doctest::Approx(0.0));

  auto swirl = make_system("rotation");
  const Vec2 center(0.5, 0.5);
  CHECK(swirl.max_speed(Vec2(1, 0), scalar(1.0), scalar(1.0), center, center, 0.0) ==
        doctest::Approx(0.0).epsilon(1e-14));
  const FluxMat f = swirl.flux(scalar(1.0), center, 0.0);
  CHECK(f.row(0).norm() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("burgers: endpoint speeds and degenerate direction") {
  auto sys = make_burgers_2d();
  CHECK(sys.max_speed(Vec2(1, 0), scalar(1.0), scalar(0.0)) == doctest::Approx(1.0));
  CHECK(sys.max_speed(Vec2(1, 0), scalar(0.0), scalar(0.0)) == doctest::Approx(0.0));
  const Vec2 diag(1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
  CHECK(sys.max_speed(diag, scalar(5.0), scalar(-3.0)) == doctest::Approx(0.0).epsilon(1e-15));
  const FluxMat f = sys.flux(scalar(2.0), Vec2::Zero(), 0.0);
  CHECK(f(0, 0) == doctest::Approx(2.0));
  CHECK(f(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("kpp: closed-form speed envelope") {
  auto sys = make_kpp();
  CHECK(sys.max_speed(Vec2(0.6, 0.8), scalar(0.0), scalar(7.0)) == doctest::Approx(1.0));
  CHECK(sys.max_speed(Vec2(1, 0), scalar(0.0), scalar(0.0)) == doctest::Approx(1.0));
  CHECK(sys.max_speed(Vec2(0, 1), scalar(M_PI / 4), scalar(M_PI / 2)) ==
        doctest::Approx(1.0));
  // short interval away from critical points: endpoint max
  CHECK(sys.max_speed(Vec2(1, 0), scalar(1.0), scalar(1.2)) ==
        doctest::Approx(std::abs(std::cos(1.0))));
}

TEST_CASE("euler: conserved/primitive round trip, flux rows, admissibility") {
  auto sys = make_euler(1.4);
  const State U = euler_conserved({1.0, Vec2::Zero(), 1.0}, 1.4);
  CHECK(U[3] == doctest::Approx(2.5));

  const State V = euler_conserved({1.0, Vec2(1.0, 0.0), 1.0}, 1.4);
  const FluxMat f = sys.flux(V, Vec2::Zero(), 0.0);
  CHECK(f(0, 0) == doctest::Approx(1.0));
  CHECK(f(0, 1) == doctest::Approx(0.0));
  CHECK(f(1, 0) == doctest::Approx(2.0));
  CHECK(f(1, 1) == doctest::Approx(0.0));
  CHECK(f(3, 0) == doctest::Approx(4.0));  // (E + p) u with E = 3

  State bad(4);
  bad << 1.0, 10.0, 0.0, 1.0;
  CHECK(!sys.admissible(bad));
  CHECK_THROWS_AS(sys.flux(bad, Vec2::Zero(), 0.0), NumericError);

  const EulerPrimitive prim = euler_primitive(V, 1.4);
  CHECK(prim.rho == doctest::Approx(1.0));
  CHECK(prim.u[0] == doctest::Approx(1.0));
  CHECK(prim.p == doctest::Approx(1.0));
}

TEST_CASE("euler wave speeds: equal states, Sod data, mirror symmetry") {
  const double gamma = 1.4;
  const State left = euler_conserved({1.0, Vec2::Zero(), 1.0}, gamma);
  const State right = euler_conserved({0.125, Vec2::Zero(), 0.1}, gamma);

  const EulerFanBounds same = euler_wave_speeds(Vec2(1, 0), left, left, gamma);
  CHECK(same.lam_L == doctest::Approx(-std::sqrt(1.4)).epsilon(1e-12));
  CHECK(same.lam_R == doctest::Approx(std::sqrt(1.4)).epsilon(1e-12));

  const EulerFanBounds sod = euler_wave_speeds(Vec2(1, 0), left, right, gamma);
  CHECK(sod.p_star == doctest::Approx(0.30313).epsilon(2e-5));
  CHECK(sod.u_star == doctest::Approx(0.92745).epsilon(2e-5));
  CHECK(sod.lam_L == doctest::Approx(-std::sqrt(1.4)).epsilon(1e-10));
  CHECK(sod.lam_R == doctest::Approx(1.7522).epsilon(1e-4));

  const EulerFanBounds mirrored = euler_wave_speeds(Vec2(-1, 0), right, left, gamma);
  CHECK(mirrored.lam_L == doctest::Approx(-sod.lam_R).epsilon(1e-12));
  CHECK(mirrored.lam_R == doctest::Approx(-sod.lam_L).epsilon(1e-12));

  // vacuum-generating data falls back to the rarefaction tails
  const State away_l = euler_conserved({1.0, Vec2(-50.0, 0.0), 1.0}, gamma);
  const State away_r = euler_conserved({1.0, Vec2(50.0, 0.0), 1.0}, gamma);
  const EulerFanBounds vac = euler_wave_speeds(Vec2(1, 0), away_l, away_r, gamma);
  CHECK(vac.p_star == 0.0);
  CHECK(vac.lam_L == doctest::Approx(-50.0 - std::sqrt(1.4)));
  CHECK(vac.lam_R == doctest::Approx(50.0 + std::sqrt(1.4)));
}

TEST_CASE("shifted fastest speed") {
  CHECK(shifted_lambda_max(-1.0, 1.0, 0.0) == 1.0);
  CHECK(shifted_lambda_max(-1.0, 1.0, 1.0) == 2.0);
  CHECK(shifted_lambda_max(-1.18322, 1.7522, 0.5) == doctest::Approx(1.68322));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    CHECK(shifted_lambda_max(a, b, 0.0) == std::max(std::abs(a), std::abs(b)));
  }
}

TEST_CASE("max_speed reflection symmetry") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto burgers = make_burgers_2d();
  auto kpp = make_kpp();
  auto euler = make_euler(1.4);
  for (int trial = 0; trial < 100; ++trial) {
    const double angle = u(rng);
    const Vec2 n(std::cos(angle), std::sin(angle));
    const State a = scalar(u(rng)), b = scalar(u(rng));
    for (const auto* sys : {&burgers, &kpp}) {
      CHECK(sys->max_speed(n, a, b) ==
            doctest::Approx(sys->max_speed(-n, b, a)).epsilon(1e-13));
    }
    const State ea = euler_conserved({1.0 + 0.5 * u(rng) / 2.0, Vec2(u(rng), u(rng)),
                                      1.0 + 0.4 * std::abs(u(rng))},
                                     1.4);
    const State eb = euler_conserved({1.0 + 0.5 * std::abs(u(rng)) / 2.0,
                                      Vec2(u(rng), u(rng)), 1.0 + 0.3 * std::abs(u(rng))},
                                     1.4);
    CHECK(euler.max_speed(n, ea, eb) ==
          doctest::Approx(euler.max_speed(-n, eb, ea)).epsilon(1e-12));
  }
}

TEST_CASE("single-state consistency: directional spectral radius") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto transport = make_transport([](const Vec2&, double) { return Vec2(0.7, -0.4); });
  auto burgers = make_burgers_2d();
  auto kpp = make_kpp();
  auto euler = make_euler(1.4);
  for (int trial = 0; trial < 100; ++trial) {
    const double angle = u(rng);
    const Vec2 n(std::cos(angle), std::sin(angle));
    const double v = u(rng);
    CHECK(transport.max_speed(n, scalar(v), scalar(v)) ==
          doctest::Approx(std::abs(Vec2(0.7, -0.4).dot(n))).epsilon(1e-12));
    CHECK(burgers.max_speed(n, scalar(v), scalar(v)) ==
          doctest::Approx(std::abs(v * (n[0] + n[1]))).epsilon(1e-12));
    CHECK(kpp.max_speed(n, scalar(v), scalar(v)) ==
          doctest::Approx(std::abs(std::cos(v) * n[0] - std::sin(v) * n[1]))
              .epsilon(1e-12));
    const EulerPrimitive prim{0.5 + std::abs(u(rng)), Vec2(u(rng), u(rng)),
                              0.5 + std::abs(u(rng))};
    const State U = euler_conserved(prim, 1.4);
    CHECK(euler.max_speed(n, U, U) ==
          doctest::Approx(std::abs(prim.u.dot(n)) + prim.sound_speed(1.4))
              .epsilon(1e-12));
  }
}

TEST_CASE("entropy pairs: values and midpoint convexity") {
  auto transport = make_transport([](const Vec2&, double) { return Vec2(0.3, 0.8); });
  const auto& sq = entropy_pair(transport, "square");
  CHECK(sq.eta(scalar(2.0), Vec2::Zero(), 0.0) == doctest::Approx(2.0));
  CHECK((sq.flux(scalar(2.0), Vec2::Zero(), 0.0) - Vec2(0.6, 1.6)).norm() ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sq.eta(scalar(0.0), Vec2::Zero(), 0.0) == 0.0);
  CHECK(sq.flux(scalar(0.0), Vec2::Zero(), 0.0).norm() == 0.0);

  auto burgers = make_burgers_2d();
  const auto& bsq = entropy_pair(burgers, "square");
  CHECK(bsq.eta(scalar(1.0), Vec2::Zero(), 0.0) == doctest::Approx(0.5));
  CHECK((bsq.flux(scalar(1.0), Vec2::Zero(), 0.0) - Vec2(1.0 / 3, 1.0 / 3)).norm() ==
        doctest::Approx(0.0).epsilon(1e-14));

  CHECK_THROWS_AS(entropy_pair(burgers, "nope"), NumericError);

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    const double mid = bsq.eta(scalar(0.5 * (a + b)), Vec2::Zero(), 0.0);
    const double avg = 0.5 * (bsq.eta(scalar(a), Vec2::Zero(), 0.0) +
                              bsq.eta(scalar(b), Vec2::Zero(), 0.0));
    CHECK(mid <= avg + 1e-14);
  }
}
