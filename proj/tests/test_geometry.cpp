#include <cmath>
#include <numbers>

#include "doctest.h"

#include "bsglab/error.hpp"
#include "bsglab/geometry.hpp"

using namespace bsglab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ball volumes") {
  CHECK(BallVolume(1) == doctest::Approx(2.0));
  CHECK(BallVolume(2) == doctest::Approx(kPi));
  CHECK(BallVolume(3) == doctest::Approx(4 * kPi / 3));
  for (int d = 3; d <= 40; ++d)
    CHECK(BallVolume(d) == doctest::Approx(2 * kPi / d * BallVolume(d - 2)).epsilon(1e-12));
  for (int d : {1, 2, 10, 64}) CHECK(CrudeBallBoundsHold(d));
}

TEST_CASE("annulus volumes") {
  CHECK(AnnulusVolume(3, 1.0) == doctest::Approx(BallVolume(3)));
  CHECK(AnnulusVolume(3, 0.125) == doctest::Approx(4 * kPi / 3 * 169.0 / 512).epsilon(1e-12));
  // For small eta the shell volume is d eta V_d to first order.
  for (int d : {2, 5, 9})
    CHECK(AnnulusVolume(d, 1e-6) / (d * 1e-6 * BallVolume(d)) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("cap volumes") {
  for (int d : {2, 3, 6}) CHECK(CapVolume(d, 1.0) == doctest::Approx(BallVolume(d) / 2).epsilon(1e-10));
  CHECK(CapVolume(3, 0.5) == doctest::Approx(kPi * 0.25 * 2.5 / 3).epsilon(1e-10));
  CHECK_THROWS_AS(CapVolume(3, 1.5), PreconditionError);
}

TEST_CASE("trimmed annulus volume") {
  CHECK(TrimmedAnnulusVolume(3, 0.125, 1.0) == doctest::Approx(AnnulusVolume(3, 0.125)));
  double trimmed = TrimmedAnnulusVolume(2, 0.25, 0.95);
  CHECK(trimmed < AnnulusVolume(2, 0.25));
  // Four caps of height 0.05 of the unit disc; the inner circle is not cut.
  CHECK(AnnulusVolume(2, 0.25) - trimmed == doctest::Approx(4 * CapVolume(2, 0.05)).epsilon(1e-8));
}

TEST_CASE("T volume estimator") {
  const double oracle = OracleVolumeT2(0.25);
  VolumeEstimate small = McVolumeT(2, 0.25, 10'000, 5);
  VolumeEstimate big = McVolumeT(2, 0.25, 40'000, 5);
  CHECK(std::abs(big.value - oracle) < 4 * big.std_error);
  CHECK(big.std_error / small.std_error == doctest::Approx(0.5).epsilon(0.15));
  VolumeEstimate again = McVolumeT(2, 0.25, 10'000, 5);
  CHECK(again.value == small.value);
  CHECK(again.std_error == small.std_error);
  CHECK(McVolumeT(2, 0.25, 10'000, 6).value != small.value);
}

TEST_CASE("R_y volume estimator") {
  for (double t : {0.1, 0.4}) {
    VolumeEstimate e = McVolumeRy(2, 0.25, t, 100'000, 9);
    CHECK(std::abs(e.value - OracleVolumeRy2(0.25, t)) < 4 * e.std_error);
  }
  // The intersection grows as y moves toward the origin.
  CHECK(OracleVolumeRy2(0.25, 0.2) > OracleVolumeRy2(0.25, 0.1));
  // At t = 2 the point y is the origin and R_y = S.
  CHECK(OracleVolumeRy2(0.25, 2.0) == doctest::Approx(AnnulusVolume(2, 0.25)).epsilon(1e-3));
  CHECK(OracleVolumeT2(0.25) > OracleVolumeT2(0.125));
}

TEST_CASE("intersection check finds no violations") {
  IntersectionCheck c = CheckIntersectionLemma(3, 0.125, 5'000, 45);
  CHECK(c.trials == 5'000);
  CHECK(c.witnesses > 0);
  CHECK(c.violations == 0);
  IntersectionCheck again = CheckIntersectionLemma(3, 0.125, 5'000, 45);
  CHECK(again.witnesses == c.witnesses);
}

TEST_CASE("carve parsing") {
  Carve none = Carve::Parse("none");
  CHECK(none.kind == Carve::Kind::kNone);
  Carve cap = Carve::Parse("cap:0.02");
  CHECK(cap.kind == Carve::Kind::kCap);
  CHECK(cap.size == doctest::Approx(0.02));
  CHECK(Carve::Parse(cap.Describe()).size == cap.size);
  CHECK(Carve::Parse("radial:0.5").kind == Carve::Kind::kRadial);
  CHECK(Carve::Parse("slab:0.1").kind == Carve::Kind::kSlab);
  CHECK_THROWS_AS(Carve::Parse("wedge:0.1"), PreconditionError);
  CHECK_THROWS_AS(Carve::Parse("cap:-1"), PreconditionError);
  CHECK(CarvedMass(2, 0.25, none) == 0);
  CHECK(CarvedMass(2, 0.25, Carve::Parse("radial:0.5")) ==
        doctest::Approx(kPi * (1 - 0.875 * 0.875)).epsilon(1e-12));
}

TEST_CASE("carved deficit estimator") {
  Carve cap = Carve::Parse("cap:0.02");
  CarvedDeficitReport r = McCarvedDeficit(2, 0.25, cap, 100'000, 3, 0.1);
  CHECK(r.carved_fraction <= r.mass_budget);
  CHECK(std::abs(r.deficit.value - OracleDeficit2(0.25, cap)) < 4 * r.deficit.std_error + 1e-3);
  CHECK(McCarvedDeficit(2, 0.25, Carve::Parse("none"), 20'000, 3, 0.1).deficit.value == 0);
  CHECK_THROWS_AS(McCarvedDeficit(2, 0.25, Carve::Parse("radial:0.9"), 1'000, 3,
                                DefaultCarveBudget(2, 0.25)),
                  PreconditionError);
  CHECK(DefaultCarveBudget(2, 0.25) == doctest::Approx(std::pow(25.0, -2) / 64));
}
