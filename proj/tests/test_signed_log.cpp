#include <doctest.h>

#include <cmath>
#include <vector>

#include "jacspec/signed_log.hpp"

using namespace jacspec;

TEST_CASE("signed-log value round trip") {
  for (double x : {1.0, -3.5, 0.25}) {
    const auto v = SignedLogValue::from_double(x);
    CHECK(v.to_double() == doctest::Approx(x).epsilon(1e-15));
  }
  // at |log| ~ 460 the single-double log quantizes at ~5e-14 relative
  for (double x : {1e-200, -1e200}) {
    const auto v = SignedLogValue::from_double(x);
    CHECK(v.to_double() == doctest::Approx(x).epsilon(1e-12));
  }
  const auto z = SignedLogValue::from_double(0.0);
  CHECK(z.sign == 0);
  CHECK(std::isinf(z.logmag));
  CHECK(z.to_double() == 0.0);
}

TEST_CASE("log gaps keep mantissa precision under huge shared frames") {
  const auto a = SignedLogValue::from_scaled(0.5, 9000.0);
  const auto b = SignedLogValue::from_scaled(1.0, 9000.0);
  CHECK(log_gap(a, b) == doctest::Approx(std::log(0.5)).epsilon(1e-14));

  double s, e;
  two_sum(1e16, 1.0, s, e);
  CHECK(s + e == doctest::Approx(1e16 + 1.0));
  CHECK(e != 0.0);  // the unit is below ulp(1e16) and lands in the residue
}

TEST_CASE("scaled construction folds the frame into the log") {
  const auto v = SignedLogValue::from_scaled(-0.5, 1000.0);
  CHECK(v.sign == -1);
  CHECK(v.logmag == doctest::Approx(1000.0 + std::log(0.5)).epsilon(1e-15));
}

TEST_CASE("sequence invariants") {
  std::vector<SignedLogValue> two = {SignedLogValue::from_double(1.0),
                                     SignedLogValue::from_double(2.0)};
  CHECK_NOTHROW(SignedLogSeq(1, two));
  CHECK_THROWS_AS(SignedLogSeq(0, two), validation_error);
  CHECK_THROWS_AS(SignedLogSeq(1, {two[0]}), validation_error);
  // sign 0 must pair with the -inf sentinel
  std::vector<SignedLogValue> bad = {SignedLogValue{0, 3.0},
                                     SignedLogValue::from_double(1.0)};
  CHECK_THROWS_AS(SignedLogSeq(1, bad), validation_error);
}

TEST_CASE("indexing and ratios") {
  const double vals[] = {2.0, -4.0, 0.0, 8.0};
  const auto seq = SignedLogSeq::from_doubles(3, vals);
  CHECK(seq.first_index() == 3);
  CHECK(seq.last_index() == 6);
  CHECK(seq.value(4) == doctest::Approx(-4.0));
  CHECK(seq.ratio(3) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(seq.ratio(4) == 0.0);                       // into a zero entry
  CHECK_THROWS_AS(seq.ratio(5), numeric_error);     // out of a zero entry
  CHECK_THROWS_AS(seq.at(7), validation_error);
}

TEST_CASE("l2 norm and normalization") {
  const double vals[] = {3.0, 4.0};
  auto seq = SignedLogSeq::from_doubles(1, vals);
  CHECK(seq.log_l2_norm() == doctest::Approx(std::log(5.0)).epsilon(1e-14));
  seq.normalize_l2();
  CHECK(seq.log_l2_norm() == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(seq.value(1) == doctest::Approx(0.6).epsilon(1e-13));

  // norm is stable for magnitudes far outside the double range
  std::vector<SignedLogValue> huge = {SignedLogValue{1, 5000.0},
                                      SignedLogValue{-1, 4999.0}};
  SignedLogSeq hs(1, huge);
  CHECK(hs.log_l2_norm() ==
        doctest::Approx(5000.0 + 0.5 * std::log1p(std::exp(-2.0))).epsilon(1e-12));
}
