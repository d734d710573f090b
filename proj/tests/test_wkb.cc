#include <doctest.h>

#include <cmath>

#include "sslab/wkb.hpp"

using namespace sslab;

namespace {

// production rescaling: eps = 40/1024, C = D + 1 at beta = -1, A = 1
RescaledParams params_for(double D) { return rescale_for_D(D, -1.0, 1.0, 40.0, 512); }

}  // namespace

TEST_CASE("turning points of the sech^2 well") {
  const double D = 0.012134, nu = 1.0;
  const RescaledParams p = params_for(D);
  const auto tp = turning_point(D, nu, p);
  REQUIRE(tp.has_value());

  // bisection root against the analytic inversion sech^2(eps X) = D / (nu V_amp)
  const double s = std::sqrt(D / (nu * p.V_amplitude));
  const double X_analytic = std::acosh(1.0 / s) / p.epsilon;
  CHECK(tp->X_exact == doctest::Approx(X_analytic).epsilon(1e-9));

  const double X_tail =
      std::log(8.0 * nu * p.ratio_C * p.beta * p.beta / D) / (2.0 * p.epsilon);
  CHECK(tp->X_exp == doctest::Approx(X_tail).epsilon(1e-12));
  // tail form is within half a percent of the exact root this deep in the tail
  CHECK(tp->X_exp == doctest::Approx(tp->X_exact).epsilon(5e-3));

  SUBCASE("edge cases") {
    const auto top = turning_point(nu * p.V_amplitude, nu, p);
    REQUIRE(top.has_value());
    CHECK(top->X_exact == 0.0);                            // D at the well top
    CHECK(!turning_point(1.001 * nu * p.V_amplitude, nu, p));  // above the well
    CHECK(!turning_point(0.0, nu, p));
    CHECK(!turning_point(-0.1, nu, p));
    CHECK(!turning_point(1e-18, nu, p));  // below the potential floor at X_half
  }
}

TEST_CASE("continuous index: frozen values and method agreement") {
  struct Row {
    double D, n1_sech, n1_closed, diff_sech;
  };
  // index at nu=1 and the nu=1 minus nu=3 difference
  const Row rows[] = {
      {0.012134, 29.0182, 29.0165, 0.9873},
      {0.012928, 30.0268, 30.0249, 1.0192},
      {0.013750, 31.0406, 31.0385, 1.0512},
  };
  for (const Row& row : rows) {
    const RescaledParams p = params_for(row.D);
    const QuantizationIndex q1 = n_of_D_integral(row.D, 1.0, p);
    CHECK(q1.n_sech == doctest::Approx(row.n1_sech).epsilon(1e-4));

    const double closed = n_of_D_closed_form(row.D, 1.0, p);
    CHECK(closed == doctest::Approx(row.n1_closed).epsilon(1e-4));
    // integral over the tail potential reproduces its closed form
    CHECK(q1.n_exp == doctest::Approx(closed).epsilon(1e-4));

    const QuantizationIndex q3 = n_of_D_integral(row.D, 3.0, p);
    const double diff = q1.n_sech - q3.n_sech;
    CHECK(diff == doctest::Approx(row.diff_sech).epsilon(3e-3));
  }
}

TEST_CASE("methods agree to three significant figures across the scan range") {
  for (double D : {0.005, 0.008, 0.0125, 0.02}) {
    const RescaledParams p = params_for(D);
    const QuantizationIndex q = n_of_D_integral(D, 1.0, p);
    const double closed = n_of_D_closed_form(D, 1.0, p);
    CHECK(std::abs(q.n_sech - closed) < 0.01);
    CHECK(std::abs(q.n_exp - closed) < 1e-3);
  }
}

TEST_CASE("quantize carries the method and its turning point") {
  const double D = 0.0125;
  const RescaledParams p = params_for(D);
  const WkbQuantization qi = quantize(D, 1.0, p, WkbMethod::action_integral);
  const WkbQuantization qc = quantize(D, 1.0, p, WkbMethod::closed_form);
  CHECK(qi.n_continuous == doctest::Approx(n_of_D_integral(D, 1.0, p).n_sech).epsilon(1e-12));
  CHECK(qc.n_continuous == doctest::Approx(n_of_D_closed_form(D, 1.0, p)).epsilon(1e-12));
  const auto tp = turning_point(D, 1.0, p);
  REQUIRE(tp.has_value());
  CHECK(qi.X_turning == doctest::Approx(tp->X_exact).epsilon(1e-12));
  CHECK(qc.X_turning == doctest::Approx(tp->X_exp).epsilon(1e-12));
  CHECK(qi.D == D);
  CHECK(qi.nu == 1.0);
}

TEST_CASE("mode-birth predictions") {
  // birth of the n-th index: D where n(D) crosses the integer
  struct Row {
    int n;
    double D_birth;
  };
  const Row rows[] = {{29, 0.012120}, {30, 0.012907}, {31, 0.013717}};
  for (const Row& row : rows) {
    const RescaledParams p = params_for(row.D_birth);
    CHECK(predict_birth_value(row.n, 1.0, p) == doctest::Approx(row.D_birth).epsilon(1e-3));
  }

  SUBCASE("first mode appears near 5.9e-6 by both methods") {
    const RescaledParams p = params_for(0.0125);
    const double b_int = predict_birth_value(0, 1.0, p, WkbMethod::action_integral);
    const double b_closed = predict_birth_value(0, 1.0, p, WkbMethod::closed_form);
    CHECK(b_int == doctest::Approx(5.8977959e-6).epsilon(1e-4));
    CHECK(b_closed == doctest::Approx(5.8977959e-6).epsilon(1e-4));
    CHECK(b_int == doctest::Approx(5.9e-6).epsilon(0.02));
  }

  SUBCASE("vector form and ordering") {
    const RescaledParams p = params_for(0.0125);
    const auto births = predict_birth_values({29, 30, 31}, 1.0, p);
    REQUIRE(births.size() == 3);
    CHECK(births[0] == doctest::Approx(predict_birth_value(29, 1.0, p)).epsilon(1e-12));
    CHECK(births[0] < births[1]);
    CHECK(births[1] < births[2]);
    // a deeper well (nu = 3) pushes the turning point out, shrinking the
    // exterior region: the same index needs a larger D
    CHECK(predict_birth_value(29, 3.0, p) > births[0]);
  }
}

TEST_CASE("index-gap crossing and the implied C") {
  const RescaledParams p = params_for(0.0125);

  const CcrHypothesis ci = hypothesize_C_cr(p, WkbMethod::action_integral);
  CHECK(ci.hypothesis);
  CHECK(ci.D_crossing == doctest::Approx(0.0124465).epsilon(5e-3));
  CHECK(ci.D_low <= ci.D_crossing);
  CHECK(ci.D_high >= ci.D_crossing);
  CHECK(ci.D_high - ci.D_low < 1e-8);
  CHECK(ci.C_cr == doctest::Approx(ci.D_crossing + 1.0).epsilon(1e-12));

  const CcrHypothesis cc = hypothesize_C_cr(p, WkbMethod::closed_form);
  CHECK(cc.D_crossing == doctest::Approx(0.0124776).epsilon(5e-3));

  // both land in the expected window
  CHECK(ci.D_crossing > 0.0121);
  CHECK(ci.D_crossing < 0.0130);
  CHECK(cc.D_crossing > 0.0121);
  CHECK(cc.D_crossing < 0.0130);
}

TEST_CASE("error paths") {
  const RescaledParams p = params_for(0.0125);
  CHECK_THROWS_AS((void)n_of_D_closed_form(-1.0, 1.0, p), std::domain_error);
  CHECK_THROWS_AS((void)n_of_D_integral(10.0, 1.0, p), std::domain_error);  // above the well

  // domain too small for the tail bracket
  const RescaledParams tiny = rescale_for_D(0.012, -1.0, 1.0, 1.0, 16);
  CHECK_THROWS_AS((void)n_of_D_closed_form(0.012, 1.0, tiny), std::domain_error);
}
