// Copyright 2026 The qlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "qlc/errors.hpp"
#include "qlc/feedback.hpp"
#include "qlc/models.hpp"
#include "qlc/pauli.hpp"

using namespace qlc;

namespace {

FeedbackConfig base_config() {
  FeedbackConfig cfg;
  cfg.dt = 0.05;
  cfg.mode = FeedbackMode::kWeightedFull;
  cfg.weights = {8.0, 6.0, 4.0, 2.0};
  cfg.gains = {1.0, 1.0, 1.0};
  cfg.alpha_init = {0.0, 0.0, 0.0};
  return cfg;
}

}  // namespace

TEST_CASE("falqon controller negates its input") {
  CHECK(falqon_controller(0.25) == -0.25);
  CHECK(falqon_controller(-1.5) == 1.5);
  CHECK(falqon_controller(0.0) == 0.0);
}

TEST_CASE("weighted controller computes the negated weighted sum") {
  FeedbackConfig cfg = base_config();
  const std::vector<double> Bs{0.1, -0.2, 0.3, 0.05};
  // Hand arithmetic: 8*0.1 - 6*0.2 + 4*0.3 + 2*0.05 = 0.8 - 1.2 + 1.2 + 0.1.
  const double expected = -(8.0 * 0.1 + 6.0 * (-0.2) + 4.0 * 0.3 + 2.0 * 0.05);
  CHECK(weighted_controller(Bs, cfg, 0) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("weighted controller applies the per-control gain") {
  FeedbackConfig cfg = base_config();
  cfg.gains = {1.0, 2.5, 0.5};
  const std::vector<double> Bs{0.1, -0.2, 0.3, 0.05};
  const double base = weighted_controller(Bs, cfg, 0);
  CHECK(weighted_controller(Bs, cfg, 1) == doctest::Approx(2.5 * base));
  CHECK(weighted_controller(Bs, cfg, 2) == doctest::Approx(0.5 * base));
}

TEST_CASE("weighted controller with unit weight reduces to the single register law") {
  FeedbackConfig cfg;
  cfg.dt = 0.05;
  cfg.mode = FeedbackMode::kFalqon;
  cfg.weights = {1.0};
  cfg.gains = {1.0};
  cfg.alpha_init = {0.0};
  for (double b : {0.0, 0.37, -2.25, 1e-13}) {
    CHECK(weighted_controller(std::vector<double>{b}, cfg, 0) ==
          falqon_controller(b));  // bitwise
  }
}

TEST_CASE("weighted controller validates the control index and register count") {
  FeedbackConfig cfg = base_config();
  const std::vector<double> Bs{0.1, -0.2, 0.3, 0.05};
  CHECK_THROWS_AS(weighted_controller(Bs, cfg, 3), DimensionError);
  CHECK_THROWS_AS(weighted_controller(Bs, cfg, -1), DimensionError);
  // A measurement vector shorter than the weight list fails configuration
  // validation before the index is even considered.
  const std::vector<double> short_Bs{0.1, -0.2};
  CHECK_THROWS_AS(weighted_controller(short_Bs, cfg, 0), ValidationError);
}

TEST_CASE("lyapunov value is the weighted energy sum") {
  const std::vector<double> energies{-7.0628, -7.074, -7.084, -7.074};
  const std::vector<double> weights{8.0, 6.0, 4.0, 2.0};
  const double expected = 8.0 * -7.0628 + 6.0 * -7.074 + 4.0 * -7.084 + 2.0 * -7.074;
  CHECK(lyapunov_value(energies, weights) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(expected == doctest::Approx(-141.4304).epsilon(1e-12));
}

TEST_CASE("lyapunov value rejects mismatched lengths") {
  const std::vector<double> energies{1.0, 2.0};
  const std::vector<double> weights{1.0};
  CHECK_THROWS_AS(lyapunov_value(energies, weights), DimensionError);
}

TEST_CASE("layer cost is linear in the register count") {
  CHECK(predict_layer_cost(0, 27) == 27);
  CHECK(predict_layer_cost(1, 27) == 54);
  CHECK(predict_layer_cost(2, 27) == 81);
  CHECK(predict_layer_cost(3, 27) == 108);
  CHECK(predict_layer_cost(0, 1) == 1);
  CHECK(predict_layer_cost(0, 0) == 0);
  for (int p = 0; p < 6; ++p) {
    CHECK(predict_layer_cost(p, 9) == (p + 1) * 9);
  }
  CHECK_THROWS_AS(predict_layer_cost(-1, 9), ValidationError);
  CHECK_THROWS_AS(predict_layer_cost(0, -1), ValidationError);
}

TEST_CASE("config validation accepts the reference setups") {
  FeedbackConfig cfg = base_config();
  CHECK_NOTHROW(cfg.validate(4, 3));

  FeedbackConfig falqon;
  falqon.dt = 0.05;
  falqon.mode = FeedbackMode::kFalqon;
  falqon.weights = {1.0};
  falqon.gains = {1.0};
  falqon.alpha_init = {0.0};
  CHECK_NOTHROW(falqon.validate(1, 1));

  FeedbackConfig pth;
  pth.dt = 0.05;
  pth.mode = FeedbackMode::kWeightedPthOnly;
  pth.weights = {1.0, 1.0, 0.5};
  pth.gains = {1.0};
  pth.alpha_init = {0.0};
  CHECK_NOTHROW(pth.validate(3, 1));
}

TEST_CASE("config validation rejects malformed setups") {
  SUBCASE("non-positive dt") {
    FeedbackConfig cfg = base_config();
    cfg.dt = 0.0;
    CHECK_THROWS_AS(cfg.validate(4, 3), ValidationError);
  }
  SUBCASE("weights count differs from registers") {
    FeedbackConfig cfg = base_config();
    CHECK_THROWS_AS(cfg.validate(3, 3), ValidationError);
  }
  SUBCASE("gains count differs from controls") {
    FeedbackConfig cfg = base_config();
    CHECK_THROWS_AS(cfg.validate(4, 2), ValidationError);
  }
  SUBCASE("alpha_init count differs from controls") {
    FeedbackConfig cfg = base_config();
    cfg.alpha_init = {0.0};
    CHECK_THROWS_AS(cfg.validate(4, 3), ValidationError);
  }
  SUBCASE("full weighting must strictly decrease") {
    FeedbackConfig cfg = base_config();
    cfg.weights = {8.0, 8.0, 4.0, 2.0};
    CHECK_THROWS_AS(cfg.validate(4, 3), ValidationError);
    cfg.weights = {2.0, 4.0, 6.0, 8.0};
    CHECK_THROWS_AS(cfg.validate(4, 3), ValidationError);
  }
  SUBCASE("full weighting must stay positive") {
    FeedbackConfig cfg = base_config();
    cfg.weights = {8.0, 6.0, 4.0, -2.0};
    CHECK_THROWS_AS(cfg.validate(4, 3), ValidationError);
  }
  SUBCASE("single register law wants exactly one register") {
    FeedbackConfig cfg = base_config();
    cfg.mode = FeedbackMode::kFalqon;
    CHECK_THROWS_AS(cfg.validate(4, 3), ValidationError);
  }
  SUBCASE("single register law wants unit gain") {
    FeedbackConfig cfg;
    cfg.dt = 0.05;
    cfg.mode = FeedbackMode::kFalqon;
    cfg.weights = {1.0};
    cfg.gains = {2.0};
    cfg.alpha_init = {0.0};
    CHECK_THROWS_AS(cfg.validate(1, 1), ValidationError);
  }
  SUBCASE("last register weighting needs leading unit weights") {
    FeedbackConfig cfg;
    cfg.dt = 0.05;
    cfg.mode = FeedbackMode::kWeightedPthOnly;
    cfg.weights = {1.0, 0.9, 0.5};
    cfg.gains = {1.0};
    cfg.alpha_init = {0.0};
    CHECK_THROWS_AS(cfg.validate(3, 1), ValidationError);
  }
  SUBCASE("last register weight must sit strictly inside (0, 1)") {
    FeedbackConfig cfg;
    cfg.dt = 0.05;
    cfg.mode = FeedbackMode::kWeightedPthOnly;
    cfg.gains = {1.0};
    cfg.alpha_init = {0.0};
    cfg.weights = {1.0, 1.0};
    CHECK_THROWS_AS(cfg.validate(2, 1), ValidationError);
    cfg.weights = {1.0, 0.0};
    CHECK_THROWS_AS(cfg.validate(2, 1), ValidationError);
  }
  SUBCASE("last register weighting needs at least two registers") {
    FeedbackConfig cfg;
    cfg.dt = 0.05;
    cfg.mode = FeedbackMode::kWeightedPthOnly;
    cfg.gains = {1.0};
    cfg.alpha_init = {0.0};
    cfg.weights = {0.5};
    CHECK_THROWS_AS(cfg.validate(1, 1), ValidationError);
  }
}

TEST_CASE("commutator observables match the dense oracle per control") {
  const PauliSum drift = model_preset("lih-sto6g-R2.5");
  const std::vector<PauliSum> controls = build_zx_controls(3);
  const CommutatorObservables obs = CommutatorObservables::build(drift, controls);
  REQUIRE(obs.per_control.size() == 3);

  const std::complex<double> kI{0.0, 1.0};
  const Eigen::MatrixXcd dense_drift = oracle::dense_sum(drift);
  for (std::size_t j = 0; j < controls.size(); ++j) {
    const Eigen::MatrixXcd dense_control = oracle::dense_sum(controls[j]);
    const Eigen::MatrixXcd expected =
        kI * (dense_control * dense_drift - dense_drift * dense_control);
    const Eigen::MatrixXcd actual = oracle::dense_sum(obs.per_control[j]);
    CAPTURE(j);
    CHECK((actual - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("reference model produces nine observables per control") {
  const PauliSum drift = model_preset("lih-sto6g-R2.5");
  const CommutatorObservables obs =
      CommutatorObservables::build(drift, build_zx_controls(3));
  for (const PauliSum& sum : obs.per_control) {
    CHECK(sum.size() == 9);
  }
  CHECK(obs.total_terms() == 27);
}

TEST_CASE("commuting control yields an empty observable") {
  const PauliSum drift(2, {{1.0, PauliString::from_label("ZZ")}});
  const std::vector<PauliSum> controls{
      PauliSum(2, {{1.0, PauliString::from_label("ZI")}})};
  const CommutatorObservables obs = CommutatorObservables::build(drift, controls);
  CHECK(obs.per_control[0].empty());
  CHECK(obs.total_terms() == 0);
}
