// Copyright 2026 qcomb developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qcomb/biqkd.hpp"

using namespace qcomb;

namespace {

double overlap_weight(const Qubit& a, const Qubit& b) {
  return std::norm(inner(a, b)) / (squared_norm(a) * squared_norm(b));
}

// The four flip images: Z-basis states go to X-basis states, X-basis states
// to Y-basis states, with the partner swapped for the Z pair.
Qubit expected_flip_image(ProtocolState s) {
  switch (s) {
    case ProtocolState::kZ0:
      return basis_states(MeasurementBasis::kX)[1];
    case ProtocolState::kZ1:
      return basis_states(MeasurementBasis::kX)[0];
    case ProtocolState::kXPlus:
      return basis_states(MeasurementBasis::kY)[0];
    case ProtocolState::kXMinus:
      return basis_states(MeasurementBasis::kY)[1];
  }
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("encoding action: passive identity and the unbiased flip") {
  for (ProtocolState s : kProtocolStates) {
    const Qubit phi = protocol_state(s);
    const Qubit unchanged = encode_action(AliceEncoding::kA1, phi);
    CHECK(overlap_weight(unchanged, phi) == doctest::Approx(1.0).epsilon(1e-12));

    const Qubit flipped = encode_action(AliceEncoding::kA2, phi);
    CHECK(overlap_weight(flipped, expected_flip_image(s)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("the two encodings are mutually unbiased operators") {
  const Complex overlap_trace =
      (alice_operator(AliceEncoding::kA1).dagger() *
       alice_operator(AliceEncoding::kA2))
          .trace();
  CHECK(std::norm(overlap_trace) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conditional branch weights reproduce the guess probabilities") {
  const NetworkParams params = NetworkParams::from_y(0.33);
  const double w_match = probability_guess_matches(params);
  const double w_differ = probability_guess_differs(params);
  const double w_unbiased = probability_unbiased_input(params);

  for (ProtocolState s : kProtocolStates) {
    const Qubit phi = protocol_state(s);

    // Passive encoding against the standard network.
    const auto& standard = standard_basis().elements;
    const Branch match =
        eve_conditional_state(AliceEncoding::kA1, standard[0], phi, params);
    CHECK(std::abs(match.weight - w_match) <= 1e-12);
    // Norm oracle: the matching branch is (y + 2x)|phi>.
    CHECK(std::abs(match.weight - (params.y() + 2.0 * params.x()) *
                                      (params.y() + 2.0 * params.x()) / 4.0) <=
          1e-12);
    double total = match.weight;
    for (std::size_t i = 1; i < 4; ++i) {
      const Branch differ =
          eve_conditional_state(AliceEncoding::kA1, standard[i], phi, params);
      CHECK(std::abs(differ.weight - w_differ) <= 1e-12);
      total += differ.weight;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // Unbiased encoding: every standard guess is equally likely.
    total = 0.0;
    for (const auto& guess : standard) {
      const Branch b = eve_conditional_state(AliceEncoding::kA2, guess, phi, params);
      CHECK(std::abs(b.weight - w_unbiased) <= 1e-12);
      total += b.weight;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("zero-weight branches return the sentinel state") {
  const NetworkParams projective = NetworkParams::from_xy(1.0, 0.0);
  const Branch impossible = eve_conditional_state(
      AliceEncoding::kA1, pauli_x(), protocol_state(ProtocolState::kZ0),
      projective);
  CHECK(impossible.weight == 0.0);
  CHECK(impossible.state[0] == Complex{0.0, 0.0});
  CHECK(impossible.state[1] == Complex{0.0, 0.0});
}

TEST_CASE("measurement probabilities") {
  const NetworkParams params = NetworkParams::from_y(0.4);
  const Qubit zero = protocol_state(ProtocolState::kZ0);
  const Branch surviving = eve_conditional_state(
      AliceEncoding::kA1, standard_basis().elements[0], zero, params);
  CHECK(measurement_probability(protocol_state(ProtocolState::kZ1),
                                surviving.state) == 0.0);
  CHECK(measurement_probability(zero, surviving.state) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(measurement_probability(protocol_state(ProtocolState::kXPlus),
                                protocol_state(ProtocolState::kXMinus)) == 0.0);
}

TEST_CASE("decoding by exclusion") {
  CHECK(decode({ProtocolState::kZ0, MeasurementBasis::kZ}, 1) ==
        DecodeResult::kConclusiveA2);
  CHECK(decode({ProtocolState::kZ0, MeasurementBasis::kZ}, 0) ==
        DecodeResult::kInconclusive);
  CHECK(decode({ProtocolState::kZ0, MeasurementBasis::kX}, 0) ==
        DecodeResult::kConclusiveA1);
  CHECK(decode({ProtocolState::kXPlus, MeasurementBasis::kX}, 0) ==
        DecodeResult::kInconclusive);
  CHECK(decode({ProtocolState::kXPlus, MeasurementBasis::kY}, 1) ==
        DecodeResult::kConclusiveA1);
  CHECK_THROWS_AS(decode({ProtocolState::kZ0, MeasurementBasis::kY}, 0),
                  std::invalid_argument);

  // Oracle: the shifted-basis outcome that decodes to A1 must be the one
  // orthogonal to the flip image of the input.
  for (ProtocolState s : kProtocolStates) {
    const MeasurementBasis shifted = shifted_basis(s);
    const auto outcomes = basis_states(shifted);
    const Qubit image = expected_flip_image(s);
    for (int o = 0; o < 2; ++o) {
      const bool orthogonal =
          measurement_probability(outcomes[static_cast<std::size_t>(o)], image) <
          1e-12;
      CHECK((decode({s, shifted}, o) == DecodeResult::kConclusiveA1) ==
            orthogonal);
    }
  }
}

TEST_CASE("without the attack no conclusive decode is ever wrong") {
  const NetworkParams passive = NetworkParams::from_xy(0.0, 1.0);
  for (ProtocolState s : kProtocolStates) {
    CHECK(enumerate_input(s, passive).wrong_mass == 0.0);
  }

  // Directly: under either encoding, outcomes that decode against the truth
  // carry exactly zero Born probability.
  for (ProtocolState s : kProtocolStates) {
    const Qubit phi = protocol_state(s);
    for (AliceEncoding a : {AliceEncoding::kA1, AliceEncoding::kA2}) {
      const Qubit sent = encode_action(a, phi);
      for (MeasurementBasis meas : {preparation_basis(s), shifted_basis(s)}) {
        const auto outcomes = basis_states(meas);
        for (int o = 0; o < 2; ++o) {
          const DecodeResult result = decode({s, meas}, o);
          if (result == DecodeResult::kInconclusive) continue;
          const bool wrong =
              (result == DecodeResult::kConclusiveA1) != (a == AliceEncoding::kA1);
          if (wrong) {
            CHECK(measurement_probability(outcomes[static_cast<std::size_t>(o)],
                                          sent) == 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("posteriors: closed form, Bayes oracle, exact normalization") {
  const NetworkParams projective = NetworkParams::from_xy(1.0, 0.0);
  const EvePosterior at_match = eve_posterior(projective, NetworkBasis::kStandard, 0);
  CHECK(at_match.pr_a1 == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(at_match.pr_a2 == doctest::Approx(0.2).epsilon(1e-15));
  const EvePosterior at_other = eve_posterior(projective, NetworkBasis::kStandard, 1);
  CHECK(at_other.pr_a1 == 0.0);
  CHECK(at_other.pr_a2 == 1.0);

  const NetworkParams passive = NetworkParams::from_xy(0.0, 1.0);
  for (int g = 0; g < 4; ++g) {
    for (NetworkBasis net : {NetworkBasis::kStandard, NetworkBasis::kMuub}) {
      const EvePosterior p = eve_posterior(passive, net, g);
      CHECK(p.pr_a1 == 0.5);
      CHECK(p.pr_a2 == 0.5);
    }
  }

  // Bayes oracle built from the branch weights themselves.
  const Qubit phi = protocol_state(ProtocolState::kZ0);
  for (double y : {0.15, 0.5, 0.85}) {
    const NetworkParams params = NetworkParams::from_y(y);
    for (NetworkBasis net : {NetworkBasis::kStandard, NetworkBasis::kMuub}) {
      const auto& elements = (net == NetworkBasis::kStandard
                                  ? standard_basis()
                                  : muub_basis())
                                 .elements;
      for (int g = 0; g < 4; ++g) {
        const double w1 = eve_conditional_state(AliceEncoding::kA1,
                                                elements[static_cast<std::size_t>(g)],
                                                phi, params)
                              .weight;
        const double w2 = eve_conditional_state(AliceEncoding::kA2,
                                                elements[static_cast<std::size_t>(g)],
                                                phi, params)
                              .weight;
        const EvePosterior posterior = eve_posterior(params, net, g);
        CHECK(std::abs(posterior.pr_a1 - w1 / (w1 + w2)) <= 1e-12);
        CHECK(posterior.pr_a1 + posterior.pr_a2 == 1.0);
      }
    }
  }
}

TEST_CASE("eavesdropper entropy: extremes, crossing, marginal normalization") {
  const NetworkParams passive = NetworkParams::from_xy(0.0, 1.0);
  const auto [h_passive, i_passive] = alice_eve_mutual_info(passive);
  CHECK(h_passive == 1.0);
  CHECK(i_passive == 0.0);

  const NetworkParams projective = NetworkParams::from_xy(1.0, 0.0);
  const double expected =
      -0.8 * std::log2(0.8) - 0.2 * std::log2(0.2);  // h(1/5) ≈ 0.7219
  CHECK(std::abs(eve_entropy_match(projective) - expected) <= 1e-12);
  CHECK(eve_entropy_other(projective) == 0.0);

  // The two entropy curves cross between 0.55 and 0.65.
  double crossing = -1.0;
  double prev = eve_entropy_match(NetworkParams::from_y(0.0)) -
                eve_entropy_other(NetworkParams::from_y(0.0));
  for (int k = 1; k <= 1000; ++k) {
    const NetworkParams params = NetworkParams::from_y(k / 1000.0);
    const double diff = eve_entropy_match(params) - eve_entropy_other(params);
    if (prev * diff <= 0.0) {
      crossing = k / 1000.0;
      break;
    }
    prev = diff;
  }
  CHECK(crossing >= 0.55);
  CHECK(crossing <= 0.65);

  for (int k = 0; k <= 20; ++k) {
    const NetworkParams params = NetworkParams::from_y(k / 20.0);
    const double marginal_match = (probability_guess_matches(params) +
                                   probability_unbiased_input(params)) /
                                  4.0;
    const double marginal_other = (probability_guess_differs(params) +
                                   probability_unbiased_input(params)) /
                                  4.0;
    CHECK(std::abs(2.0 * (marginal_match + 3.0 * marginal_other) - 1.0) <= 1e-12);
    const auto [h, i] = alice_eve_mutual_info(params);
    CHECK(h >= -1e-12);
    CHECK(h <= 1.0 + 1e-12);
    CHECK(std::abs(h + i - 1.0) <= 1e-15);
  }

  CHECK(std::abs(alice_eve_entropy_uniform_marginals(projective) -
                 0.5 * expected) <= 1e-12);
}

TEST_CASE("round enumeration produces a consistent branch tree") {
  const NetworkParams params = NetworkParams::from_y(0.45);
  for (ProtocolState s : kProtocolStates) {
    const auto leaves = enumerate_round(s, params);
    double total = 0.0;
    for (const RoundOutcome& leaf : leaves) {
      CHECK(leaf.weight >= 0.0);
      CHECK(leaf.eve_guess >= 0);
      CHECK(leaf.eve_guess <= 3);
      CHECK(std::abs(squared_norm(leaf.post_state) - 1.0) <= 1e-12);
      // The recorded decode matches a fresh decode of the same branch.
      CHECK(leaf.decode_result ==
            decode({s, leaf.measurement}, leaf.outcome_index));
      total += leaf.weight;
    }
    CHECK(std::abs(total - 1.0) <= 1e-10);

    // Away from the extremes nothing is pruned: 2 encodings x 2 networks x
    // 4 guesses x 2 measurements x 2 outcomes.
    CHECK(leaves.size() == 64);
  }

  // At x = 1 the passive branches vanish and are excluded.
  const auto pruned =
      enumerate_round(ProtocolState::kZ0, NetworkParams::from_xy(1.0, 0.0));
  CHECK(pruned.size() < 64);
}

TEST_CASE("exhaustive enumeration: mass, endpoints, closed form") {
  for (int k = 0; k <= 20; ++k) {
    const NetworkParams params = NetworkParams::from_y(k / 20.0);
    for (ProtocolState s : kProtocolStates) {
      CHECK(std::abs(enumerate_input(s, params).total_mass - 1.0) <= 1e-10);
    }
  }

  const SecurityAnalysis at_zero = analyze(NetworkParams::from_y(0.0));
  CHECK(std::abs(at_zero.e_ab - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(at_zero.conclusive_rate - 0.375) <= 1e-12);
  CHECK(std::abs(enumerate_input(ProtocolState::kZ0, NetworkParams::from_y(0.0))
                     .conclusive_mass -
                 0.375) <= 1e-12);

  const SecurityAnalysis at_one = analyze(NetworkParams::from_y(1.0));
  CHECK(at_one.e_ab == 0.0);
  CHECK(std::abs(at_one.conclusive_rate - 0.25) <= 1e-12);

  double previous = 1.0;
  for (int k = 0; k <= 20; ++k) {
    const double y = k / 20.0;
    const SecurityAnalysis analysis = analyze(NetworkParams::from_y(y));
    CHECK(std::abs(analysis.e_ab - error_rate_closed_form(y)) <= 1e-9);
    CHECK(analysis.e_ab <= previous + 1e-12);
    previous = analysis.e_ab;
  }
}

TEST_CASE("per-input error rates are identical by symmetry") {
  for (double y : {0.0, 0.3, 0.8}) {
    const NetworkParams params = NetworkParams::from_y(y);
    double reference = -1.0;
    for (ProtocolState s : kProtocolStates) {
      const InputBreakdown breakdown = enumerate_input(s, params);
      const double e = breakdown.conclusive_mass > 0.0
                           ? breakdown.wrong_mass / breakdown.conclusive_mass
                           : 0.0;
      if (reference < 0.0) {
        reference = e;
      } else {
        CHECK(std::abs(e - reference) <= 1e-10);
      }
    }
  }
}

TEST_CASE("mutual information between the legitimate parties") {
  CHECK(alice_bob_mutual_info(NetworkParams::from_y(1.0)) == 1.0);
  const double h_third =
      -(1.0 / 3.0) * std::log2(1.0 / 3.0) - (2.0 / 3.0) * std::log2(2.0 / 3.0);
  CHECK(std::abs(alice_bob_mutual_info(NetworkParams::from_y(0.0)) -
                 (1.0 - h_third)) <= 1e-12);
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
}

TEST_CASE("monte carlo agrees with the enumeration and is reproducible") {
  const EveConfig config{NetworkParams::from_y(0.0)};
  const MonteCarloResult mc = simulate_monte_carlo(config, 1000000, 99);
  REQUIRE(mc.e_ab_defined);
  const double sigma =
      std::sqrt((1.0 / 3.0) * (2.0 / 3.0) /
                static_cast<double>(mc.conclusive_rounds));
  CHECK(std::abs(mc.analysis.e_ab - 1.0 / 3.0) <= 3.0 * sigma);
  const double rate_sigma = std::sqrt(0.375 * 0.625 / 1000000.0);
  CHECK(std::abs(mc.analysis.conclusive_rate - 0.375) <= 3.0 * rate_sigma);

  const MonteCarloResult again = simulate_monte_carlo(config, 1000000, 99);
  CHECK(mc.analysis.e_ab == again.analysis.e_ab);
  CHECK(mc.analysis.conclusive_rate == again.analysis.conclusive_rate);
  CHECK(mc.analysis.h_ae == again.analysis.h_ae);
  CHECK(mc.conclusive_rounds == again.conclusive_rounds);
  CHECK(mc.e_ab_stderr == again.e_ab_stderr);

  // Attack off: conclusive rounds carry no errors at all.
  const MonteCarloResult quiet =
      simulate_monte_carlo(EveConfig{NetworkParams::from_y(1.0)}, 10000, 5);
  CHECK(quiet.analysis.e_ab == 0.0);
  CHECK(quiet.conclusive_rounds > 0);

  // A single round can be inconclusive, which flags the error rate undefined.
  bool saw_undefined = false;
  for (std::uint64_t seed = 0; seed < 64 && !saw_undefined; ++seed) {
    const MonteCarloResult tiny = simulate_monte_carlo(config, 1, seed);
    if (!tiny.e_ab_defined) {
      saw_undefined = true;
      CHECK(tiny.analysis.e_ab == 0.0);
      CHECK(tiny.conclusive_rounds == 0);
    }
  }
  CHECK(saw_undefined);

  CHECK_THROWS_AS(simulate_monte_carlo(config, 0, 1), std::invalid_argument);
}

TEST_CASE("security threshold sits near the known crossing") {
  const ThresholdResult threshold = security_threshold(1e-9);
  CHECK(threshold.e_star >= 0.192);
  CHECK(threshold.e_star <= 0.202);

  const SecurityAnalysis at_root = analyze(NetworkParams::from_y(threshold.y_star));
  CHECK(std::abs(at_root.i_ab - at_root.i_ae) <= 1e-6);
  CHECK(std::abs(threshold.i_star - at_root.i_ab) <= 1e-12);

  // Below the threshold error rate the legitimate parties hold the advantage.
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (error_rate_closed_form(mid) > 0.10 ? lo : hi) = mid;
  }
  const SecurityAnalysis secure = analyze(NetworkParams::from_y(0.5 * (lo + hi)));
  CHECK(std::abs(secure.e_ab - 0.10) <= 1e-6);
  CHECK(secure.i_ab > secure.i_ae);

  CHECK_THROWS_AS(security_threshold(0.0), std::invalid_argument);
}
