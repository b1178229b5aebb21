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

#include "qcomb/biqkd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qcomb {

namespace {

constexpr double kOrthoTol = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

const UnitaryBasis& network_basis_elements(NetworkBasis basis) {
  return basis == NetworkBasis::kStandard ? standard_basis() : muub_basis();
}

Qubit normalized(const Qubit& q) {
  const double n = std::sqrt(squared_norm(q));
  return Qubit{q[0] / n, q[1] / n};
}

}  // namespace

const ComplexMatrix& alice_operator(AliceEncoding a) {
  static const ComplexMatrix a1 = ComplexMatrix::identity(2);
  static const ComplexMatrix a2 = muub_element(kMuubSigns[0]);
  return a == AliceEncoding::kA1 ? a1 : a2;
}

Qubit protocol_state(ProtocolState s) {
  switch (s) {
    case ProtocolState::kZ0:
      return Qubit{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    case ProtocolState::kZ1:
      return Qubit{Complex{0.0, 0.0}, Complex{1.0, 0.0}};
    case ProtocolState::kXPlus:
      return Qubit{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}};
    case ProtocolState::kXMinus:
      return Qubit{Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}};
  }
  throw std::invalid_argument("protocol_state: bad enum value");
}

MeasurementBasis preparation_basis(ProtocolState s) {
  return (s == ProtocolState::kZ0 || s == ProtocolState::kZ1)
             ? MeasurementBasis::kZ
             : MeasurementBasis::kX;
}

MeasurementBasis shifted_basis(ProtocolState s) {
  return preparation_basis(s) == MeasurementBasis::kZ ? MeasurementBasis::kX
                                                      : MeasurementBasis::kY;
}

std::array<Qubit, 2> basis_states(MeasurementBasis b) {
  switch (b) {
    case MeasurementBasis::kZ:
      return {protocol_state(ProtocolState::kZ0),
              protocol_state(ProtocolState::kZ1)};
    case MeasurementBasis::kX:
      return {protocol_state(ProtocolState::kXPlus),
              protocol_state(ProtocolState::kXMinus)};
    case MeasurementBasis::kY:
      return {Qubit{Complex{kInvSqrt2, 0.0}, Complex{0.0, kInvSqrt2}},
              Qubit{Complex{kInvSqrt2, 0.0}, Complex{0.0, -kInvSqrt2}}};
  }
  throw std::invalid_argument("basis_states: bad enum value");
}

Complex inner(const Qubit& a, const Qubit& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

double squared_norm(const Qubit& q) {
  return std::norm(q[0]) + std::norm(q[1]);
}

Qubit apply(const ComplexMatrix& m, const Qubit& q) {
  return Qubit{m(0, 0) * q[0] + m(0, 1) * q[1],
               m(1, 0) * q[0] + m(1, 1) * q[1]};
}

Qubit encode_action(AliceEncoding a, const Qubit& phi) {
  return normalized(apply(alice_operator(a), phi));
}

Branch eve_conditional_state(AliceEncoding a, const ComplexMatrix& guess,
                             const Qubit& phi, const NetworkParams& params) {
  const ComplexMatrix& op = alice_operator(a);
  const Complex amplitude = (op * guess.dagger()).trace();
  const Qubit encoded = apply(op, phi);
  const Qubit guessed = apply(guess, phi);
  Qubit final_state{params.y() * encoded[0] + params.x() * amplitude * guessed[0],
                    params.y() * encoded[1] + params.x() * amplitude * guessed[1]};
  const double weight = squared_norm(final_state) / 4.0;
  if (weight <= 0.0) {
    return Branch{Qubit{Complex{0.0, 0.0}, Complex{0.0, 0.0}}, 0.0};
  }
  return Branch{normalized(final_state), weight};
}

double measurement_probability(const Qubit& outcome, const Qubit& state) {
  return std::norm(inner(outcome, state));
}

DecodeResult decode(const BobRound& round, int outcome_index) {
  if (outcome_index < 0 || outcome_index > 1) {
    throw std::invalid_argument("decode: outcome index must be 0 or 1");
  }
  const Qubit phi = protocol_state(round.input);
  const Qubit outcome = basis_states(round.measurement)[outcome_index];
  if (round.measurement == preparation_basis(round.input)) {
    // Same basis: the input itself is impossible to flip under A1.
    if (measurement_probability(outcome, phi) < kOrthoTol) {
      return DecodeResult::kConclusiveA2;
    }
    return DecodeResult::kInconclusive;
  }
  if (round.measurement == shifted_basis(round.input)) {
    const Qubit flipped = encode_action(AliceEncoding::kA2, phi);
    if (measurement_probability(outcome, flipped) < kOrthoTol) {
      return DecodeResult::kConclusiveA1;
    }
    return DecodeResult::kInconclusive;
  }
  throw std::invalid_argument("decode: measurement basis not admissible for input");
}

EvePosterior eve_posterior(const NetworkParams& params, NetworkBasis basis,
                           int guess_index) {
  if (guess_index < 0 || guess_index > 3) {
    throw std::invalid_argument("eve_posterior: guess index must be in 0..3");
  }
  const double native = guess_index == 0 ? probability_guess_matches(params)
                                         : probability_guess_differs(params);
  const double foreign = probability_unbiased_input(params);
  const double denom = native + foreign;
  // `native` is the likelihood of this guess under the encoding drawn from
  // the network's own basis (A1 for the standard network, A2 for the other).
  // The complement is taken directly so the pair sums to one exactly.
  const double pr_native = native / denom;
  const double pr_foreign = 1.0 - pr_native;
  if (basis == NetworkBasis::kStandard) {
    return EvePosterior{pr_native, pr_foreign};
  }
  return EvePosterior{pr_foreign, pr_native};
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double eve_entropy_match(const NetworkParams& params) {
  return binary_entropy(eve_posterior(params, NetworkBasis::kStandard, 0).pr_a1);
}

double eve_entropy_other(const NetworkParams& params) {
  return binary_entropy(eve_posterior(params, NetworkBasis::kStandard, 1).pr_a1);
}

std::pair<double, double> alice_eve_mutual_info(const NetworkParams& params) {
  // Marginal of a guess: average its likelihood over Alice's equiprobable
  // encoding and Eve's equiprobable basis choice. The eight marginals then
  // sum to one.
  const double marginal_match =
      (probability_guess_matches(params) + probability_unbiased_input(params)) /
      4.0;
  const double marginal_other =
      (probability_guess_differs(params) + probability_unbiased_input(params)) /
      4.0;
  const double h_ae =
      2.0 * (eve_entropy_match(params) * marginal_match +
             3.0 * eve_entropy_other(params) * marginal_other);
  return {h_ae, 1.0 - h_ae};
}

double alice_eve_entropy_uniform_marginals(const NetworkParams& params) {
  return 0.5 * (eve_entropy_match(params) + 3.0 * eve_entropy_other(params));
}

std::vector<RoundOutcome> enumerate_round(ProtocolState input,
                                          const NetworkParams& params) {
  const Qubit phi = protocol_state(input);
  const std::array<MeasurementBasis, 2> measurements = {preparation_basis(input),
                                                        shifted_basis(input)};
  std::vector<RoundOutcome> leaves;
  leaves.reserve(64);
  for (AliceEncoding alice : {AliceEncoding::kA1, AliceEncoding::kA2}) {
    for (NetworkBasis net : {NetworkBasis::kStandard, NetworkBasis::kMuub}) {
      const auto& guesses = network_basis_elements(net).elements;
      for (int g = 0; g < 4; ++g) {
        const Branch branch = eve_conditional_state(
            alice, guesses[static_cast<std::size_t>(g)], phi, params);
        if (branch.weight <= 0.0) continue;
        for (MeasurementBasis meas : measurements) {
          const auto outcomes = basis_states(meas);
          for (int outcome = 0; outcome < 2; ++outcome) {
            const auto& state = outcomes[static_cast<std::size_t>(outcome)];
            const double born = measurement_probability(state, branch.state);
            const double mass = 0.5 * 0.5 * branch.weight * 0.5 * born;
            leaves.push_back(RoundOutcome{alice, net, g, meas, outcome, state,
                                          mass, decode({input, meas}, outcome)});
          }
        }
      }
    }
  }
  return leaves;
}

InputBreakdown enumerate_input(ProtocolState input, const NetworkParams& params) {
  InputBreakdown breakdown{0.0, 0.0, 0.0};
  for (const RoundOutcome& leaf : enumerate_round(input, params)) {
    breakdown.total_mass += leaf.weight;
    if (leaf.decode_result == DecodeResult::kInconclusive || leaf.weight <= 0.0) {
      continue;
    }
    breakdown.conclusive_mass += leaf.weight;
    const bool says_a1 = leaf.decode_result == DecodeResult::kConclusiveA1;
    if (says_a1 != (leaf.encoding == AliceEncoding::kA1)) {
      breakdown.wrong_mass += leaf.weight;
    }
  }
  return breakdown;
}

SecurityAnalysis analyze(const NetworkParams& params) {
  double conclusive = 0.0;
  double wrong = 0.0;
  for (ProtocolState input : kProtocolStates) {
    const InputBreakdown breakdown = enumerate_input(input, params);
    conclusive += 0.25 * breakdown.conclusive_mass;
    wrong += 0.25 * breakdown.wrong_mass;
  }
  SecurityAnalysis analysis;
  analysis.conclusive_rate = conclusive;
  analysis.e_ab = conclusive > 0.0 ? wrong / conclusive : 0.0;
  analysis.i_ab = 1.0 - binary_entropy(analysis.e_ab);
  const auto [h_ae, i_ae] = alice_eve_mutual_info(params);
  analysis.h_ae = h_ae;
  analysis.i_ae = i_ae;
  return analysis;
}

double error_rate_closed_form(double y) {
  const double s = y * y + y * std::sqrt(4.0 - 3.0 * y * y);
  return (-2.0 + s) / (-6.0 + s);
}

double alice_bob_mutual_info(const NetworkParams& params) {
  return 1.0 - binary_entropy(analyze(params).e_ab);
}

MonteCarloResult simulate_monte_carlo(const EveConfig& config,
                                      std::uint64_t rounds,
                                      std::uint64_t seed) {
  if (rounds < 1) {
    throw std::invalid_argument("simulate_monte_carlo: rounds must be >= 1");
  }
  const NetworkParams& params = config.params;

  // Precompute every branch the sampler can visit. Weights and Born
  // probabilities depend only on (input, encoding, network, guess).
  struct BranchTable {
    double weight;
    double p_outcome0[2];  // per measurement slot: same-basis, shifted
  };
  BranchTable table[4][2][2][4];
  DecodeResult decode_table[4][2][2];
  for (int s = 0; s < 4; ++s) {
    const ProtocolState input = kProtocolStates[static_cast<std::size_t>(s)];
    const Qubit phi = protocol_state(input);
    const std::array<MeasurementBasis, 2> measurements = {
        preparation_basis(input), shifted_basis(input)};
    for (int m = 0; m < 2; ++m) {
      for (int o = 0; o < 2; ++o) {
        decode_table[s][m][o] = decode({input, measurements[static_cast<std::size_t>(m)]}, o);
      }
    }
    for (int a = 0; a < 2; ++a) {
      const AliceEncoding alice = a == 0 ? AliceEncoding::kA1 : AliceEncoding::kA2;
      for (int n = 0; n < 2; ++n) {
        const NetworkBasis net = n == 0 ? NetworkBasis::kStandard : NetworkBasis::kMuub;
        for (int g = 0; g < 4; ++g) {
          const Branch branch = eve_conditional_state(
              alice, network_basis_elements(net).elements[static_cast<std::size_t>(g)],
              phi, params);
          BranchTable& entry = table[s][a][n][g];
          entry.weight = branch.weight;
          for (int m = 0; m < 2; ++m) {
            const auto outcomes = basis_states(measurements[static_cast<std::size_t>(m)]);
            entry.p_outcome0[m] =
                branch.weight > 0.0
                    ? measurement_probability(outcomes[0], branch.state)
                    : 0.0;
          }
        }
      }
    }
  }

  const double h_match = eve_entropy_match(params);
  const double h_other = eve_entropy_other(params);

  // Integer tallies only, so the aggregate is independent of summation order.
  std::uint64_t n_conclusive = 0;
  std::uint64_t n_wrong = 0;
  std::uint64_t n_guess_match = 0;

  for (std::uint64_t r = 0; r < rounds; ++r) {
    SplitMix64 rng = round_stream(seed, r);
    int s = static_cast<int>(rng.next_unit() * 4.0);
    if (s > 3) s = 3;
    const int a = rng.next_unit() < 0.5 ? 0 : 1;
    const int n = rng.next_unit() < 0.5 ? 0 : 1;

    const double u_guess = rng.next_unit();
    int g = 3;
    double cumulative = 0.0;
    for (int k = 0; k < 4; ++k) {
      cumulative += table[s][a][n][k].weight;
      if (u_guess < cumulative) {
        g = k;
        break;
      }
    }
    if (g == 0) ++n_guess_match;

    const int m = rng.next_unit() < 0.5 ? 0 : 1;
    const int outcome = rng.next_unit() < table[s][a][n][g].p_outcome0[m] ? 0 : 1;

    const DecodeResult result = decode_table[s][m][outcome];
    if (result == DecodeResult::kInconclusive) continue;
    ++n_conclusive;
    const bool says_a1 = result == DecodeResult::kConclusiveA1;
    if (says_a1 != (a == 0)) ++n_wrong;
  }

  MonteCarloResult mc;
  mc.rounds = rounds;
  mc.seed = seed;
  mc.conclusive_rounds = n_conclusive;
  mc.e_ab_defined = n_conclusive > 0;

  const double total = static_cast<double>(rounds);
  const double rate = static_cast<double>(n_conclusive) / total;
  mc.analysis.conclusive_rate = rate;
  mc.conclusive_rate_stderr = std::sqrt(rate * (1.0 - rate) / total);

  if (mc.e_ab_defined) {
    const double e = static_cast<double>(n_wrong) / static_cast<double>(n_conclusive);
    mc.analysis.e_ab = e;
    mc.e_ab_stderr = std::sqrt(e * (1.0 - e) / static_cast<double>(n_conclusive));
    mc.analysis.i_ab = 1.0 - binary_entropy(e);
  } else {
    mc.analysis.e_ab = 0.0;
    mc.e_ab_stderr = 0.0;
    mc.analysis.i_ab = 1.0;
  }

  const double match_fraction = static_cast<double>(n_guess_match) / total;
  const double h_mean = match_fraction * h_match + (1.0 - match_fraction) * h_other;
  const double h_second = match_fraction * h_match * h_match +
                          (1.0 - match_fraction) * h_other * h_other;
  mc.analysis.h_ae = h_mean;
  mc.analysis.i_ae = 1.0 - h_mean;
  mc.h_ae_stderr = std::sqrt(std::max(0.0, h_second - h_mean * h_mean) / total);
  return mc;
}

ThresholdResult security_threshold(double tolerance) {
  if (tolerance <= 0.0) {
    throw std::invalid_argument("security_threshold: tolerance must be positive");
  }
  const auto objective = [](double y) {
    const SecurityAnalysis analysis = analyze(NetworkParams::from_y(y));
    return analysis.i_ab - analysis.i_ae;
  };

  constexpr int kScanPoints = 64;
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  bool bracketed = false;
  double prev_y = 0.0;
  double prev_f = objective(0.0);
  for (int j = 1; j <= kScanPoints; ++j) {
    const double y = static_cast<double>(j) / kScanPoints;
    const double f = objective(y);
    if (prev_f == 0.0 || prev_f * f < 0.0) {
      lo = prev_y;
      hi = y;
      f_lo = prev_f;
      bracketed = true;
      break;
    }
    prev_y = y;
    prev_f = f;
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "security_threshold: no sign change on (0, 1); endpoint objective "
        << "values " << objective(0.0) << " and " << objective(1.0);
    throw std::runtime_error(msg.str());
  }

  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = objective(mid);
    if (f_mid == 0.0) {
      lo = mid;
      hi = mid;
      break;
    }
    if (f_lo * f_mid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }

  const double y_star = 0.5 * (lo + hi);
  const SecurityAnalysis at_root = analyze(NetworkParams::from_y(y_star));
  return ThresholdResult{y_star, at_root.e_ab, at_root.i_ab};
}

}  // namespace qcomb
