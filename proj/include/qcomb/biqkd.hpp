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

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qcomb/networks.hpp"
#include "qcomb/rng.hpp"

namespace qcomb {

// Two-way protocol: Bob sends a qubit, Alice encodes a key bit by applying
// A1 = I ("0") or A2 = (I + iσx + iσy − iσz)/2 ("1"), Bob measures the
// returned qubit and decodes by exclusion. Eve attacks each round with an
// optimal-I network built on either the standard basis or its mutually
// unbiased partner, chosen uniformly.

using Qubit = std::array<Complex, 2>;

enum class AliceEncoding { kA1, kA2 };

/// Bob's four input states.
enum class ProtocolState { kZ0, kZ1, kXPlus, kXMinus };

enum class MeasurementBasis { kZ, kX, kY };

enum class DecodeResult { kConclusiveA1, kConclusiveA2, kInconclusive };

enum class NetworkBasis { kStandard, kMuub };

inline constexpr std::array<ProtocolState, 4> kProtocolStates = {
    ProtocolState::kZ0, ProtocolState::kZ1, ProtocolState::kXPlus,
    ProtocolState::kXMinus};

const ComplexMatrix& alice_operator(AliceEncoding a);
Qubit protocol_state(ProtocolState s);

/// Basis the state was prepared in (Z or X).
MeasurementBasis preparation_basis(ProtocolState s);

/// The other admissible measurement: X for Z-prepared states, Y for
/// X-prepared ones.
MeasurementBasis shifted_basis(ProtocolState s);

/// The two outcome states of a measurement basis, index 0 and 1.
std::array<Qubit, 2> basis_states(MeasurementBasis b);

Complex inner(const Qubit& a, const Qubit& b);
double squared_norm(const Qubit& q);
Qubit apply(const ComplexMatrix& m, const Qubit& q);

/// A_j|φ>, normalized. A2 carries Z-basis states to X-basis states and
/// X-basis states to Y-basis states, up to global phase.
Qubit encode_action(AliceEncoding a, const Qubit& phi);

/// One branch of Eve's intervention: the conditional qubit after her network
/// fires outcome `guess`, with the probability mass of that branch.
struct Branch {
  Qubit state;    // normalized; zero sentinel when weight == 0
  double weight;  // ‖y A|φ> + x Tr[A G†] G|φ>‖² / d², the guess probability
};

Branch eve_conditional_state(AliceEncoding a, const ComplexMatrix& guess,
                             const Qubit& phi, const NetworkParams& params);

/// Born probability |<outcome|state>|²; `state` must be normalized.
double measurement_probability(const Qubit& outcome, const Qubit& state);

struct BobRound {
  ProtocolState input;
  MeasurementBasis measurement;  // preparation basis or its shifted partner
};

/// Decoding by exclusion. Same-basis outcome orthogonal to the input means
/// A1 is impossible; shifted-basis outcome orthogonal to A2's image means A2
/// is impossible. Everything else is inconclusive. Throws on an inadmissible
/// basis for the round.
DecodeResult decode(const BobRound& round, int outcome_index);

struct EvePosterior {
  double pr_a1;
  double pr_a2;
};

/// Bayes posterior over Alice's encoding given Eve's network basis and
/// guess index. Index 0 is the guess matching that basis's encoding (U_1 for
/// the standard network, the A2 element for the unbiased one).
EvePosterior eve_posterior(const NetworkParams& params, NetworkBasis basis,
                           int guess_index);

/// Binary entropy in bits, with h(0) = h(1) = 0.
double binary_entropy(double p);

/// Entropy of the posterior when Eve's guess coincides with the encoding
/// native to her network basis, and when it does not.
double eve_entropy_match(const NetworkParams& params);
double eve_entropy_other(const NetworkParams& params);

/// {H_AE, I_AE}: Eve's average uncertainty about the key bit over her eight
/// equally available guesses, and the complementary mutual information.
std::pair<double, double> alice_eve_mutual_info(const NetworkParams& params);

/// Alternative reading that spreads the marginal uniformly over guesses
/// (each 1/4). Exposed for diagnostics only; the marginals then sum to 2
/// rather than 1, so this is not used anywhere in the analysis.
double alice_eve_entropy_uniform_marginals(const NetworkParams& params);

struct SecurityAnalysis {
  double h_ae;
  double i_ae;
  double e_ab;  // error rate within conclusive rounds
  double i_ab;
  double conclusive_rate;
};

/// One leaf of the protocol tree for a fixed Bob input: who chose what,
/// what Bob saw, and the joint probability mass of the branch.
struct RoundOutcome {
  AliceEncoding encoding;
  NetworkBasis eve_network;
  int eve_guess;                // index into the network's basis
  MeasurementBasis measurement;
  int outcome_index;
  Qubit post_state;             // Bob's post-measurement state
  double weight;                // joint mass; all leaves of one input sum to 1
  DecodeResult decode_result;
};

/// Every branch with nonzero guess weight, enumerated exactly.
std::vector<RoundOutcome> enumerate_round(ProtocolState input,
                                          const NetworkParams& params);

/// Conclusive/wrong/total probability mass for one fixed Bob input.
struct InputBreakdown {
  double total_mass;       // sums to one
  double conclusive_mass;
  double wrong_mass;
};

InputBreakdown enumerate_input(ProtocolState input, const NetworkParams& params);

/// Exhaustive enumeration over all protocol branches plus the entropy
/// quantities; fully deterministic.
SecurityAnalysis analyze(const NetworkParams& params);

/// (−2 + y² + y√(4−3y²)) / (−6 + y² + y√(4−3y²)): the error rate as an
/// explicit function of y.
double error_rate_closed_form(double y);

/// 1 − h(E_AB).
double alice_bob_mutual_info(const NetworkParams& params);

struct EveConfig {
  NetworkParams params;
  // Eve's network basis is always chosen uniformly between the two.
};

struct MonteCarloResult {
  SecurityAnalysis analysis;
  std::uint64_t rounds;
  std::uint64_t seed;
  std::uint64_t conclusive_rounds;
  double e_ab_stderr;
  double conclusive_rate_stderr;
  double h_ae_stderr;
  bool e_ab_defined;  // false when no round was conclusive
};

/// Samples i.i.d. rounds from the same measure the enumeration integrates.
/// Identical (seed, rounds, params) give bit-identical results; all
/// aggregates are assembled from per-round counters drawn via round_stream.
MonteCarloResult simulate_monte_carlo(const EveConfig& config,
                                      std::uint64_t rounds,
                                      std::uint64_t seed);

struct ThresholdResult {
  double y_star;
  double e_star;
  double i_star;
};

/// Root of I_AB(y) − I_AE(y) on (0, 1): coarse scan for a sign change, then
/// bisection to |Δy| <= tolerance. Throws (with endpoint values) if no
/// bracket is found.
ThresholdResult security_threshold(double tolerance = 1e-9);

}  // namespace qcomb
