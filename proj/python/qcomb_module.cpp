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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcomb/biqkd.hpp"
#include "qcomb/checks.hpp"
#include "qcomb/tradeoff.hpp"

namespace py = pybind11;

namespace {

using Matrix = std::vector<std::vector<qcomb::Complex>>;

Matrix to_nested(const qcomb::ComplexMatrix& m) {
  Matrix out(m.rows(), std::vector<qcomb::Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

qcomb::ComplexMatrix from_nested(const Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  qcomb::ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m[i][j];
  }
  return out;
}

const qcomb::UnitaryBasis& basis_by_name(const std::string& name) {
  if (name == "standard") return qcomb::standard_basis();
  if (name == "muub") return qcomb::muub_basis();
  throw std::invalid_argument("unknown basis: " + name);
}

qcomb::Tester build_network(const std::string& kind, const std::string& basis,
                            double y) {
  qcomb::NetworkKind network_kind;
  if (kind == "projective") {
    network_kind = qcomb::NetworkKind::kProjective;
  } else if (kind == "optimal") {
    network_kind = qcomb::NetworkKind::kOptimalI;
  } else {
    throw std::invalid_argument("unknown network kind: " + kind);
  }
  return qcomb::make_network(network_kind, basis_by_name(basis),
                             qcomb::NetworkParams::from_y(y));
}

py::dict analysis_dict(const qcomb::SecurityAnalysis& analysis) {
  py::dict out;
  out["H_AE"] = analysis.h_ae;
  out["I_AE"] = analysis.i_ae;
  out["E_AB"] = analysis.e_ab;
  out["I_AB"] = analysis.i_ab;
  out["conclusive_rate"] = analysis.conclusive_rate;
  return out;
}

}  // namespace

PYBIND11_MODULE(_qcomb, m) {
  m.doc() =
      "Finite-outcome 2-tester networks, the information-disturbance "
      "tradeoff, and two-way QKD security analysis";

  m.def(
      "basis_elements",
      [](const std::string& name) {
        std::vector<Matrix> out;
        for (const auto& e : basis_by_name(name).elements)
          out.push_back(to_nested(e));
        return out;
      },
      py::arg("name"), "Elements of the 'standard' or 'muub' unitary basis");

  m.def(
      "decompose",
      [](const Matrix& p, const std::string& basis) {
        const auto dec = qcomb::decompose(from_nested(p), basis_by_name(basis));
        return std::vector<qcomb::Complex>(dec.coefficients.begin(),
                                           dec.coefficients.end());
      },
      py::arg("matrix"), py::arg("basis") = "standard",
      "Coefficients a_j with P = sum_j a_j U_j");

  m.def(
      "is_mutually_unbiased",
      [](const std::string& a, const std::string& b) {
        const auto report =
            qcomb::is_mutually_unbiased(basis_by_name(a), basis_by_name(b));
        return py::make_tuple(report.mutually_unbiased, report.max_residual);
      },
      py::arg("a"), py::arg("b"),
      "(flag, worst | |Tr[A†B]|² − 1 |) for the two named bases");

  m.def(
      "haar_random_su2",
      [](std::uint64_t seed) {
        qcomb::SplitMix64 rng(seed);
        return to_nested(qcomb::haar_random_su2(rng));
      },
      py::arg("seed"), "One Haar-distributed SU(2) element");

  m.def(
      "x_from_y",
      [](double y) { return qcomb::NetworkParams::from_y(y).x(); },
      py::arg("y"), "Nonnegative solution of x² + xy + y² = 1");

  m.def(
      "validate_network",
      [](const std::string& kind, const std::string& basis, double y) {
        const auto report = qcomb::validate_tester(build_network(kind, basis, y));
        py::dict out;
        out["min_eigenvalue"] = report.min_eigenvalue;
        out["chain_residual"] = report.chain_residual;
        out["marginal_residual"] = report.marginal_residual;
        out["trace_residual"] = report.trace_residual;
        out["pass"] = report.pass();
        return out;
      },
      py::arg("kind"), py::arg("basis") = "standard", py::arg("y") = 0.0,
      "Causal-normalization residuals of the projective or optimal network");

  m.def(
      "outcome_probabilities",
      [](const std::string& kind, const std::string& basis, double y,
         const Matrix& p) {
        return qcomb::outcome_probabilities(build_network(kind, basis, y),
                                            from_nested(p));
      },
      py::arg("kind"), py::arg("basis"), py::arg("y"), py::arg("p"),
      "Guess distribution of the network when testing the unitary p");

  m.def(
      "closed_form_metrics",
      [](double y) {
        const auto metrics =
            qcomb::closed_form_metrics(qcomb::NetworkParams::from_y(y));
        py::dict out;
        out["gain_optimal"] = metrics.gain_optimal;
        out["fidelity_optimal"] = metrics.fidelity_optimal;
        out["gain_projective"] = metrics.gain_projective;
        out["fidelity_projective"] = metrics.fidelity_projective;
        return out;
      },
      py::arg("y"), "Average gain and fidelity in closed form");

  m.def(
      "info_disturbance",
      [](double y) {
        const auto point =
            qcomb::info_disturbance(qcomb::NetworkParams::from_y(y));
        py::dict out;
        out["y"] = point.y;
        out["x"] = point.x;
        out["I"] = point.information;
        out["D"] = point.disturbance;
        out["residual"] = point.residual;
        return out;
      },
      py::arg("y"), "One point of the information-disturbance curve");

  m.def(
      "tradeoff_curve",
      [](std::size_t samples) {
        std::vector<std::array<double, 5>> rows;
        for (const auto& point : qcomb::tradeoff_curve(samples)) {
          rows.push_back({point.y, point.x, point.information,
                          point.disturbance, point.residual});
        }
        return rows;
      },
      py::arg("samples") = 1001,
      "Rows (y, x, I, D, residual) ordered by descending y");

  m.def("binary_entropy", &qcomb::binary_entropy, py::arg("p"));

  m.def(
      "analyze",
      [](double y) {
        return analysis_dict(qcomb::analyze(qcomb::NetworkParams::from_y(y)));
      },
      py::arg("y"), "Exact protocol analysis under the attack at parameter y");

  m.def(
      "simulate",
      [](double y, std::uint64_t rounds, std::uint64_t seed) {
        const auto mc = qcomb::simulate_monte_carlo(
            qcomb::EveConfig{qcomb::NetworkParams::from_y(y)}, rounds, seed);
        py::dict out = analysis_dict(mc.analysis);
        out["rounds"] = mc.rounds;
        out["seed"] = mc.seed;
        out["conclusive_rounds"] = mc.conclusive_rounds;
        out["E_AB_stderr"] = mc.e_ab_stderr;
        out["conclusive_rate_stderr"] = mc.conclusive_rate_stderr;
        out["H_AE_stderr"] = mc.h_ae_stderr;
        out["E_AB_defined"] = mc.e_ab_defined;
        return out;
      },
      py::arg("y"), py::arg("rounds") = 1000000, py::arg("seed") = 1,
      "Monte Carlo protocol simulation; bit-identical under a fixed seed");

  m.def(
      "security_threshold",
      [](double tolerance) {
        const auto threshold = qcomb::security_threshold(tolerance);
        py::dict out;
        out["y_star"] = threshold.y_star;
        out["E_star"] = threshold.e_star;
        out["I_star"] = threshold.i_star;
        return out;
      },
      py::arg("tolerance") = 1e-9,
      "Error rate at which the two mutual informations cross");

  m.def(
      "run_reference_checks",
      [](std::uint64_t rounds, std::uint64_t seed) {
        qcomb::CheckOptions options;
        options.monte_carlo_rounds = rounds;
        options.seed = seed;
        py::list out;
        for (const auto& row : qcomb::run_reference_checks(options)) {
          py::dict d;
          d["group"] = row.group;
          d["name"] = row.name;
          d["expected"] = row.expected;
          d["computed"] = row.computed;
          d["tolerance"] = row.tolerance;
          d["pass"] = row.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("rounds") = 1000000, py::arg("seed") = 1,
      "Recompute the built-in table of reference values");
}
