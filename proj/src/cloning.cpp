// Copyright 2026 The cvqsim Authors
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

#include "cvq/cloning.hpp"

#include <cmath>
#include <stdexcept>

#include "cvq/components.hpp"
#include "cvq/config.hpp"

namespace cvq {

namespace {

constexpr double kBoundTol = 1e-9;

/// 1->2 channel that injects a fresh vacuum mode in front of the input:
/// output mode 0 is the vacuum, mode 1 carries the input through.
GaussianChannel prepend_vacuum() {
  const double n0 = vacuum_noise();
  Eigen::MatrixXd transform = Eigen::MatrixXd::Zero(4, 2);
  transform.block<2, 2>(2, 0) = Eigen::Matrix2d::Identity();
  Eigen::MatrixXd noise = Eigen::MatrixXd::Zero(4, 4);
  noise(0, 0) = n0;
  noise(1, 1) = n0;
  return GaussianChannel(1, 2, std::move(transform), std::move(noise));
}

/// 1->2 stage that peels the given amplitude-squared fraction of its input
/// into output 0 and leaves the remainder on output 1, mixing with a fresh
/// vacuum. Both output couplings to the input are positive.
GaussianChannel split_off(double fraction) {
  return compose(beamsplitter(1.0 - fraction), prepend_vacuum());
}

double fitted_gain_magnitude_check(double gain) {
  if (std::abs(gain) < 1e-12) {
    throw std::invalid_argument(
        "circuit output has (near-)zero gain; equivalent noise undefined");
  }
  return gain;
}

}  // namespace

bool NoiseReport::symmetric(double tol) const {
  auto spread = [](const Eigen::VectorXd& v) {
    return v.maxCoeff() - v.minCoeff();
  };
  return spread(gain_x) <= tol && spread(gain_y) <= tol &&
         spread(noise_x) <= tol && spread(noise_y) <= tol;
}

NoiseReport NoiseReport::symmetric_unity(int outputs, double noise,
                                         double corr) {
  NoiseReport report;
  report.gain_x = Eigen::VectorXd::Ones(outputs);
  report.gain_y = Eigen::VectorXd::Ones(outputs);
  report.noise_x = Eigen::VectorXd::Constant(outputs, noise);
  report.noise_y = Eigen::VectorXd::Constant(outputs, noise);
  report.corr_x = Eigen::MatrixXd::Constant(outputs, outputs, corr);
  report.corr_y = Eigen::MatrixXd::Constant(outputs, outputs, corr);
  report.corr_x.diagonal().setZero();
  report.corr_y.diagonal().setZero();
  return report;
}

ClonerCircuit make_cloner(int copies, GaussianChannel channel,
                          std::string label) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  if (channel.in_modes() != 1 || channel.out_modes() != copies) {
    throw std::invalid_argument("cloner channel must map 1 -> copies modes");
  }
  return ClonerCircuit{copies, std::move(channel), std::move(label)};
}

ProbeEnsemble ProbeEnsemble::standard() {
  const double d = 10.0 * std::sqrt(vacuum_noise());
  return ProbeEnsemble{{Eigen::Vector2d(0, 0), Eigen::Vector2d(d, 0),
                        Eigen::Vector2d(0, d), Eigen::Vector2d(d, d)}};
}

ClonerCircuit duplicator() {
  ClonerCircuit circuit = amplifier_split_cloner(2.0, 0.5);
  circuit.label = "duplicator";
  return circuit;
}

ClonerCircuit cloner_1_to_M(int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  GaussianChannel channel = amplifier(static_cast<double>(copies));
  for (int j = 1; j < copies; ++j) {
    // Peel one unity-gain copy off the remainder; after j peels the
    // remainder carries amplitude sqrt(copies - j).
    const double fraction = 1.0 / static_cast<double>(copies - j + 1);
    GaussianChannel stage =
        (j == 1) ? split_off(fraction)
                 : tensor_product(GaussianChannel::identity(j - 1),
                                  split_off(fraction));
    channel = compose(stage, channel);
  }
  return make_cloner(copies, std::move(channel),
                     "1->" + std::to_string(copies) + " cloner");
}

ClonerCircuit amplifier_split_cloner(double gain, double transmittance) {
  if (!std::isfinite(gain) || gain < 1.0) {
    throw std::invalid_argument("amplifier gain must be >= 1");
  }
  if (!std::isfinite(transmittance) || transmittance <= 0.0 ||
      transmittance >= 1.0) {
    throw std::invalid_argument("transmittance must be in (0, 1)");
  }
  GaussianChannel channel =
      compose(split_off(transmittance), amplifier(gain));
  return make_cloner(2, std::move(channel),
                     "amplifier-split cloner (G=" + std::to_string(gain) +
                         ", t=" + std::to_string(transmittance) + ")");
}

NoiseReport equivalent_noise(const ClonerCircuit& circuit,
                             const ProbeEnsemble& probes) {
  const int m = circuit.copies;
  const auto n_probes = probes.means.size();
  if (n_probes < 3) {
    throw std::invalid_argument("probe ensemble needs at least 3 means");
  }
  const double n0 = vacuum_noise();

  // Fit each output quadrature's mean response as an affine function of the
  // probe means. Gaussian evolution is exactly linear, so the fit is exact.
  Eigen::MatrixXd design(n_probes, 3);
  Eigen::MatrixXd responses(n_probes, 2 * m);
  for (size_t p = 0; p < n_probes; ++p) {
    design(p, 0) = probes.means[p](0);
    design(p, 1) = probes.means[p](1);
    design(p, 2) = 1.0;
    responses.row(p) =
        (circuit.channel.transform() * probes.means[p] +
         circuit.channel.displacement())
            .transpose();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 3) {
    throw std::invalid_argument(
        "degenerate probe ensemble: means are collinear");
  }
  const Eigen::MatrixXd coeffs = qr.solve(responses);  // 3 x 2m

  // Output covariance for a coherent input (cov = N0 * I).
  const Eigen::MatrixXd out_cov =
      circuit.channel.transform() * n0 *
          circuit.channel.transform().transpose() +
      circuit.channel.added_noise();

  NoiseReport report;
  report.gain_x.resize(m);
  report.gain_y.resize(m);
  report.noise_x.resize(m);
  report.noise_y.resize(m);
  report.corr_x = Eigen::MatrixXd::Zero(m, m);
  report.corr_y = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const double gx = fitted_gain_magnitude_check(coeffs(0, 2 * i));
    const double gy = fitted_gain_magnitude_check(coeffs(1, 2 * i + 1));
    report.gain_x(i) = gx;
    report.gain_y(i) = gy;
    report.noise_x(i) = (out_cov(2 * i, 2 * i) / (gx * gx) - n0) / n0;
    report.noise_y(i) = (out_cov(2 * i + 1, 2 * i + 1) / (gy * gy) - n0) / n0;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      report.corr_x(i, j) = (out_cov(2 * i, 2 * j) -
                             report.gain_x(i) * report.gain_x(j) * n0) /
                            n0;
      report.corr_y(i, j) = (out_cov(2 * i + 1, 2 * j + 1) -
                             report.gain_y(i) * report.gain_y(j) * n0) /
                            n0;
    }
  }
  if (report.noise_x.minCoeff() < -1e-10 ||
      report.noise_y.minCoeff() < -1e-10) {
    throw std::runtime_error(
        "negative equivalent noise from a physical circuit");
  }
  return report;
}

BoundCheck check_duplication_bound(const NoiseReport& report) {
  if (report.outputs() != 2) {
    throw std::invalid_argument(
        "duplication bound check needs exactly 2 outputs");
  }
  const double p1 = report.noise_x(0) * report.noise_y(1);
  const double p2 = report.noise_x(1) * report.noise_y(0);
  const double margin = std::min(p1, p2) - 1.0;
  return {p1 >= 1.0 - kBoundTol && p2 >= 1.0 - kBoundTol, margin};
}

BoundCheck check_1_to_M_bound(const NoiseReport& report, int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  if (report.outputs() != copies) {
    throw std::invalid_argument("report outputs disagree with copies");
  }
  if (!report.symmetric()) {
    throw std::invalid_argument(
        "1->M bound assumes a symmetric report across outputs");
  }
  const double m = static_cast<double>(copies);
  const double bound = std::pow(2.0 * (m - 1.0) / m, 2);
  const double product = report.noise_x.mean() * report.noise_y.mean();
  return {product >= bound * (1.0 - kBoundTol) - kBoundTol,
          product - bound};
}

}  // namespace cvq
