// Copyright 2026 The qwalk Authors
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

#include "qwalk/jacobi.hpp"

#include <cmath>
#include <limits>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw ContractViolation("eigensolver needs a square matrix");
  if (a != a.transpose()) throw ContractViolation("eigensolver needs a symmetric matrix");

  const Eigen::Index n = a.rows();
  Eigen::MatrixXd work = a;
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
  const double scale = a.norm();
  const double stop = std::numeric_limits<double>::epsilon() * scale;

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(work) <= stop) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index r = p + 1; r < n; ++r) {
        const double apr = work(p, r);
        if (apr == 0.0) continue;
        // Rotation angle that annihilates work(p, r).
        const double tau = (work(r, r) - work(p, p)) / (2.0 * apr);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (Eigen::Index k = 0; k < n; ++k) {
          const double wkp = work(k, p);
          const double wkr = work(k, r);
          work(k, p) = c * wkp - s * wkr;
          work(k, r) = s * wkp + c * wkr;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double wpk = work(p, k);
          const double wrk = work(r, k);
          work(p, k) = c * wpk - s * wrk;
          work(r, k) = s * wpk + c * wrk;
        }
        work(p, r) = 0.0;
        work(r, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double qkp = q(k, p);
          const double qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }

  SymmetricEigen out;
  out.values = work.diagonal();
  out.vectors = std::move(q);
  out.sweeps = sweep;
  return out;
}

double eigen_residual(const Eigen::MatrixXd& a, const SymmetricEigen& eig) {
  return (a * eig.vectors - eig.vectors * eig.values.asDiagonal()).norm();
}

}  // namespace qwalk
