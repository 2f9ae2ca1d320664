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

#pragma once

#include <Eigen/Dense>

namespace qwalk {

/** A = vectors * diag(values) * vectors^T with orthogonal vectors. */
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  int sweeps = 0;
};

/**
 * Cyclic Jacobi eigendecomposition of a real symmetric matrix.
 *
 * Sweeps over all off-diagonal pairs until the off-diagonal mass is below
 * machine precision relative to the Frobenius norm. Intended for the small
 * (tens of rows) matrices a single graph component produces.
 * Throws ContractViolation if a is not square and exactly symmetric.
 */
SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& a);

/** Frobenius norm of A*Q - Q*diag(lambda). */
double eigen_residual(const Eigen::MatrixXd& a, const SymmetricEigen& eig);

}  // namespace qwalk
