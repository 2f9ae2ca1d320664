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
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/jacobi.hpp"

namespace qwalk {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;

/** Default sampling step for traces; resolves a pi/4 segment with 25 samples. */
inline constexpr double kDefaultTraceStep = std::numbers::pi / 100.0;

/** Maximum tolerated change in norm across one segment before EngineError. */
inline constexpr double kNormDriftLimit = 1e-10;

/**
 * A walker state: one complex amplitude per vertex, unit norm.
 *
 * The public constructor requires the norm to be 1 within 1e-12.
 */
class StateVector {
 public:
  explicit StateVector(Amplitudes amplitudes);

  static StateVector basis(int n, int index);

  const Amplitudes& amplitudes() const { return amplitudes_; }
  int size() const { return static_cast<int>(amplitudes_.size()); }
  Complex operator[](int i) const { return amplitudes_[i]; }
  std::vector<double> probabilities() const;

 private:
  struct Unchecked {};
  StateVector(Amplitudes amplitudes, Unchecked) : amplitudes_(std::move(amplitudes)) {}

  friend StateVector evolve_segment(const Graph&, const StateVector&, double);
  friend class SegmentPropagator;
  friend StateVector evolve_schedule(const Schedule&, const StateVector&);

  Amplitudes amplitudes_;
};

/**
 * Closed-form evolution of one recognised component.
 *
 * amps has length 1 for isolated vertices, 2 for Path2 and 4 for Cycle4. For
 * Cycle4 the order is (first.low, second.low, second.high, first.high) of the
 * antipodal pairs, i.e. opposite corners sit at positions 0/3 and 1/2.
 * Throws ContractViolation on a length mismatch or for Tag::kOther.
 */
Amplitudes evolve_closed_form(const ComponentKind& kind, const Amplitudes& amps, double t);

/**
 * exp(-iAt) amps through the spectral decomposition of a real symmetric A.
 * Throws ContractViolation if A is not symmetric or the sizes differ.
 */
Amplitudes evolve_generic(const Eigen::MatrixXd& a, const Amplitudes& amps, double t);

/**
 * Precomputed evolution under one static graph: its components, their kinds,
 * and an eigendecomposition for every component without a closed form.
 * apply() can then be evaluated at any number of times.
 */
class SegmentPropagator {
 public:
  explicit SegmentPropagator(const Graph& g);

  Amplitudes apply(const Amplitudes& amps, double t) const;
  StateVector apply(const StateVector& state, double t) const;

  int n() const { return n_; }

 private:
  struct Block {
    std::vector<Vertex> order;  // vertex per local index
    ComponentKind kind;
    SymmetricEigen eig;         // only for Tag::kOther
  };

  int n_;
  std::vector<Block> blocks_;
};

/**
 * Evolve state under g for time t. Recognised components use the closed
 * forms, everything else the spectral route. No renormalisation is applied;
 * a norm change above kNormDriftLimit throws EngineError.
 */
StateVector evolve_segment(const Graph& g, const StateVector& state, double t);

/** Apply every segment in order. */
StateVector evolve_schedule(const Schedule& s, const StateVector& state);

/**
 * States at the given cumulative times (must be sorted, within [0, total]).
 * Each sample evolves from the start of its enclosing segment.
 */
std::vector<StateVector> sample_schedule(const Schedule& s, const StateVector& state,
                                         std::span<const double> times);

struct WalkTrace {
  std::vector<double> times;
  std::vector<std::vector<double>> probabilities;
  StateVector final_state;
};

/**
 * Probabilities at t = 0, dt, 2dt, ... and additionally at every segment
 * boundary and checkpoint. Throws ArgumentError unless dt > 0.
 */
WalkTrace trace_schedule(const Schedule& s, const StateVector& state,
                         double dt = kDefaultTraceStep);

/** The cumulative sample times trace_schedule would use. */
std::vector<double> trace_times(const Schedule& s, double dt);

}  // namespace qwalk
