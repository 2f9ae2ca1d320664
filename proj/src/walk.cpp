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

#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr Complex kI{0.0, 1.0};

std::size_t expected_length(ComponentKind::Tag tag) {
  switch (tag) {
    case ComponentKind::Tag::kLooplessIsolated:
    case ComponentKind::Tag::kLoopedIsolated:
      return 1;
    case ComponentKind::Tag::kPath2:
      return 2;
    case ComponentKind::Tag::kCycle4:
      return 4;
    case ComponentKind::Tag::kOther:
      break;
  }
  throw ContractViolation("no closed form for a component of kind Other");
}

void check_drift(double before, double after) {
  if (std::abs(after - before) > kNormDriftLimit) {
    throw EngineError("norm drifted from " + std::to_string(before) + " to " +
                      std::to_string(after) + " in one segment");
  }
}

// Local vertex order handed to evolve_closed_form for a component.
std::vector<Vertex> closed_form_order(const ComponentKind& kind, std::vector<Vertex> comp) {
  if (kind.tag == ComponentKind::Tag::kCycle4) {
    return {kind.antipodal_first.first, kind.antipodal_second.first,
            kind.antipodal_second.second, kind.antipodal_first.second};
  }
  return comp;
}

double time_tolerance(double total) { return 1e-12 * std::max(1.0, total); }

}  // namespace

StateVector::StateVector(Amplitudes amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw ArgumentError("state needs at least one amplitude");
  double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    throw ArgumentError("state norm is " + std::to_string(norm) + ", expected 1");
  }
}

StateVector StateVector::basis(int n, int index) {
  if (n <= 0 || index < 0 || index >= n) {
    throw ArgumentError("basis index " + std::to_string(index) + " out of range for " +
                        std::to_string(n) + " vertices");
  }
  Amplitudes a = Amplitudes::Zero(n);
  a[index] = 1.0;
  return StateVector(std::move(a));
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

Amplitudes evolve_closed_form(const ComponentKind& kind, const Amplitudes& amps, double t) {
  const std::size_t len = expected_length(kind.tag);
  if (static_cast<std::size_t>(amps.size()) != len) {
    throw ContractViolation(to_string(kind.tag) + " expects " + std::to_string(len) +
                            " amplitudes, got " + std::to_string(amps.size()));
  }
  Amplitudes out(amps.size());
  switch (kind.tag) {
    case ComponentKind::Tag::kLooplessIsolated:
      out = amps;
      break;
    case ComponentKind::Tag::kLoopedIsolated:
      out[0] = std::exp(-kI * t) * amps[0];
      break;
    case ComponentKind::Tag::kPath2: {
      const double c = std::cos(t);
      const double s = std::sin(t);
      out[0] = amps[0] * c - kI * amps[1] * s;
      out[1] = amps[1] * c - kI * amps[0] * s;
      break;
    }
    case ComponentKind::Tag::kCycle4: {
      // Positions 0 and 3 are opposite corners, as are 1 and 2.
      const double c = std::cos(2.0 * t);
      const double s = std::sin(2.0 * t);
      const Complex outer = amps[0] + amps[3];
      const Complex inner = amps[1] + amps[2];
      out[0] = 0.5 * (amps[0] - amps[3] + outer * c - kI * inner * s);
      out[1] = 0.5 * (amps[1] - amps[2] + inner * c - kI * outer * s);
      out[2] = 0.5 * (amps[2] - amps[1] + inner * c - kI * outer * s);
      out[3] = 0.5 * (amps[3] - amps[0] + outer * c - kI * inner * s);
      break;
    }
    case ComponentKind::Tag::kOther:
      break;
  }
  return out;
}

namespace {

Amplitudes apply_spectral(const SymmetricEigen& eig, const Amplitudes& amps, double t) {
  Amplitudes coeffs = eig.vectors.transpose().cast<Complex>() * amps;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs[k] *= std::exp(-kI * (eig.values[k] * t));
  }
  return eig.vectors.cast<Complex>() * coeffs;
}

}  // namespace

Amplitudes evolve_generic(const Eigen::MatrixXd& a, const Amplitudes& amps, double t) {
  if (a.rows() != amps.size()) {
    throw ContractViolation("matrix has " + std::to_string(a.rows()) + " rows but state has " +
                            std::to_string(amps.size()) + " amplitudes");
  }
  return apply_spectral(jacobi_eigen(a), amps, t);
}

SegmentPropagator::SegmentPropagator(const Graph& g) : n_(g.n()) {
  for (auto& comp : connected_components(g)) {
    Block block;
    block.kind = classify_component(g, comp);
    if (block.kind.tag == ComponentKind::Tag::kOther) {
      const Eigen::MatrixXd full = adjacency_matrix(g);
      const auto m = static_cast<Eigen::Index>(comp.size());
      Eigen::MatrixXd sub(m, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) sub(i, j) = full(comp[i], comp[j]);
      }
      block.eig = jacobi_eigen(sub);
      block.order = std::move(comp);
    } else {
      block.order = closed_form_order(block.kind, std::move(comp));
    }
    blocks_.push_back(std::move(block));
  }
}

Amplitudes SegmentPropagator::apply(const Amplitudes& amps, double t) const {
  if (amps.size() != n_) {
    throw ContractViolation("graph has " + std::to_string(n_) + " vertices but state has " +
                            std::to_string(amps.size()) + " amplitudes");
  }
  Amplitudes out(amps.size());
  for (const auto& block : blocks_) {
    const auto m = static_cast<Eigen::Index>(block.order.size());
    if (block.kind.tag == ComponentKind::Tag::kLooplessIsolated) {
      out[block.order[0]] = amps[block.order[0]];
      continue;
    }
    Amplitudes local(m);
    for (Eigen::Index i = 0; i < m; ++i) local[i] = amps[block.order[i]];
    Amplitudes evolved = block.kind.tag == ComponentKind::Tag::kOther
                             ? apply_spectral(block.eig, local, t)
                             : evolve_closed_form(block.kind, local, t);
    for (Eigen::Index i = 0; i < m; ++i) out[block.order[i]] = evolved[i];
  }
  return out;
}

StateVector SegmentPropagator::apply(const StateVector& state, double t) const {
  Amplitudes out = apply(state.amplitudes(), t);
  check_drift(state.amplitudes().norm(), out.norm());
  return StateVector(std::move(out), StateVector::Unchecked{});
}

StateVector evolve_segment(const Graph& g, const StateVector& state, double t) {
  return SegmentPropagator(g).apply(state, t);
}

StateVector evolve_schedule(const Schedule& s, const StateVector& state) {
  if (state.size() != s.n()) {
    throw ContractViolation("schedule has " + std::to_string(s.n()) + " vertices but state has " +
                            std::to_string(state.size()) + " amplitudes");
  }
  StateVector current = state;
  for (const auto& seg : s.segments()) {
    current = SegmentPropagator(seg.graph).apply(current, seg.duration.value());
  }
  return current;
}

std::vector<StateVector> sample_schedule(const Schedule& s, const StateVector& state,
                                         std::span<const double> times) {
  if (state.size() != s.n()) {
    throw ContractViolation("schedule has " + std::to_string(s.n()) + " vertices but state has " +
                            std::to_string(state.size()) + " amplitudes");
  }
  const auto& segs = s.segments();
  const double total = s.total_duration().value();
  const double tol = time_tolerance(total);

  // Segment ends from exact prefix sums, so they match checkpoint times bitwise.
  std::vector<double> ends;
  Radians prefix;
  for (const auto& seg : segs) {
    prefix += seg.duration;
    ends.push_back(prefix.value());
  }

  std::vector<StateVector> out;
  out.reserve(times.size());
  std::size_t seg = 0;
  double start = 0.0;
  StateVector current = state;
  std::optional<SegmentPropagator> prop;
  double previous = -1.0;
  for (double t : times) {
    if (t < -tol || t > total + tol) {
      throw ArgumentError("sample time " + std::to_string(t) + " outside [0, " +
                          std::to_string(total) + "]");
    }
    if (t < previous) throw ArgumentError("sample times must be sorted");
    previous = t;
    while (seg < segs.size() && t >= ends[seg] - tol) {
      if (!prop) prop.emplace(segs[seg].graph);
      current = prop->apply(current, segs[seg].duration.value());
      prop.reset();
      start = ends[seg];
      ++seg;
    }
    if (seg == segs.size() || std::abs(t - start) <= tol) {
      out.push_back(current);
      continue;
    }
    if (!prop) prop.emplace(segs[seg].graph);
    const double local = std::clamp(t - start, 0.0, segs[seg].duration.value());
    out.push_back(prop->apply(current, local));
  }
  return out;
}

std::vector<double> trace_times(const Schedule& s, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ArgumentError("trace step must be positive, got " + std::to_string(dt));
  }
  const double total = s.total_duration().value();
  const double tol = time_tolerance(total);

  // (time, is_grid): exact boundary and checkpoint times win over grid points.
  std::vector<std::pair<double, bool>> raw;
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t > total + tol) break;
    raw.emplace_back(std::min(t, total), true);
  }
  raw.emplace_back(0.0, false);
  Radians prefix;
  for (const auto& seg : s.segments()) {
    prefix += seg.duration;
    raw.emplace_back(prefix.value(), false);
  }
  for (const auto& cp : s.checkpoints()) raw.emplace_back(cp.time.value(), false);
  std::sort(raw.begin(), raw.end());

  std::vector<std::pair<double, bool>> merged;
  for (const auto& entry : raw) {
    if (!merged.empty() && entry.first - merged.back().first <= tol) {
      if (merged.back().second && !entry.second) merged.back() = entry;
      continue;
    }
    merged.push_back(entry);
  }
  std::vector<double> times;
  times.reserve(merged.size());
  for (const auto& [t, grid] : merged) times.push_back(t);
  return times;
}

WalkTrace trace_schedule(const Schedule& s, const StateVector& state, double dt) {
  std::vector<double> times = trace_times(s, dt);
  std::vector<StateVector> states = sample_schedule(s, state, times);
  WalkTrace trace{std::move(times), {}, states.back()};
  trace.probabilities.reserve(states.size());
  for (const auto& st : states) trace.probabilities.push_back(st.probabilities());
  return trace;
}

}  // namespace qwalk
