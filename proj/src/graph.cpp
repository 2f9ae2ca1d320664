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

#include "qwalk/graph.hpp"

#include <algorithm>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

std::string vertex_range_message(Vertex v, int n) {
  return "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<Vertex> loops)
    : n_(n), edges_(std::move(edges)), loops_(std::move(loops)) {
  if (n_ <= 0) throw ValidationError("graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u < 0 || u >= n_) throw ValidationError(vertex_range_message(u, n_));
    if (v < 0 || v >= n_) throw ValidationError(vertex_range_message(v, n_));
    if (u == v) {
      throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " joins a vertex to itself; use a loop");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw ValidationError("duplicate edge " + std::to_string(dup->first) + "-" +
                          std::to_string(dup->second));
  }

  std::sort(loops_.begin(), loops_.end());
  if (auto dup = std::adjacent_find(loops_.begin(), loops_.end()); dup != loops_.end()) {
    throw ValidationError("duplicate loop on vertex " + std::to_string(*dup));
  }
  for (Vertex v : loops_) {
    if (v < 0 || v >= n_) throw ValidationError(vertex_range_message(v, n_));
    if (degree(v) != 0) {
      throw ValidationError("vertex " + std::to_string(v) +
                            " has both a loop and incident edges");
    }
  }
}

bool Graph::has_loop(Vertex v) const {
  return std::binary_search(loops_.begin(), loops_.end(), v);
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
    return e.first == v || e.second == v;
  }));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  for (Vertex v : g.loops()) a(v, v) = 1.0;
  return a;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  // Union-find with path halving; the root of each set is its smallest vertex.
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [u, v] : g.edges()) {
    Vertex ru = find(u);
    Vertex rv = find(v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }

  std::vector<std::vector<Vertex>> comps;
  std::vector<int> slot(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    Vertex r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

std::string to_string(ComponentKind::Tag tag) {
  switch (tag) {
    case ComponentKind::Tag::kLooplessIsolated:
      return "LooplessIsolated";
    case ComponentKind::Tag::kLoopedIsolated:
      return "LoopedIsolated";
    case ComponentKind::Tag::kPath2:
      return "Path2";
    case ComponentKind::Tag::kCycle4:
      return "Cycle4";
    case ComponentKind::Tag::kOther:
      return "Other";
  }
  return "Other";
}

ComponentKind classify_component(const Graph& g, std::span<const Vertex> comp) {
  using Tag = ComponentKind::Tag;
  ComponentKind kind;
  bool any_loop = std::any_of(comp.begin(), comp.end(),
                              [&g](Vertex v) { return g.has_loop(v); });

  if (comp.size() == 1) {
    kind.tag = any_loop ? Tag::kLoopedIsolated : Tag::kLooplessIsolated;
    return kind;
  }
  if (any_loop) return kind;

  if (comp.size() == 2 && g.adjacent(comp[0], comp[1])) {
    kind.tag = Tag::kPath2;
    return kind;
  }

  if (comp.size() == 4 &&
      std::all_of(comp.begin(), comp.end(), [&g](Vertex v) { return g.degree(v) == 2; })) {
    std::vector<Vertex> sorted(comp.begin(), comp.end());
    std::sort(sorted.begin(), sorted.end());
    Vertex first = sorted[0];
    Vertex opposite = -1;
    for (Vertex v : std::span(sorted).subspan(1)) {
      if (!g.adjacent(first, v)) opposite = v;
    }
    if (opposite < 0) return kind;
    std::vector<Vertex> rest;
    for (Vertex v : std::span(sorted).subspan(1)) {
      if (v != opposite) rest.push_back(v);
    }
    if (g.adjacent(rest[0], rest[1])) return kind;
    kind.tag = Tag::kCycle4;
    kind.antipodal_first = {first, opposite};
    kind.antipodal_second = {rest[0], rest[1]};
    return kind;
  }
  return kind;
}

Schedule::Schedule(int n, std::vector<Segment> segments, std::vector<Checkpoint> checkpoints)
    : n_(n), segments_(std::move(segments)), checkpoints_(std::move(checkpoints)) {
  if (n_ <= 0) throw ValidationError("schedule needs at least one vertex");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& seg = segments_[i];
    if (seg.graph.n() != n_) {
      throw ValidationError("segment " + std::to_string(i + 1) + " has " +
                            std::to_string(seg.graph.n()) + " vertices, expected " +
                            std::to_string(n_));
    }
    if (seg.duration.is_negative()) {
      throw ValidationError("segment " + std::to_string(i + 1) + " has negative duration");
    }
  }
  Radians total = total_duration();
  Radians previous;
  for (const auto& cp : checkpoints_) {
    if (cp.time.is_negative()) throw ValidationError("checkpoint '" + cp.label + "' is negative");
    if (Radians::compare(cp.time, previous) < 0) {
      throw ValidationError("checkpoint '" + cp.label + "' goes back in time");
    }
    // Inexact totals get a little slack; exact ones must fit exactly.
    bool past_end = (cp.time.exact() && total.exact())
                        ? Radians::compare(cp.time, total) > 0
                        : cp.time.value() > total.value() + 1e-12;
    if (past_end) {
      throw ValidationError("checkpoint '" + cp.label + "' lies beyond the schedule end " +
                            total.to_string());
    }
    previous = cp.time;
  }
}

Radians Schedule::total_duration() const {
  Radians total;
  for (const auto& seg : segments_) total += seg.duration;
  return total;
}

Schedule Schedule::then(const Schedule& other) const {
  if (other.n_ != n_) {
    throw ValidationError("cannot concatenate schedules on " + std::to_string(n_) + " and " +
                          std::to_string(other.n_) + " vertices");
  }
  std::vector<Segment> segs = segments_;
  segs.insert(segs.end(), other.segments_.begin(), other.segments_.end());
  std::vector<Checkpoint> cps = checkpoints_;
  Radians offset = total_duration();
  for (const auto& cp : other.checkpoints_) cps.push_back({cp.label, offset + cp.time});
  return Schedule(n_, std::move(segs), std::move(cps));
}

Schedule Schedule::with_checkpoint(std::string label, Radians time) const {
  auto cps = checkpoints_;
  cps.push_back({std::move(label), time});
  return Schedule(n_, segments_, std::move(cps));
}

}  // namespace qwalk
