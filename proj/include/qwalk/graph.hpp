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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/radians.hpp"

namespace qwalk {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
 * One static graph: a vertex count, undirected simple edges and a set of
 * self-loops.
 *
 * Vertex i stands for the computational basis state |i>. A self-loop is only
 * allowed on a vertex with no incident edges; construction throws
 * ValidationError otherwise. Edges are stored normalized (u < v) and sorted,
 * loops sorted, so two graphs with the same content compare equal.
 */
class Graph {
 public:
  explicit Graph(int n, std::vector<Edge> edges = {}, std::vector<Vertex> loops = {});

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& loops() const { return loops_; }

  bool has_loop(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Vertex> loops_;
};

/** Symmetric 0/1 matrix; A(v, v) = 1 exactly on self-loops. */
Eigen::MatrixXd adjacency_matrix(const Graph& g);

/**
 * Connected components under the edge relation. Each component is sorted and
 * components are ordered by their smallest vertex.
 */
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/** The component shapes the walk engine knows in closed form. */
struct ComponentKind {
  enum class Tag { kLooplessIsolated, kLoopedIsolated, kPath2, kCycle4, kOther };

  Tag tag = Tag::kOther;
  // Cycle4 only: the two non-adjacent ("opposite corner") pairs. The first
  // pair holds the smallest vertex of the component; each pair is (low, high).
  Edge antipodal_first{-1, -1};
  Edge antipodal_second{-1, -1};

  friend bool operator==(const ComponentKind&, const ComponentKind&) = default;
};

std::string to_string(ComponentKind::Tag tag);

/** Classify a connected component of g. comp need not be sorted. */
ComponentKind classify_component(const Graph& g, std::span<const Vertex> comp);

/** One static graph held for a duration. */
struct Segment {
  Graph graph;
  Radians duration;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/** A labelled cumulative time inside a schedule. */
struct Checkpoint {
  std::string label;
  Radians time;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/**
 * A dynamic graph: static graphs on a common vertex set, each evolved for its
 * duration in order.
 *
 * Invariants (checked on construction, ValidationError otherwise): every
 * duration is nonnegative, every graph has n vertices, checkpoint times are
 * nondecreasing and lie within [0, total duration].
 */
class Schedule {
 public:
  explicit Schedule(int n, std::vector<Segment> segments = {},
                    std::vector<Checkpoint> checkpoints = {});

  int n() const { return n_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }
  bool empty() const { return segments_.empty(); }

  Radians total_duration() const;

  /** This schedule followed by other. Checkpoints of other are shifted. */
  Schedule then(const Schedule& other) const;

  /** Same segments, with one more checkpoint appended. */
  Schedule with_checkpoint(std::string label, Radians time) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  int n_;
  std::vector<Segment> segments_;
  std::vector<Checkpoint> checkpoints_;
};

}  // namespace qwalk
