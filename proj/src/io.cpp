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

#include "qwalk/io.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    pos = s.find_first_not_of(seps, pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = s.find_first_of(seps, pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

// Non-empty lines with comments stripped, tokenised on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split(raw, " \t\r");
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

int expect_int(const Line& line, std::size_t index, std::string_view what) {
  if (index >= line.tokens.size()) {
    throw ParseError(line.number, "missing " + std::string(what));
  }
  auto v = to_int(line.tokens[index]);
  if (!v) {
    throw ParseError(line.number, "expected integer " + std::string(what) + ", got '" +
                                      std::string(line.tokens[index]) + "'");
  }
  return *v;
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "'" + std::string(line.tokens[0]) + "' takes " +
                                      std::to_string(count - 1) + " argument(s), got " +
                                      std::to_string(line.tokens.size() - 1));
  }
}

const std::map<std::string_view, GateKind>& single_qubit_mnemonics() {
  static const std::map<std::string_view, GateKind> table = {
      {"x", GateKind::kX}, {"y", GateKind::kY},    {"z", GateKind::kZ},
      {"i", GateKind::kI}, {"h", GateKind::kH},    {"halt", GateKind::kHAlt},
      {"t", GateKind::kT}, {"s", GateKind::kS},
  };
  return table;
}

bool is_single_qubit_mnemonic(std::string_view head) {
  return single_qubit_mnemonics().contains(head) ||
         (head.starts_with("phase(") && head.ends_with(")"));
}

}  // namespace

GateOp parse_single_qubit_gate(std::string_view mnemonic, int qubit) {
  if (auto it = single_qubit_mnemonics().find(mnemonic); it != single_qubit_mnemonics().end()) {
    return GateOp::single(it->second, qubit);
  }
  if (mnemonic.starts_with("phase(") && mnemonic.ends_with(")")) {
    auto angle = Radians::parse(mnemonic.substr(6, mnemonic.size() - 7));
    if (!angle) throw ArgumentError("malformed phase angle in '" + std::string(mnemonic) + "'");
    return GateOp::phase(*angle, qubit);
  }
  throw ArgumentError("unknown mnemonic '" + std::string(mnemonic) + "'");
}

std::string format_real(double v, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(digits);
  os << v;
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool have_header = false;
  for (const auto& line : tokenize(text)) {
    const std::string_view head = line.tokens[0];
    if (head == "qubits") {
      if (have_header) throw ParseError(line.number, "duplicate 'qubits' header");
      expect_arity(line, 2);
      circuit.n_qubits = expect_int(line, 1, "qubit count");
      if (circuit.n_qubits < 1 || circuit.n_qubits > kMaxQubits) {
        throw ParseError(line.number, "qubit count must lie in [1, " + std::to_string(kMaxQubits) + "]");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line.number, "expected 'qubits <n>' before '" + std::string(head) + "'");

    if (head == "layer") {
      expect_arity(line, 1);
      circuit.layer_marks.push_back(circuit.ops.size());
      continue;
    }

    GateOp op;
    if (is_single_qubit_mnemonic(head)) {
      expect_arity(line, 2);
      try {
        op = parse_single_qubit_gate(head, expect_int(line, 1, "qubit"));
      } catch (const ArgumentError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (head == "cnot") {
      expect_arity(line, 3);
      op = GateOp::cnot(expect_int(line, 1, "control"), expect_int(line, 2, "target"));
    } else if (head == "toffoli") {
      expect_arity(line, 4);
      op = GateOp::toffoli(expect_int(line, 1, "control"), expect_int(line, 2, "control"),
                           expect_int(line, 3, "target"));
    } else {
      throw ParseError(line.number, "unknown mnemonic '" + std::string(head) + "'");
    }
    try {
      validate_gate(op, circuit.n_qubits);
    } catch (const ArgumentError& e) {
      throw ParseError(line.number, e.what());
    }
    circuit.ops.push_back(std::move(op));
  }
  if (!have_header) throw ParseError(1, "missing 'qubits <n>' header");
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream os;
  os << "qubits " << circuit.n_qubits << '\n';
  std::size_t mark = 0;
  auto flush_marks = [&](std::size_t position) {
    while (mark < circuit.layer_marks.size() && circuit.layer_marks[mark] == position) {
      os << "layer\n";
      ++mark;
    }
  };
  for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
    flush_marks(i);
    const auto& op = circuit.ops[i];
    if (op.kind == GateKind::kPhase) {
      os << "phase(" << op.theta.to_string() << ")";
    } else {
      os << mnemonic(op.kind);
    }
    for (int q : op.qubits) os << ' ' << q;
    os << '\n';
  }
  flush_marks(circuit.ops.size());
  return os.str();
}

Schedule parse_schedule(std::string_view text) {
  std::optional<int> n;
  std::vector<Segment> segments;
  std::vector<std::pair<Checkpoint, int>> checkpoints;

  // Open segment state.
  bool in_segment = false;
  int segment_line = 0;
  Radians duration;
  std::vector<Edge> edges;
  std::vector<Vertex> loops;
  std::set<Vertex> touched;
  std::set<Vertex> looped;

  auto vertex = [&](const Line& line, std::size_t index) {
    int v = expect_int(line, index, "vertex");
    if (v < 0 || v >= *n) {
      throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range [0, " +
                                        std::to_string(*n) + ")");
    }
    return v;
  };

  int last_line = 1;
  for (const auto& line : tokenize(text)) {
    last_line = line.number;
    const std::string_view head = line.tokens[0];
    if (head == "vertices") {
      if (n) throw ParseError(line.number, "duplicate 'vertices' header");
      expect_arity(line, 2);
      n = expect_int(line, 1, "vertex count");
      if (*n < 1) throw ParseError(line.number, "vertex count must be positive");
      continue;
    }
    if (!n) throw ParseError(line.number, "expected 'vertices <n>' before '" + std::string(head) + "'");

    if (head == "segment") {
      if (in_segment) throw ParseError(line.number, "'segment' inside an open segment; missing 'end'");
      expect_arity(line, 2);
      auto d = Radians::parse(line.tokens[1]);
      if (!d) throw ParseError(line.number, "malformed duration '" + std::string(line.tokens[1]) + "'");
      if (d->is_negative()) throw ParseError(line.number, "negative duration");
      in_segment = true;
      segment_line = line.number;
      duration = *d;
      edges.clear();
      loops.clear();
      touched.clear();
      looped.clear();
    } else if (head == "edge" || head == "loop") {
      if (!in_segment) throw ParseError(line.number, "'" + std::string(head) + "' outside a segment");
      if (head == "edge") {
        expect_arity(line, 3);
        int u = vertex(line, 1);
        int v = vertex(line, 2);
        if (looped.contains(u) || looped.contains(v)) {
          throw ParseError(line.number, "edge touches a looped vertex");
        }
        touched.insert(u);
        touched.insert(v);
        edges.emplace_back(u, v);
      } else {
        expect_arity(line, 2);
        int v = vertex(line, 1);
        if (touched.contains(v)) throw ParseError(line.number, "loop on a vertex with edges");
        looped.insert(v);
        loops.push_back(v);
      }
    } else if (head == "end") {
      if (!in_segment) throw ParseError(line.number, "'end' without 'segment'");
      expect_arity(line, 1);
      try {
        segments.push_back({Graph(*n, edges, loops), duration});
      } catch (const ValidationError& e) {
        throw ParseError(line.number, e.what());
      }
      in_segment = false;
    } else if (head == "checkpoint") {
      if (in_segment) throw ParseError(line.number, "'checkpoint' inside a segment");
      expect_arity(line, 3);
      auto t = Radians::parse(line.tokens[2]);
      if (!t) throw ParseError(line.number, "malformed time '" + std::string(line.tokens[2]) + "'");
      if (t->is_negative()) throw ParseError(line.number, "negative checkpoint time");
      if (!checkpoints.empty() && Radians::compare(*t, checkpoints.back().first.time) < 0) {
        throw ParseError(line.number, "checkpoint times must be nondecreasing");
      }
      checkpoints.push_back({{std::string(line.tokens[1]), *t}, line.number});
    } else {
      throw ParseError(line.number, "unknown directive '" + std::string(head) + "'");
    }
  }
  if (in_segment) throw ParseError(segment_line, "segment is never closed with 'end'");
  if (!n) throw ParseError(last_line, "missing 'vertices <n>' header");

  std::vector<Checkpoint> cps;
  for (auto& [cp, number] : checkpoints) {
    try {
      Schedule(*n, segments, {cp});
    } catch (const ValidationError& e) {
      throw ParseError(number, e.what());
    }
    cps.push_back(std::move(cp));
  }
  return Schedule(*n, std::move(segments), std::move(cps));
}

std::string serialize_schedule(const Schedule& schedule) {
  std::ostringstream os;
  os << "vertices " << schedule.n() << '\n';
  for (const auto& seg : schedule.segments()) {
    os << "segment " << seg.duration.to_string() << '\n';
    for (const auto& [u, v] : seg.graph.edges()) os << "edge " << u << ' ' << v << '\n';
    for (Vertex v : seg.graph.loops()) os << "loop " << v << '\n';
    os << "end\n";
  }
  for (const auto& cp : schedule.checkpoints()) {
    os << "checkpoint " << cp.label << ' ' << cp.time.to_string() << '\n';
  }
  return os.str();
}

StateSpec StateSpec::parse(std::string_view text) {
  if (text.starts_with("basis:")) {
    std::string bits(text.substr(6));
    if (bits.empty() || bits.find_first_not_of("01") != std::string::npos) {
      throw ArgumentError("basis state needs a bit string, got '" + bits + "'");
    }
    return StateSpec{bits};
  }
  if (text.starts_with("amps:")) {
    std::vector<Complex> amps;
    for (auto entry : split(text.substr(5), ";")) {
      auto parts = split(entry, ",");
      if (parts.size() != 2) {
        throw ArgumentError("amplitude '" + std::string(entry) + "' is not of the form re,im");
      }
      double re = 0.0;
      double im = 0.0;
      for (auto [part, dest] : {std::pair{parts[0], &re}, std::pair{parts[1], &im}}) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), *dest);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
          throw ArgumentError("malformed number '" + std::string(part) + "'");
        }
      }
      amps.emplace_back(re, im);
    }
    if (amps.empty()) throw ArgumentError("empty amplitude list");
    return StateSpec{std::move(amps)};
  }
  throw ArgumentError("initial state must start with 'basis:' or 'amps:'");
}

StateVector StateSpec::to_state(int n) const {
  if (const auto* bits = std::get_if<std::string>(&value)) {
    if (bits->size() >= 31 || (1 << bits->size()) != n) {
      throw ArgumentError("basis:" + *bits + " does not label one of " + std::to_string(n) +
                          " vertices");
    }
    return StateVector::basis(n, std::stoi(*bits, nullptr, 2));
  }
  const auto& list = std::get<std::vector<Complex>>(value);
  if (static_cast<int>(list.size()) != n) {
    throw ArgumentError("state has " + std::to_string(list.size()) + " amplitudes, schedule has " +
                        std::to_string(n) + " vertices");
  }
  Amplitudes a(n);
  for (int i = 0; i < n; ++i) a[i] = list[i];
  const double norm = a.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw ArgumentError("state norm is " + format_real(norm, 17) + ", expected 1");
  }
  return StateVector(a / norm);
}

std::string StateSpec::to_string() const {
  if (const auto* bits = std::get_if<std::string>(&value)) return "basis:" + *bits;
  std::string out = "amps:";
  bool first = true;
  for (const auto& c : std::get<std::vector<Complex>>(value)) {
    if (!first) out += ';';
    first = false;
    out += format_real(c.real(), 17) + "," + format_real(c.imag(), 17);
  }
  return out;
}

void write_trace_csv(std::ostream& out, const WalkTrace& trace) {
  const std::size_t n = trace.probabilities.empty() ? 0 : trace.probabilities.front().size();
  out << 't';
  for (std::size_t i = 0; i < n; ++i) out << ",p" << i;
  out << '\n';
  for (std::size_t r = 0; r < trace.times.size(); ++r) {
    out << format_real(trace.times[r], 17);
    for (double p : trace.probabilities[r]) out << ',' << format_real(p, 17);
    out << '\n';
  }
}

TraceTable parse_trace_csv(std::string_view text) {
  TraceTable table;
  int number = 0;
  std::size_t width = 0;
  for (auto row : split(text, "\n")) {
    ++number;
    auto cells = split(row, ",");
    if (number == 1) {
      if (cells.empty() || cells[0] != "t") throw ParseError(1, "trace header must start with 't'");
      width = cells.size();
      continue;
    }
    if (cells.size() != width) {
      throw ParseError(number, "expected " + std::to_string(width) + " columns");
    }
    std::vector<double> values;
    for (auto cell : cells) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError(number, "malformed number '" + std::string(cell) + "'");
      }
      values.push_back(v);
    }
    table.times.push_back(values.front());
    table.probabilities.emplace_back(values.begin() + 1, values.end());
  }
  return table;
}

void write_amplitudes(std::ostream& out, const StateVector& state) {
  for (int i = 0; i < state.size(); ++i) {
    out << format_real(state[i].real(), 15) << ',' << format_real(state[i].imag(), 15) << '\n';
  }
}

}  // namespace qwalk
