// Copyright 2026 The dyntopo Authors
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

#include "dyntopo/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <string_view>
#include <vector>

namespace dyntopo {
namespace {

constexpr std::string_view kOrderPragma = "# initial-order:";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::uint64_t> parse_integers(std::string_view s,
                                          std::size_t line) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '\t') {
      ++pos;
      continue;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc() ||
        (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line, "expected a non-negative integer near '" +
                                 std::string(s.substr(pos)) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

EdgeStream read_edge_list(std::istream& in) {
  EdgeStream s;
  s.generator = "file";
  bool have_n = false;
  std::vector<std::uint64_t> order;
  std::size_t order_line = 0;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string_view text = trim(raw);
    if (text.starts_with(kOrderPragma)) {
      order = parse_integers(trim(text.substr(kOrderPragma.size())), line);
      order_line = line;
      continue;
    }
    text = trim(text.substr(0, text.find('#')));
    if (text.empty()) continue;
    const std::vector<std::uint64_t> values = parse_integers(text, line);
    if (!have_n) {
      if (values.size() != 1) throw ParseError(line, "expected the vertex count");
      if (values[0] == 0 || values[0] >= kNoVertex) {
        throw ParseError(line, "vertex count out of range");
      }
      s.n = values[0];
      have_n = true;
      continue;
    }
    if (values.size() != 2) throw ParseError(line, "expected '<src> <dst>'");
    if (values[0] >= s.n || values[1] >= s.n) {
      throw ParseError(line, "vertex id out of range for n=" + std::to_string(s.n));
    }
    s.edges.push_back(Edge{static_cast<VertexId>(values[0]),
                           static_cast<VertexId>(values[1])});
  }
  if (!have_n) throw ParseError(0, "missing vertex count");
  if (!order.empty()) {
    for (std::uint64_t x : order) {
      if (x >= s.n) throw ParseError(order_line, "initial order names an unknown vertex");
    }
    s.initial_order.assign(order.begin(), order.end());
    try {
      checked_initial_order(s.n, std::span<const VertexId>(s.initial_order));
    } catch (const std::invalid_argument&) {
      throw ParseError(order_line, "initial order is not a permutation of [0, n)");
    }
  }
  return s;
}

EdgeStream read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeStream& stream) {
  if (!stream.generator.empty()) {
    out << "# generator: " << stream.generator << " seed=" << stream.seed;
    if (!stream.params.empty()) out << ' ' << stream.params;
    out << '\n';
  }
  if (!stream.initial_order.empty()) {
    out << kOrderPragma;
    for (VertexId x : stream.initial_order) out << ' ' << x;
    out << '\n';
  }
  out << stream.n << '\n';
  for (const Edge& e : stream.edges) out << e.src << ' ' << e.dst << '\n';
}

}  // namespace dyntopo
