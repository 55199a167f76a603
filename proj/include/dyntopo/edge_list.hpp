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

#ifndef DYNTOPO_EDGE_LIST_HPP
#define DYNTOPO_EDGE_LIST_HPP

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dyntopo/genseq.hpp"

namespace dyntopo {

// Text format:
//
//   # comment (anything after '#' on a line is ignored)
//   <n>
//   <src> <dst>
//   ...
//
// Vertex ids are 0-based. A full-line comment of the form
// "# initial-order: v0 v1 ..." names a non-identity start order; other
// readers see it as an ordinary comment.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses an edge list. Throws ParseError naming the offending line.
EdgeStream read_edge_list(std::istream& in);
EdgeStream read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const EdgeStream& stream);

}  // namespace dyntopo

#endif  // DYNTOPO_EDGE_LIST_HPP
