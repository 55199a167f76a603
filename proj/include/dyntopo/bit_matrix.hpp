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

#ifndef DYNTOPO_BIT_MATRIX_HPP
#define DYNTOPO_BIT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dyntopo {

// Square 0-1 matrix, one bit per entry, row-major.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t row, std::size_t col) const {
    return (bits_[row * stride_ + col / 64] >> (col % 64)) & 1u;
  }

  void set(std::size_t row, std::size_t col) {
    bits_[row * stride_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace dyntopo

#endif  // DYNTOPO_BIT_MATRIX_HPP
