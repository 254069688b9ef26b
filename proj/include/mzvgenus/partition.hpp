/* Copyright 2026 The mzvgenus Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef MZVGENUS_PARTITION_HPP
#define MZVGENUS_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace mzvgenus {

/// A weakly decreasing sequence of positive integers.
///
/// Ordering: by weight first, then reverse-lexicographically within a weight,
/// so that (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1). Every map keyed by
/// Partition iterates in this order, which is also the row/column order of
/// all transition matrices.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts the parts; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t j) const { return parts_[j]; }

  Partition conjugate() const;
  bool contains_part(int p) const;

  /// Concatenation of the parts, re-sorted (multiplication of e_λ or p_λ).
  Partition merged_with(const Partition& other) const;

  /// multiplicity[k] = number of parts equal to k.
  std::vector<int> multiplicities() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Plain lexicographic comparison of the part sequences, ignoring weight.
bool lex_less(const Partition& a, const Partition& b);

/// All partitions of n, in the fixed order (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

}  // namespace mzvgenus

#endif  // MZVGENUS_PARTITION_HPP
