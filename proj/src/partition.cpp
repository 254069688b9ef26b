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
#include "mzvgenus/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mzvgenus {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] < 1) throw std::invalid_argument("partition parts must be positive");
    if (j + 1 < parts_.size() && parts_[j] < parts_[j + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.front(), 0);
  for (int p : parts_)
    for (int k = 0; k < p; ++k) ++conj[k];
  return Partition(std::move(conj));
}

bool Partition::contains_part(int p) const {
  return std::find(parts_.begin(), parts_.end(), p) != parts_.end();
}

Partition Partition::merged_with(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return from_unsorted(std::move(all));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> mult(parts_.empty() ? 1 : parts_.front() + 1, 0);
  for (int p : parts_) ++mult[p];
  return mult;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(parts_[j]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  // Reverse-lexicographic within a weight: larger part sequences come first.
  return b.parts_ <=> a.parts_;
}

bool lex_less(const Partition& a, const Partition& b) { return a.parts() < b.parts(); }

namespace {

void descend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    descend(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  descend(n, n, prefix, out);
  return out;
}

}  // namespace mzvgenus
