// Copyright 2026 The couponlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COUPONLAB_SUBSET_RANK_HPP
#define COUPONLAB_SUBSET_RANK_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace couponlab {

// A k-subset of [1..n] with its colexicographic rank. Members are sorted
// ascending; rank(x) = sum_i C(x_i - 1, i + 1) over 0-indexed positions.
struct SubsetId {
    std::vector<int> members;
    std::uint64_t rank = 0;

    static SubsetId from_members(std::vector<int> members);
    static SubsetId from_rank(std::uint64_t rank, int k);
};

std::uint64_t colex_rank(std::span<const int> sorted_members);
std::vector<int> colex_unrank(std::uint64_t rank, int k);

// Advances `members` to the colex successor among k-subsets of [1..n];
// returns false (leaving members untouched) once the last subset is reached.
bool next_colex(std::vector<int>& members, int n);

// All k-subsets of [1..n] in colex order, so position == rank.
std::vector<std::vector<int>> enumerate_subsets(int n, int k);

int intersection_size(std::span<const int> a, std::span<const int> b);

}  // namespace couponlab

#endif
