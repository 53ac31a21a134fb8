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

#include "subset_rank.hpp"

#include <algorithm>

#include "binomial.hpp"
#include "errors.hpp"

namespace couponlab {

SubsetId SubsetId::from_members(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw InvalidArgumentError("subset members must be distinct");
    }
    if (!members.empty() && members.front() < 1) {
        throw InvalidArgumentError("subset members must be >= 1");
    }
    SubsetId id;
    id.rank = colex_rank(members);
    id.members = std::move(members);
    return id;
}

SubsetId SubsetId::from_rank(std::uint64_t rank, int k) {
    SubsetId id;
    id.members = colex_unrank(rank, k);
    id.rank = rank;
    return id;
}

std::uint64_t colex_rank(std::span<const int> sorted_members) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted_members.size(); ++i) {
        rank += binom_u64(sorted_members[i] - 1, static_cast<std::int64_t>(i) + 1);
    }
    return rank;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k) {
    if (k < 0) {
        throw InvalidArgumentError("colex_unrank: k must be non-negative");
    }
    std::vector<int> members(static_cast<std::size_t>(k));
    std::uint64_t rest = rank;
    for (int i = k; i >= 1; --i) {
        // Largest c with C(c, i) <= rest; the member is c + 1.
        std::int64_t c = i - 1;
        while (binom(c + 1, i) <= static_cast<uint128>(rest)) {
            ++c;
        }
        rest -= binom_u64(c, i);
        members[static_cast<std::size_t>(i) - 1] = static_cast<int>(c) + 1;
    }
    return members;
}

bool next_colex(std::vector<int>& members, int n) {
    const int k = static_cast<int>(members.size());
    for (int i = 0; i < k; ++i) {
        const int ceiling = (i + 1 < k) ? members[static_cast<std::size_t>(i) + 1] - 1 : n;
        if (members[static_cast<std::size_t>(i)] < ceiling) {
            ++members[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) {
                members[static_cast<std::size_t>(j)] = j + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> enumerate_subsets(int n, int k) {
    if (k < 0 || k > n) {
        throw InvalidArgumentError("enumerate_subsets: need 0 <= k <= n");
    }
    std::vector<int> current(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        current[static_cast<std::size_t>(i)] = i + 1;
    }
    std::vector<std::vector<int>> all;
    all.reserve(binom_u64(n, k));
    all.push_back(current);
    while (next_colex(current, n)) {
        all.push_back(current);
    }
    return all;
}

int intersection_size(std::span<const int> a, std::span<const int> b) {
    int count = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

}  // namespace couponlab
