#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace repmat {

/// A set partition of {0, ..., k-1}: disjoint, covering, non-empty blocks, each sorted ascending.
/// Blocks are ordered by their smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int size() const noexcept;  // k
    int block_count() const noexcept { return static_cast<int>(blocks.size()); }
    bool is_pairing() const noexcept;
};

/// Visits every set partition of {0, ..., k-1} in lexicographic order of restricted-growth
/// strings a_0 = 0, a_i <= 1 + max(a_0, ..., a_{i-1}). k = 0 visits the empty partition once.
void for_each_set_partition(int k, const std::function<void(const SetPartition&)>& visit);

/// Visits every perfect matching of {0, ..., k-1} (nothing when k is odd).
void for_each_pairing(int k, const std::function<void(const SetPartition&)>& visit);

/// Bell number B_k.
std::uint64_t bell_number(int k);

}  // namespace repmat
