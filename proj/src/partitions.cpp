#include "repmat/partitions.hpp"

#include "repmat/error.hpp"

#include <algorithm>

namespace repmat {

int SetPartition::size() const noexcept {
    int k = 0;
    for (const auto& b : blocks) k += static_cast<int>(b.size());
    return k;
}

bool SetPartition::is_pairing() const noexcept {
    return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 2; });
}

void for_each_set_partition(int k, const std::function<void(const SetPartition&)>& visit) {
    if (k < 0) throw Error(ErrorCode::invalid_argument, "partition size must be non-negative");
    if (k == 0) {
        visit(SetPartition{});
        return;
    }
    // rgs[i] = block of element i; peak[i] = max(rgs[0..i])
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    std::vector<int> peak(static_cast<std::size_t>(k), 0);
    SetPartition p;
    while (true) {
        const int nblocks = peak.back() + 1;
        p.blocks.assign(static_cast<std::size_t>(nblocks), {});
        for (int i = 0; i < k; ++i) p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
        visit(p);

        int i = k - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] == peak[static_cast<std::size_t>(i - 1)] + 1) --i;
        if (i == 0) return;
        ++rgs[static_cast<std::size_t>(i)];
        peak[static_cast<std::size_t>(i)] = std::max(peak[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < k; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            peak[static_cast<std::size_t>(j)] = peak[static_cast<std::size_t>(i)];
        }
    }
}

namespace {

void pair_up(std::vector<int>& free, SetPartition& p, const std::function<void(const SetPartition&)>& visit) {
    if (free.empty()) {
        visit(p);
        return;
    }
    const int first = free.front();
    for (std::size_t j = 1; j < free.size(); ++j) {
        const int partner = free[j];
        std::vector<int> rest;
        rest.reserve(free.size() - 2);
        for (std::size_t t = 1; t < free.size(); ++t)
            if (t != j) rest.push_back(free[t]);
        p.blocks.push_back({first, partner});
        pair_up(rest, p, visit);
        p.blocks.pop_back();
    }
}

}  // namespace

void for_each_pairing(int k, const std::function<void(const SetPartition&)>& visit) {
    if (k < 0) throw Error(ErrorCode::invalid_argument, "partition size must be non-negative");
    if (k % 2 != 0) return;
    std::vector<int> free(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) free[static_cast<std::size_t>(i)] = i;
    SetPartition p;
    pair_up(free, p, visit);
}

std::uint64_t bell_number(int k) {
    if (k < 0) throw Error(ErrorCode::invalid_argument, "Bell number of negative size");
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < k; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace repmat
