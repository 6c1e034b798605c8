#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace lwl::detail {

// Dense ranks under operator<: equal values share a rank, ranks follow sorted order.
template <typename T>
std::vector<std::uint32_t> dense_rank(const std::vector<T>& values) {
    std::vector<std::uint32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<std::uint32_t> rank(values.size());
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && values[order[i - 1]] < values[order[i]]) ++next;
        rank[order[i]] = next;
    }
    return rank;
}

}  // namespace lwl::detail
