#include "infnet/closure.hpp"

#include <algorithm>
#include <numeric>

#include "infnet/error.hpp"

namespace infnet {

Reachability::Reachability(std::size_t vertices)
    : vertices_(vertices), words_((vertices + 63) / 64), bits_(vertices * words_, 0) {}

void Reachability::merge_row(std::size_t into, std::size_t from) noexcept {
    std::uint64_t* dst = bits_.data() + into * words_;
    const std::uint64_t* src = bits_.data() + from * words_;
    for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
}

std::vector<std::uint32_t> dag_heights(const Adjacency& successors) {
    const std::size_t n = successors.size();
    std::vector<std::uint32_t> indegree(n, 0);
    for (const auto& succ : successors) {
        for (auto v : succ) ++indegree[v];
    }
    std::vector<std::uint32_t> order;
    order.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) order.push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (auto v : successors[order[head]]) {
            if (--indegree[v] == 0) order.push_back(v);
        }
    }
    if (order.size() != n) throw Error(ErrorCode::cycle_would_form, "graph is not acyclic");

    std::vector<std::uint32_t> height(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (auto v : successors[*it]) height[*it] = std::max(height[*it], height[v] + 1);
    }
    return height;
}

Reachability transitive_closure(const Adjacency& successors) {
    const std::size_t n = successors.size();
    Reachability reach(n);
    if (n == 0) return reach;

    const auto height = dag_heights(successors);
    const std::uint32_t levels = *std::max_element(height.begin(), height.end()) + 1;

    // Bucket vertices by height; each bucket only reads rows of lower buckets.
    std::vector<std::size_t> offsets(levels + 1, 0);
    for (auto h : height) ++offsets[h + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<std::uint32_t> bucketed(n);
    {
        auto cursor = offsets;
        for (std::uint32_t v = 0; v < n; ++v) bucketed[cursor[height[v]]++] = v;
    }

    for (std::uint32_t level = 0; level < levels; ++level) {
        const auto begin = static_cast<std::int64_t>(offsets[level]);
        const auto end = static_cast<std::int64_t>(offsets[level + 1]);
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = begin; i < end; ++i) {
            const auto v = bucketed[static_cast<std::size_t>(i)];
            reach.set(v, v);
            for (auto w : successors[v]) reach.merge_row(v, w);
        }
    }
    return reach;
}

}  // namespace infnet
