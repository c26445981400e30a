#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace infnet {

// Dense bit matrix; row i holds every vertex reachable from vertex i.
class Reachability {
public:
    Reachability() = default;
    explicit Reachability(std::size_t vertices);

    std::size_t size() const noexcept { return vertices_; }

    bool reaches(std::size_t from, std::size_t to) const noexcept {
        return (bits_[from * words_ + to / 64] >> (to % 64)) & 1u;
    }
    void set(std::size_t from, std::size_t to) noexcept {
        bits_[from * words_ + to / 64] |= std::uint64_t{1} << (to % 64);
    }
    // row(into) |= row(from)
    void merge_row(std::size_t into, std::size_t from) noexcept;

    std::span<const std::uint64_t> row(std::size_t vertex) const noexcept {
        return {bits_.data() + vertex * words_, words_};
    }

    bool operator==(const Reachability&) const = default;

private:
    std::size_t vertices_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

using Adjacency = std::vector<std::vector<std::uint32_t>>;

// Height of each vertex above the sinks (sinks are 0). Requires a DAG.
std::vector<std::uint32_t> dag_heights(const Adjacency& successors);

// Reflexive-transitive closure of a DAG. Vertices of equal height are
// independent and are merged in parallel.
Reachability transitive_closure(const Adjacency& successors);

}  // namespace infnet
