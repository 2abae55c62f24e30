#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rgat {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Symmetric sparse neighborhood structure with a self-loop in every row.
/// Guarantees after build_csr:
///   - j in neigh(i)  <=>  i in neigh(j)
///   - i in neigh(i) for every i (so every row is nonempty)
///   - col_idx strictly increasing within each row (no duplicates)
struct CsrAdjacency {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> row_ptr; // n+1 offsets
    std::vector<std::uint32_t> col_idx; // neighbor indices

    std::size_t n_entries() const { return col_idx.size(); }
    std::uint32_t degree(std::uint32_t i) const { return row_ptr[i + 1] - row_ptr[i]; }

    std::span<const std::uint32_t> neighbors(std::uint32_t i) const {
        return {col_idx.data() + row_ptr[i], col_idx.data() + row_ptr[i + 1]};
    }

    bool has_edge(std::uint32_t i, std::uint32_t j) const;

    /// All stored (i, j) pairs, row order. Feeding this back into build_csr
    /// reproduces the structure exactly.
    EdgeList edge_list() const;

    bool operator==(const CsrAdjacency& o) const = default;
};

/// Symmetrize, deduplicate, add self-loops, sort rows.
/// Throws std::invalid_argument if an endpoint is >= n.
CsrAdjacency build_csr(const EdgeList& edges, std::uint32_t n);

} // namespace rgat
