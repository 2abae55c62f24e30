#include "rgat/csr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rgat {

bool CsrAdjacency::has_edge(std::uint32_t i, std::uint32_t j) const {
    const auto nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

EdgeList CsrAdjacency::edge_list() const {
    EdgeList out;
    out.reserve(col_idx.size());
    for (std::uint32_t i = 0; i < n; ++i) {
        for (const auto j : neighbors(i)) out.emplace_back(i, j);
    }
    return out;
}

CsrAdjacency build_csr(const EdgeList& edges, std::uint32_t n) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        if (u >= n || v >= n) {
            throw std::invalid_argument("build_csr: edge " + std::to_string(e) + " endpoint (" +
                                        std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        }
    }

    // Directed copies both ways plus one self-loop per node, then sort+dedup.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> dir;
    dir.reserve(edges.size() * 2 + n);
    for (const auto& [u, v] : edges) {
        dir.emplace_back(u, v);
        dir.emplace_back(v, u);
    }
    for (std::uint32_t i = 0; i < n; ++i) dir.emplace_back(i, i);
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    CsrAdjacency adj;
    adj.n = n;
    adj.row_ptr.assign(n + 1, 0);
    adj.col_idx.resize(dir.size());
    for (const auto& [u, v] : dir) adj.row_ptr[u + 1]++;
    for (std::uint32_t i = 0; i < n; ++i) adj.row_ptr[i + 1] += adj.row_ptr[i];
    std::vector<std::uint32_t> cursor(adj.row_ptr.begin(), adj.row_ptr.end() - 1);
    for (const auto& [u, v] : dir) adj.col_idx[cursor[u]++] = v;
    return adj;
}

} // namespace rgat
