#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgat/csr.hpp"
#include "rgat/matrix.hpp"

namespace rgat {

/// A parsed citation dataset: binary bag-of-words features, integer labels
/// mapped from label strings by first appearance in file order, and the
/// undirected edge list in node-index space.
struct Dataset {
    std::uint32_t n_nodes = 0;
    std::uint32_t n_features = 0;
    std::uint32_t n_classes = 0;
    Matrix features;                    // n_nodes x n_features
    std::vector<std::int32_t> labels;   // in [0, n_classes); -1 marks an unlabeled node
    std::vector<std::string> node_ids;  // original string identifiers, unique
    EdgeList edges;
};

struct PlanetoidData {
    Dataset dataset;
    std::size_t skipped_cites = 0; // cite lines referencing unknown ids
};

/// Parse Planetoid-style text files.
/// Content lines: <id>\t<f_1>\t...\t<f_d>\t<label>, features are literal 0/1.
/// Cites lines:   <cited_id>\t<citing_id>; lines naming unknown ids are
/// skipped and counted, not fatal (the public files contain dangling refs).
/// Malformed lines and duplicate node ids raise std::runtime_error naming the
/// file and line.
PlanetoidData load_planetoid(const std::string& content_path, const std::string& cites_path);

/// Divide each row with a positive sum by that sum; all-zero rows unchanged.
/// Entries must be nonnegative.
Matrix row_normalize(const Matrix& features);

/// Transductive train/val/test index sets.
struct Split {
    std::vector<std::uint32_t> train_idx;
    std::vector<std::uint32_t> val_idx;
    std::vector<std::uint32_t> test_idx;
    std::uint64_t seed = 0;
};

/// Deterministic stratified split: exactly per_class_train training nodes per
/// class, then n_val and n_test drawn uniformly without replacement from the
/// remaining nodes. Index sets are sorted ascending and pairwise disjoint.
/// Throws std::runtime_error naming the class when one has too few nodes.
Split make_split(const Dataset& dataset, std::uint32_t per_class_train, std::uint32_t n_val,
                 std::uint32_t n_test, std::uint64_t seed);

} // namespace rgat
