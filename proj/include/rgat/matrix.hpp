#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rgat {

/// Dense row-major matrix of 64-bit reals. The only tensor type in the
/// project; node feature matrices, weight matrices and logits all use it.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // row-major, rows*cols entries

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

/// Per-edge values aligned one-to-one with a CsrAdjacency's col_idx array.
/// Which adjacency a given EdgeVector is aligned with is a contract of the
/// producing call, not something the type tracks.
struct EdgeVector {
    std::vector<double> values;

    EdgeVector() = default;
    explicit EdgeVector(std::size_t n_edges, double fill = 0.0) : values(n_edges, fill) {}

    std::size_t n_edges() const { return values.size(); }
    double& operator[](std::size_t e) { return values[e]; }
    double operator[](std::size_t e) const { return values[e]; }
};

} // namespace rgat
