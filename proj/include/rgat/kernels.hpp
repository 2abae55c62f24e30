#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rgat/csr.hpp"
#include "rgat/matrix.hpp"
#include "rgat/rng.hpp"

namespace rgat {

/// C = A * B. Throws std::invalid_argument on inner-dimension mismatch.
/// Entries of A that are exactly zero are skipped, so sparse 0/1 feature
/// matrices multiply in O(nnz * cols(B)).
Matrix matmul(const Matrix& a, const Matrix& b);

/// C = A^T * B, same zero-skip on A. Used for weight gradients where A is the
/// (sparse) layer input.
Matrix matmul_at_b(const Matrix& a, const Matrix& b);

/// C = A * B^T.
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

/// y = x for x >= 0, slope*x otherwise. slope must lie in (0,1).
Matrix leaky_relu(const Matrix& x, double slope);
EdgeVector leaky_relu(const EdgeVector& x, double slope);
inline double leaky_relu(double x, double slope) { return x >= 0.0 ? x : slope * x; }
inline double leaky_relu_grad(double x, double slope) { return x >= 0.0 ? 1.0 : slope; }

/// y = x for x >= 0, exp(x)-1 otherwise.
Matrix elu(const Matrix& x);
double elu(double x);

/// Row-wise softmax of per-edge scores over each node's neighborhood,
/// stabilized by subtracting the row max. Every row of a CsrAdjacency holds
/// at least the self-loop, so no row is empty.
EdgeVector masked_softmax(const EdgeVector& scores, const CsrAdjacency& adj);

/// Jacobian-vector product of masked_softmax:
///   g_j = alpha_j * (gbar_j - sum_k alpha_k gbar_k)   per row.
EdgeVector masked_softmax_backward(const EdgeVector& alpha, const EdgeVector& grad_alpha,
                                   const CsrAdjacency& adj);

/// Mean negative log-likelihood over the masked rows plus its gradient:
/// grad is (softmax - onehot)/|mask| on masked rows and zero elsewhere.
/// Throws std::invalid_argument on an empty mask.
std::pair<double, Matrix> softmax_xent(const Matrix& logits, const std::vector<std::int32_t>& labels,
                                       const std::vector<std::uint32_t>& mask);

/// Inverted dropout. Every nonzero entry independently survives with
/// probability 1-p and is scaled by 1/(1-p); zero entries stay zero and
/// consume no randomness. p == 0 is an exact identity (no draws at all).
Matrix dropout(const Matrix& x, double p, Rng& rng);
EdgeVector dropout(const EdgeVector& x, double p, Rng& rng);

} // namespace rgat
