#include "rgat/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rgat {

namespace {

void check_inner(std::size_t a, std::size_t b, const char* who) {
    if (a != b) {
        throw std::invalid_argument(std::string(who) + ": inner dimensions disagree (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

} // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    check_inner(a.cols, b.rows, "matmul");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
    check_inner(a.rows, b.rows, "matmul_at_b");
    Matrix c(a.cols, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        const double* bi = b.row(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            double* ck = c.row(k);
            for (std::size_t j = 0; j < b.cols; ++j) ck[j] += aik * bi[j];
        }
    }
    return c;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
    check_inner(a.cols, b.cols, "matmul_a_bt");
    Matrix c(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t k = 0; k < b.rows; ++k) {
            const double* bk = b.row(k);
            double acc = 0.0;
            for (std::size_t j = 0; j < a.cols; ++j) acc += ai[j] * bk[j];
            ci[k] = acc;
        }
    }
    return c;
}

Matrix leaky_relu(const Matrix& x, double slope) {
    if (!(slope > 0.0 && slope < 1.0)) throw std::invalid_argument("leaky_relu: slope must be in (0,1)");
    Matrix y = x;
    for (auto& v : y.data) v = leaky_relu(v, slope);
    return y;
}

EdgeVector leaky_relu(const EdgeVector& x, double slope) {
    if (!(slope > 0.0 && slope < 1.0)) throw std::invalid_argument("leaky_relu: slope must be in (0,1)");
    EdgeVector y = x;
    for (auto& v : y.values) v = leaky_relu(v, slope);
    return y;
}

double elu(double x) { return x >= 0.0 ? x : std::expm1(x); }

Matrix elu(const Matrix& x) {
    Matrix y = x;
    for (auto& v : y.data) v = elu(v);
    return y;
}

EdgeVector masked_softmax(const EdgeVector& scores, const CsrAdjacency& adj) {
    if (scores.n_edges() != adj.n_entries()) {
        throw std::invalid_argument("masked_softmax: scores not aligned with adjacency");
    }
    EdgeVector alpha(scores.n_edges());
    for (std::uint32_t i = 0; i < adj.n; ++i) {
        const std::size_t lo = adj.row_ptr[i];
        const std::size_t hi = adj.row_ptr[i + 1];
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t e = lo; e < hi; ++e) m = std::max(m, scores[e]);
        double z = 0.0;
        for (std::size_t e = lo; e < hi; ++e) {
            alpha[e] = std::exp(scores[e] - m);
            z += alpha[e];
        }
        for (std::size_t e = lo; e < hi; ++e) alpha[e] /= z;
    }
    return alpha;
}

EdgeVector masked_softmax_backward(const EdgeVector& alpha, const EdgeVector& grad_alpha,
                                   const CsrAdjacency& adj) {
    if (alpha.n_edges() != adj.n_entries() || grad_alpha.n_edges() != adj.n_entries()) {
        throw std::invalid_argument("masked_softmax_backward: inputs not aligned with adjacency");
    }
    EdgeVector grad_scores(alpha.n_edges());
    for (std::uint32_t i = 0; i < adj.n; ++i) {
        const std::size_t lo = adj.row_ptr[i];
        const std::size_t hi = adj.row_ptr[i + 1];
        double dot = 0.0;
        for (std::size_t e = lo; e < hi; ++e) dot += alpha[e] * grad_alpha[e];
        for (std::size_t e = lo; e < hi; ++e) grad_scores[e] = alpha[e] * (grad_alpha[e] - dot);
    }
    return grad_scores;
}

std::pair<double, Matrix> softmax_xent(const Matrix& logits, const std::vector<std::int32_t>& labels,
                                       const std::vector<std::uint32_t>& mask) {
    if (mask.empty()) throw std::invalid_argument("softmax_xent: empty mask");
    if (labels.size() < logits.rows) throw std::invalid_argument("softmax_xent: labels shorter than logit rows");

    Matrix grad(logits.rows, logits.cols);
    const double inv_m = 1.0 / static_cast<double>(mask.size());
    double loss = 0.0;
    std::vector<double> p(logits.cols);
    for (const auto i : mask) {
        if (i >= logits.rows) throw std::invalid_argument("softmax_xent: mask index out of range");
        const double* li = logits.row(i);
        double m = li[0];
        for (std::size_t j = 1; j < logits.cols; ++j) m = std::max(m, li[j]);
        double z = 0.0;
        for (std::size_t j = 0; j < logits.cols; ++j) {
            p[j] = std::exp(li[j] - m);
            z += p[j];
        }
        const auto y = static_cast<std::size_t>(labels[i]);
        loss += -(li[y] - m - std::log(z));
        double* gi = grad.row(i);
        for (std::size_t j = 0; j < logits.cols; ++j) gi[j] = (p[j] / z - (j == y ? 1.0 : 0.0)) * inv_m;
    }
    return {loss * inv_m, grad};
}

Matrix dropout(const Matrix& x, double p, Rng& rng) {
    if (p == 0.0) return x;
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("dropout: p must be in [0,1)");
    Matrix y = x;
    const double scale = 1.0 / (1.0 - p);
    for (auto& v : y.data) {
        if (v == 0.0) continue;
        v = rng.uniform01() < p ? 0.0 : v * scale;
    }
    return y;
}

EdgeVector dropout(const EdgeVector& x, double p, Rng& rng) {
    if (p == 0.0) return x;
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("dropout: p must be in [0,1)");
    EdgeVector y = x;
    const double scale = 1.0 / (1.0 - p);
    for (auto& v : y.values) {
        if (v == 0.0) continue;
        v = rng.uniform01() < p ? 0.0 : v * scale;
    }
    return y;
}

} // namespace rgat
