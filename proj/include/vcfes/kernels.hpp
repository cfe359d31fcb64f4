#pragma once

#include <cstddef>
#include <vector>

namespace vcfes {

// Small dense helpers shared by the heads, losses and retrieval. The batch
// kernels come in an OpenMP flavor and a plain serial reference; both write
// each output element with the same operation order, so results are
// bit-identical and the serial one stays the test oracle.

double dot(const double* a, const double* b, std::size_t n);
double l2_norm(const double* v, std::size_t n);
double l2_distance(const double* a, const double* b, std::size_t n);

/// out = W*x + b with W row-major (rows x cols). b may be null.
void matvec(const double* W, const double* x, const double* b, double* out, std::size_t rows,
            std::size_t cols);

/// Normalizes v in place to unit L2 norm; vectors with norm below 1e-12
/// become exactly zero (degenerate marker). Returns false on that path.
bool normalize_or_zero(double* v, std::size_t n);

/// All-pairs Euclidean distances of n row-major d-vectors into out (n*n).
void pairwise_distances(const double* data, std::size_t n, std::size_t d, double* out);
void pairwise_distances_serial(const double* data, std::size_t n, std::size_t d, double* out);

}  // namespace vcfes
