#pragma once

#include "superschur/matrix.hpp"
#include "superschur/partition.hpp"
#include "superschur/polynomial.hpp" // BigInt
#include "superschur/report.hpp"

namespace superschur {

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_exact(const IntMatrix& m);

/// Exhaustive total-unimodularity test: every square submatrix must have
/// determinant in {-1,0,1}. Any entry outside {-1,0,1} is itself a violating
/// 1x1 minor, so such matrices return false immediately. Throws cap_exceeded
/// when min(rows, cols) > cap; the method is exponential and the cap must be
/// raised deliberately.
bool is_totally_unimodular(const IntMatrix& m, int cap = 8);

/// True iff each row's ones form one contiguous (possibly empty) block in the
/// given column order. Throws std::invalid_argument on entries outside {0,1}.
bool is_interval(const IntMatrix& m);

/// Brute-force search over column permutations (cols <= max_cols).
bool is_interval_up_to_column_permutation(const IntMatrix& m, int max_cols = 8);

/// Returns diag(signs) * m. Signs must be +-1, one per row.
IntMatrix row_sign_normalize(const IntMatrix& m, const std::vector<int>& signs);

/// Builds the stacked system for lambda, applies the sign normalization
/// diag(I_{k+l}, 1, -1, -I_d), checks that the result is a {0,1} interval
/// matrix, and (when d <= cap) confirms total unimodularity exhaustively.
CertReport certify_atilde_tu(const Partition& lambda, int k, int l, int cap = 8);

} // namespace superschur
