#pragma once

namespace srnet::detail {

/// Row-major C(m x n) = alpha * op(A) * op(B) + beta * C.
/// op(A) is m x k, op(B) is k x n; lda/ldb are the leading dimensions of the
/// stored (untransposed) matrices.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a, int lda,
          const double* b, int ldb, double beta, double* c, int ldc);

}  // namespace srnet::detail
