#include "detail/gemm.hpp"

#ifdef SRNET_USE_CBLAS
#include <cblas.h>
#else
#include <vector>
#endif

namespace srnet::detail {

#ifdef SRNET_USE_CBLAS

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a, int lda,
          const double* b, int ldb, double beta, double* c, int ldc) {
    cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
                trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

#else

// Portable fallback: materialize op(A)/op(B) and run a blocked i-k-j kernel.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a, int lda,
          const double* b, int ldb, double beta, double* c, int ldc) {
    std::vector<double> abuf, bbuf;
    if (trans_a) {
        abuf.resize(static_cast<size_t>(m) * k);
        for (int i = 0; i < m; ++i)
            for (int p = 0; p < k; ++p) abuf[static_cast<size_t>(i) * k + p] = a[static_cast<size_t>(p) * lda + i];
        a = abuf.data();
        lda = k;
    }
    if (trans_b) {
        bbuf.resize(static_cast<size_t>(k) * n);
        for (int p = 0; p < k; ++p)
            for (int j = 0; j < n; ++j) bbuf[static_cast<size_t>(p) * n + j] = b[static_cast<size_t>(j) * ldb + p];
        b = bbuf.data();
        ldb = n;
    }
    for (int i = 0; i < m; ++i) {
        double* crow = c + static_cast<size_t>(i) * ldc;
        if (beta == 0.0) {
            for (int j = 0; j < n; ++j) crow[j] = 0.0;
        } else if (beta != 1.0) {
            for (int j = 0; j < n; ++j) crow[j] *= beta;
        }
        const double* arow = a + static_cast<size_t>(i) * lda;
        for (int p = 0; p < k; ++p) {
            const double av = alpha * arow[p];
            const double* brow = b + static_cast<size_t>(p) * ldb;
            for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

#endif

}  // namespace srnet::detail
