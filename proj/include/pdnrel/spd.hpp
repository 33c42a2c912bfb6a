#pragma once

#include <vector>

namespace pdnrel {

// Compressed sparse row, symmetric positive definite by construction.
struct CsrMatrix {
    int n = 0;
    std::vector<int> row_ptr;  // size n+1
    std::vector<int> col;
    std::vector<double> val;

    void matvec(const std::vector<double>& x, std::vector<double>& y) const;
    // Largest relative asymmetry |a_ij - a_ji| / max|a|; 0 for symmetric.
    double symmetry_error() const;
};

struct CgResult {
    std::vector<double> x;
    int iterations = 0;
    double residual = 0.0;  // final relative residual
};

// Jacobi-preconditioned conjugate gradient. Deterministic: fixed-order
// reductions, single-threaded. max_iter < 0 selects 20*n. Throws
// NumericalError on non-convergence or an indefinite matrix.
CgResult solve_spd(const CsrMatrix& A, const std::vector<double>& b,
                   double tol = 1e-10, int max_iter = -1,
                   const std::vector<double>* x0 = nullptr);

}  // namespace pdnrel
