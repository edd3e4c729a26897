#ifndef SPINPAIR_LINALG_HPP
#define SPINPAIR_LINALG_HPP

#include <cstddef>
#include <vector>

// Minimal real symmetric linear algebra for spin-pair states: tridiagonal and
// dense eigensolvers, partial transpose, trace-norm negativity. Everything in
// the standard basis is real, so no complex path is provided.

namespace spinpair::linalg {

/// Symmetric tridiagonal matrix: diag has dim entries, offdiag dim-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    SymTridiag() = default;
    SymTridiag(std::vector<double> d, std::vector<double> e);

    int dim() const { return static_cast<int>(diag.size()); }
};

/// Dense real symmetric matrix, row-major. Construction keeps entries
/// symmetric exactly; set() writes both (i,j) and (j,i).
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }
    void add(int i, int j, double v) {
        a_[idx(i, j)] += v;
        if (i != j) a_[idx(j, i)] += v;
    }

    const std::vector<double>& data() const { return a_; }
    double trace() const;
    double max_abs() const;

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_ = 0;
    std::vector<double> a_;
};

/// Eigen-decomposition of a real symmetric matrix. Eigenvalues ascending
/// (ties kept in original order); vectors stored row-major, column k is the
/// eigenvector of eigenvalues[k].
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<double> vectors;  // dim x dim, row-major
    int dim = 0;

    double vec(int i, int k) const { return vectors[static_cast<std::size_t>(i) * dim + k]; }
};

/// Implicit-shift QL on a symmetric tridiagonal matrix. Always converges for
/// well-formed input; accuracy contract: reconstruction and orthonormality
/// within 1e-12 * (1 + max|entry|).
SpectralDecomposition eig_sym_tridiag(const SymTridiag& t);

/// Dense symmetric eigensolver: Householder tridiagonalization followed by QL.
SpectralDecomposition eig_sym_dense(const SymMatrix& m);

/// Partial transpose over the second factor of a dimA x dimB product space:
/// <a,b|out|a',b'> = <a,b'|m|a',b>. Involution; preserves symmetry and trace.
SymMatrix partial_transpose(const SymMatrix& m, int dimA, int dimB);

/// Negativity from a partial transpose of a unit-trace matrix:
/// -(sum of negative eigenvalues) = (sum|lambda| - sum lambda)/2, clamped >= 0.
double trace_norm_negativity(const SymMatrix& m);

/// Reconstruction residual max|V L V^T - A|, for contract checks.
double reconstruction_error(const SymMatrix& a, const SpectralDecomposition& s);

/// Orthonormality residual max|V^T V - I|.
double orthonormality_error(const SpectralDecomposition& s);

}  // namespace spinpair::linalg

#endif
