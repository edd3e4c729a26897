#include "spinpair/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace spinpair::linalg {

SymTridiag::SymTridiag(std::vector<double> d, std::vector<double> e)
    : diag(std::move(d)), offdiag(std::move(e)) {
    if (diag.empty()) throw std::invalid_argument("SymTridiag: dim must be >= 1");
    if (offdiag.size() + 1 != diag.size())
        throw std::invalid_argument("SymTridiag: offdiag length must be dim-1");
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Implicit-shift QL with eigenvector accumulation, after the classic
// tql2 routine (Bowdler, Martin, Reinsch, Wilkinson; EISPACK lineage).
// d: diagonal, e: subdiagonal (e[0..n-2] used, e[n-1] scratch),
// z: row-major n x n, on input the transformation accumulated so far.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& z, int n) {
    if (n == 1) return;
    e.resize(n, 0.0);
    e[n - 1] = 0.0;

    const double eps = std::numeric_limits<double>::epsilon();
    double f = 0.0;
    double tst1 = 0.0;

    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }

        if (m > l) {
            int iter = 0;
            do {
                ++iter;
                if (iter > 50) throw std::runtime_error("QL: no convergence after 50 iterations");

                // implicit shift from the 2x2 leading block
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = hypot2(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0, c2 = c, c3 = c;
                double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = hypot2(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    // rotate eigenvector columns i and i+1
                    for (int k = 0; k < n; ++k) {
                        double zk = z[static_cast<std::size_t>(k) * n + i + 1];
                        double zi = z[static_cast<std::size_t>(k) * n + i];
                        z[static_cast<std::size_t>(k) * n + i + 1] = s * zi + c * zk;
                        z[static_cast<std::size_t>(k) * n + i] = c * zi - s * zk;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

// Householder reduction to tridiagonal form with accumulated transform
// (tred2 lineage). a is destroyed; on return z holds the orthogonal Q,
// d the diagonal and e the subdiagonal (e[0..n-2]).
void householder_tridiag(std::vector<double>& z, std::vector<double>& d,
                         std::vector<double>& e, int n) {
    auto Z = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

    for (int j = 0; j < n; ++j) d[j] = Z(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        double scale = 0.0, h = 0.0;
        for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (int j = 0; j < i; ++j) {
                d[j] = Z(i - 1, j);
                Z(i, j) = 0.0;
                Z(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double fv = d[i - 1];
            double g = std::sqrt(h);
            if (fv > 0) g = -g;
            e[i] = scale * g;
            h -= fv * g;
            d[i - 1] = fv - g;
            for (int j = 0; j < i; ++j) e[j] = 0.0;

            for (int j = 0; j < i; ++j) {
                fv = d[j];
                Z(j, i) = fv;
                g = e[j] + Z(j, j) * fv;
                for (int k = j + 1; k <= i - 1; ++k) {
                    g += Z(k, j) * d[k];
                    e[k] += Z(k, j) * fv;
                }
                e[j] = g;
            }
            fv = 0.0;
            for (int j = 0; j < i; ++j) {
                e[j] /= h;
                fv += e[j] * d[j];
            }
            double hh = fv / (h + h);
            for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (int j = 0; j < i; ++j) {
                fv = d[j];
                g = e[j];
                for (int k = j; k <= i - 1; ++k) Z(k, j) -= fv * e[k] + g * d[k];
                d[j] = Z(i - 1, j);
                Z(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for (int i = 0; i < n - 1; ++i) {
        Z(n - 1, i) = Z(i, i);
        Z(i, i) = 1.0;
        double h = d[i + 1];
        if (h != 0.0) {
            for (int k = 0; k <= i; ++k) d[k] = Z(k, i + 1) / h;
            for (int j = 0; j <= i; ++j) {
                double g = 0.0;
                for (int k = 0; k <= i; ++k) g += Z(k, i + 1) * Z(k, j);
                for (int k = 0; k <= i; ++k) Z(k, j) -= g * d[k];
            }
        }
        for (int k = 0; k <= i; ++k) Z(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
        d[j] = Z(n - 1, j);
        Z(n - 1, j) = 0.0;
    }
    Z(n - 1, n - 1) = 1.0;
    e[0] = 0.0;

    // shift subdiagonal down one slot: e[i] currently at index i for i>=1
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
}

// Ties ordered by original index so results are deterministic.
SpectralDecomposition sorted_result(std::vector<double>& d, std::vector<double>& z, int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[a] < d[b]; });

    SpectralDecomposition out;
    out.dim = n;
    out.eigenvalues.resize(n);
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = d[order[k]];
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(i) * n + k] =
                z[static_cast<std::size_t>(i) * n + order[k]];
    }
    return out;
}

}  // namespace

SpectralDecomposition eig_sym_tridiag(const SymTridiag& t) {
    const int n = t.dim();
    if (n < 1) throw std::invalid_argument("eig_sym_tridiag: dim must be >= 1");
    std::vector<double> d = t.diag;
    std::vector<double> e = t.offdiag;
    e.resize(n, 0.0);
    std::vector<double> z(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;
    ql_implicit(d, e, z, n);
    return sorted_result(d, z, n);
}

SpectralDecomposition eig_sym_dense(const SymMatrix& m) {
    const int n = m.dim();
    if (n < 1) throw std::invalid_argument("eig_sym_dense: dim must be >= 1");
    std::vector<double> z = m.data();
    std::vector<double> d(n), e(n, 0.0);
    if (n == 1) {
        d[0] = z[0];
        z[0] = 1.0;
        return sorted_result(d, z, n);
    }
    householder_tridiag(z, d, e, n);
    ql_implicit(d, e, z, n);
    return sorted_result(d, z, n);
}

SymMatrix partial_transpose(const SymMatrix& m, int dimA, int dimB) {
    if (dimA < 1 || dimB < 1 || m.dim() != dimA * dimB)
        throw std::invalid_argument("partial_transpose: dim(m) must equal dimA*dimB");
    // <a,b|out|a',b'> = <a,b'|m|a',b>; PT of a real symmetric matrix stays symmetric
    SymMatrix r(m.dim());
    for (int a = 0; a < dimA; ++a)
        for (int b = 0; b < dimB; ++b)
            for (int ap = 0; ap < dimA; ++ap)
                for (int bp = 0; bp < dimB; ++bp)
                    r.set(a * dimB + b, ap * dimB + bp, m(a * dimB + bp, ap * dimB + b));
    return r;
}

double trace_norm_negativity(const SymMatrix& m) {
    auto s = eig_sym_dense(m);
    double neg = 0.0;
    for (double v : s.eigenvalues)
        if (v < 0.0) neg -= v;
    return neg;
}

double reconstruction_error(const SymMatrix& a, const SpectralDecomposition& s) {
    const int n = a.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += s.vec(i, k) * s.eigenvalues[k] * s.vec(j, k);
            worst = std::max(worst, std::abs(acc - a(i, j)));
        }
    return worst;
}

double orthonormality_error(const SpectralDecomposition& s) {
    const int n = s.dim;
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += s.vec(i, k) * s.vec(i, l);
            worst = std::max(worst, std::abs(acc - (k == l ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace spinpair::linalg
