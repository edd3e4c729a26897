#include "spinpair/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinpair::model {

void validate(const SpinPairParams& p) {
    if (p.two_s < 1) throw std::invalid_argument("SpinPairParams: two_s must be >= 1");
    if (!(p.J > 0.0) && p.D == 0.0)
        throw std::invalid_argument("SpinPairParams: J must be positive (reduce first)");
}

DerivedScales derived_scales(const SpinPairParams& p) {
    const double dh = p.h1 - p.h2;
    return {dh / p.J, std::hypot(dh, p.J), 0.5 * (p.h1 + p.h2)};
}

namespace {

// sqrt(s(s+1) - m(m+1)) from doubled labels; exact integer arithmetic inside.
double raise_factor(int two_s, int two_m) {
    const int num = two_s * (two_s + 2) - two_m * (two_m + 2);
    return 0.5 * std::sqrt(static_cast<double>(num));
}

}  // namespace

SpinOperators spin_matrices(int two_s) {
    if (two_s < 1) throw std::invalid_argument("spin_matrices: two_s must be >= 1");
    SpinOperators ops;
    const int d = two_s + 1;
    ops.sz_diag.resize(d);
    ops.splus_offdiag.resize(d - 1);
    for (int k = 0; k < d; ++k) ops.sz_diag[k] = 0.5 * (two_s - 2 * k);
    // slot k holds m = s-k; s+ connects slot k+1 (m = s-k-1) up to slot k
    for (int k = 0; k + 1 < d; ++k) ops.splus_offdiag[k] = raise_factor(two_s, two_s - 2 * (k + 1));
    return ops;
}

ReducedCoupling reduce_couplings(double J, double D) {
    if (J == 0.0 && D == 0.0)
        throw std::invalid_argument("reduce_couplings: J and D cannot both vanish");
    return {std::hypot(J, D), std::atan2(D, J)};
}

int BlockHamiltonian::product_index(int two_m1, int two_m2) const {
    const int d = params.two_s + 1;
    const int i1 = (params.two_s - two_m1) / 2;
    const int i2 = (params.two_s - two_m2) / 2;
    return i1 * d + i2;
}

BlockHamiltonian build_hamiltonian(const SpinPairParams& p) {
    validate(p);
    if (p.D != 0.0)
        throw std::invalid_argument("build_hamiltonian: reduce the DM coupling first");
    if (!(p.J > 0.0))
        throw std::invalid_argument("build_hamiltonian: J must be positive");

    BlockHamiltonian h;
    h.params = p;
    const int ts = p.two_s;

    for (int M = -ts; M <= ts; ++M) {
        // valid doubled m1 with |m1| <= s and |M - m1| <= s, descending
        const int two_M = 2 * M;
        const int hi = std::min(ts, two_M + ts);
        const int lo = std::max(-ts, two_M - ts);
        std::vector<int> labels;
        for (int two_m1 = hi; two_m1 >= lo; two_m1 -= 2) labels.push_back(two_m1);

        const int n = static_cast<int>(labels.size());
        std::vector<double> diag(n), off(std::max(0, n - 1));
        for (int k = 0; k < n; ++k) {
            const double m1 = 0.5 * labels[k];
            const double m2 = M - m1;
            diag[k] = -p.h1 * m1 - p.h2 * m2 + p.Jz * m1 * m2;
        }
        for (int k = 0; k + 1 < n; ++k) {
            // couples (m1, m2) to (m1-1, m2+1): (J/2) s1- s2+ ladder factors
            const int two_m1 = labels[k];
            const int two_m2 = two_M - two_m1;
            off[k] = 0.5 * p.J * raise_factor(ts, two_m1 - 2) * raise_factor(ts, two_m2);
        }
        h.blocks.emplace(M, linalg::SymTridiag(std::move(diag), std::move(off)));
        h.basis_two_m1.emplace(M, std::move(labels));
    }
    return h;
}

linalg::SymMatrix dense_embedding(const BlockHamiltonian& h) {
    linalg::SymMatrix out(h.pair_dim());
    for (const auto& [M, block] : h.blocks) {
        const auto& labels = h.basis_two_m1.at(M);
        const int n = block.dim();
        for (int k = 0; k < n; ++k) {
            const int i = h.product_index(labels[k], 2 * M - labels[k]);
            out.set(i, i, block.diag[k]);
            if (k + 1 < n) {
                const int j = h.product_index(labels[k + 1], 2 * M - labels[k + 1]);
                out.set(i, j, block.offdiag[k]);
            }
        }
    }
    return out;
}

linalg::SymMatrix dense_hamiltonian(const SpinPairParams& p) {
    validate(p);
    const int d = p.two_s + 1;
    const auto ops = spin_matrices(p.two_s);

    // sp(i,j): <slot i|s+|slot j> nonzero for j = i+1; sm is its transpose
    auto sp = [&](int i, int j) { return (j == i + 1) ? ops.splus_offdiag[i] : 0.0; };
    auto sz = [&](int i) { return ops.sz_diag[i]; };

    linalg::SymMatrix out(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const int row = a * d + b;
            out.add(row, row, -p.h1 * sz(a) - p.h2 * sz(b) + p.Jz * sz(a) * sz(b));
            for (int ap = 0; ap < d; ++ap)
                for (int bp = 0; bp < d; ++bp) {
                    const int col = ap * d + bp;
                    if (col <= row) continue;
                    // (J/2)(s1+ s2- + s1- s2+)
                    const double v = 0.5 * p.J * (sp(a, ap) * sp(bp, b) + sp(ap, a) * sp(b, bp));
                    if (v != 0.0) out.set(row, col, v);
                }
        }
    return out;
}

std::vector<double> full_spectrum(const BlockHamiltonian& h) {
    std::vector<double> all;
    all.reserve(h.pair_dim());
    for (const auto& [M, block] : h.blocks) {
        auto s = linalg::eig_sym_tridiag(block);
        all.insert(all.end(), s.eigenvalues.begin(), s.eigenvalues.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

SpinPairParams reduce(const SpinPairParams& p) {
    SpinPairParams out = p;
    if (out.D != 0.0) {
        out.J = reduce_couplings(out.J, out.D).J_eff;
        out.D = 0.0;
    }
    if (out.J < 0.0) out.J = -out.J;
    validate(out);
    if (!(out.J > 0.0)) throw std::invalid_argument("reduce: couplings vanish");
    return out;
}

namespace {

// Schmidt entropy (base 2) of a product-basis state vector, local helper for
// the gauge certificate; the measures module carries the public version.
double schmidt_entropy(const std::vector<double>& vec, int d) {
    linalg::SymMatrix rho1(d);
    for (int a = 0; a < d; ++a)
        for (int ap = a; ap < d; ++ap) {
            double acc = 0.0;
            for (int b = 0; b < d; ++b)
                acc += vec[static_cast<std::size_t>(a) * d + b] * vec[static_cast<std::size_t>(ap) * d + b];
            rho1.set(a, ap, acc);
        }
    auto s = linalg::eig_sym_dense(rho1);
    double ent = 0.0;
    for (double v : s.eigenvalues)
        if (v > 1e-14) ent -= v * std::log2(v);
    return ent;
}

}  // namespace

GaugeCertificate gauge_flip_J(const SpinPairParams& p) {
    SpinPairParams canon = reduce(p);
    auto h = build_hamiltonian(canon);

    GaugeCertificate cert;
    cert.reduced = canon;
    cert.max_spectrum_diff = 0.0;
    cert.max_entropy_diff = 0.0;

    const int d = canon.two_s + 1;
    for (const auto& [M, block] : h.blocks) {
        // H(-J) differs from H(J) only in the sign of the ladder part
        linalg::SymTridiag flipped = block;
        for (double& e : flipped.offdiag) e = -e;

        auto sp = linalg::eig_sym_tridiag(block);
        auto sm = linalg::eig_sym_tridiag(flipped);
        const auto& labels = h.basis_two_m1.at(M);
        const int n = block.dim();
        for (int k = 0; k < n; ++k) {
            cert.max_spectrum_diff =
                std::max(cert.max_spectrum_diff, std::abs(sp.eigenvalues[k] - sm.eigenvalues[k]));

            std::vector<double> va(static_cast<std::size_t>(d) * d, 0.0);
            std::vector<double> vb(static_cast<std::size_t>(d) * d, 0.0);
            for (int i = 0; i < n; ++i) {
                const int pi = h.product_index(labels[i], 2 * M - labels[i]);
                va[pi] = sp.vec(i, k);
                vb[pi] = sm.vec(i, k);
            }
            cert.max_entropy_diff = std::max(
                cert.max_entropy_diff, std::abs(schmidt_entropy(va, d) - schmidt_entropy(vb, d)));
        }
    }
    return cert;
}

double dm_reduction_error(const SpinPairParams& p) {
    if (p.J == 0.0 && p.D == 0.0)
        throw std::invalid_argument("dm_reduction_error: J and D cannot both vanish");

    // H' = A + iB with A the XXZ part and B the DM part; its spectrum is that
    // of the real symmetric embedding [[A, -B], [B, A]], doubled.
    const int d = p.two_s + 1;
    const int n = d * d;
    const auto ops = spin_matrices(p.two_s);
    auto spf = [&](int i, int j) { return (j == i + 1) ? ops.splus_offdiag[i] : 0.0; };
    auto sz = [&](int i) { return ops.sz_diag[i]; };

    linalg::SymMatrix emb(2 * n);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const int row = a * d + b;
            const double diag = -p.h1 * sz(a) - p.h2 * sz(b) + p.Jz * sz(a) * sz(b);
            emb.set(row, row, diag);
            emb.set(n + row, n + row, diag);
            for (int ap = 0; ap < d; ++ap)
                for (int bp = 0; bp < d; ++bp) {
                    const int col = ap * d + bp;
                    const double va = 0.5 * p.J * (spf(a, ap) * spf(bp, b) + spf(ap, a) * spf(b, bp));
                    // D (s1x s2y - s1y s2x) = (iD/2)(s1+ s2- - s1- s2+)
                    const double vb = 0.5 * p.D * (spf(a, ap) * spf(bp, b) - spf(ap, a) * spf(b, bp));
                    if (col > row && va != 0.0) {
                        emb.set(row, col, va);
                        emb.set(n + row, n + col, va);
                    }
                    if (vb != 0.0) {
                        // [[A, -B], [B, A]] with B antisymmetric
                        emb.set(n + row, col, vb);
                    }
                }
        }

    auto se = linalg::eig_sym_dense(emb);

    SpinPairParams eff = reduce(p);
    auto spec = full_spectrum(build_hamiltonian(eff));
    std::vector<double> doubled;
    doubled.reserve(2 * spec.size());
    for (double v : spec) {
        doubled.push_back(v);
        doubled.push_back(v);
    }
    std::sort(doubled.begin(), doubled.end());

    double worst = 0.0;
    for (std::size_t i = 0; i < doubled.size(); ++i)
        worst = std::max(worst, std::abs(doubled[i] - se.eigenvalues[i]));
    return worst;
}

}  // namespace spinpair::model
