#ifndef SPINPAIR_MODEL_HPP
#define SPINPAIR_MODEL_HPP

#include <map>
#include <vector>

#include "spinpair/linalg.hpp"

// Spin-s pair with XXZ exchange in a non-uniform transverse field,
//   H = -h1 s1z - h2 s2z + J (s1x s2x + s1y s2y) + Jz s1z s2z.
// [H, Sz] = 0, so H splits into one real symmetric tridiagonal block per
// total magnetization M. Spin labels are carried as doubled integers
// (two_s, two_m) to keep half-integer arithmetic exact.

namespace spinpair::model {

struct SpinPairParams {
    int two_s = 1;    // 2s, so s = two_s / 2
    double J = 1.0;   // transverse exchange, > 0 after reduction
    double Jz = 0.0;  // longitudinal exchange
    double h1 = 0.0;
    double h2 = 0.0;
    double D = 0.0;   // Dzyaloshinskii-Moriya coupling along z

    double s() const { return 0.5 * two_s; }
    int site_dim() const { return two_s + 1; }
    int pair_dim() const { return (two_s + 1) * (two_s + 1); }
};

void validate(const SpinPairParams& p);

/// Scales derived from the fields: eta = (h1-h2)/J, Delta = sqrt((h1-h2)^2+J^2),
/// h_avg = (h1+h2)/2.
struct DerivedScales {
    double eta;
    double Delta;
    double h_avg;
};

DerivedScales derived_scales(const SpinPairParams& p);

/// Single-site spin operators in the descending-m basis (m = s, s-1, ..., -s):
/// sz is diagonal; splus_offdiag[k] = <m_k|s+|m_{k+1}> = sqrt(s(s+1)-m(m+1)).
struct SpinOperators {
    std::vector<double> sz_diag;
    std::vector<double> splus_offdiag;
};

SpinOperators spin_matrices(int two_s);

/// Result of folding the DM coupling into the XX exchange:
/// J_eff = sqrt(J^2 + D^2), phi = atan2(D, J) (rotation angle at site 2).
struct ReducedCoupling {
    double J_eff;
    double phi;
};

ReducedCoupling reduce_couplings(double J, double D);

/// H restricted to fixed M, as a symmetric tridiagonal block. Basis within a
/// block is ordered by descending m1; basis_two_m1[k] = 2*m1 of slot k.
struct BlockHamiltonian {
    SpinPairParams params;
    std::map<int, linalg::SymTridiag> blocks;            // key: M = m1 + m2
    std::map<int, std::vector<int>> basis_two_m1;        // per-M doubled m1 labels

    int pair_dim() const { return params.pair_dim(); }
    /// Product-basis index of |m1, m2>, rows ordered (s,s), (s,s-1), ...
    int product_index(int two_m1, int two_m2) const;
};

/// Requires D already reduced away (p.D == 0) and J > 0.
BlockHamiltonian build_hamiltonian(const SpinPairParams& p);

/// Dense embedding of the blocks into the (2s+1)^2 product basis.
linalg::SymMatrix dense_embedding(const BlockHamiltonian& h);

/// Dense H built directly from Kronecker products of single-site operators;
/// independent of the block construction (no fixed-M bookkeeping shared).
linalg::SymMatrix dense_hamiltonian(const SpinPairParams& p);

/// All eigenvalues of H, ascending, collected across blocks.
std::vector<double> full_spectrum(const BlockHamiltonian& h);

/// Canonical form of the parameters: DM coupling folded into J, J made
/// positive by the site-2 pi-rotation gauge. Both leave spectrum and
/// eigenstate entanglement unchanged.
SpinPairParams reduce(const SpinPairParams& p);

/// J -> -J gauge certificate: max sorted-spectrum deviation and max deviation
/// of per-eigenstate (block, index-matched) entanglement entropies.
struct GaugeCertificate {
    SpinPairParams reduced;
    double max_spectrum_diff;
    double max_entropy_diff;
};

GaugeCertificate gauge_flip_J(const SpinPairParams& p);

/// DM reduction certificate: sorted spectrum of the explicit H' (with the DM
/// term, built as the real 2d x 2d embedding of the complex Hermitian matrix)
/// against the doubled spectrum of H(J_eff). Returns the max deviation.
double dm_reduction_error(const SpinPairParams& p);

}  // namespace spinpair::model

#endif
