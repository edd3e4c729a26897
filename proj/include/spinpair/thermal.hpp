#ifndef SPINPAIR_THERMAL_HPP
#define SPINPAIR_THERMAL_HPP

#include <vector>

#include "spinpair/linalg.hpp"
#include "spinpair/model.hpp"

// Ground-state extraction with degeneracy accounting, Gibbs states built
// block by block, and single-spin reduced states.

namespace spinpair::thermal {

inline constexpr double kDefaultDegeneracyTol = 1e-9;  // relative

/// One member of a (possibly degenerate) ground level.
struct GroundStateMember {
    int magnetization;              // block M
    int index_in_block;             // energy-ordered index within the block
    std::vector<double> vector;     // eigenvector in block coordinates
};

struct GroundStateInfo {
    double energy;
    int degeneracy;
    std::vector<GroundStateMember> members;
    double tol_deg;

    /// Smallest |M| among the members (boundary nodes take the lower-|M| phase).
    int min_abs_magnetization() const;
};

GroundStateInfo ground_state(const model::BlockHamiltonian& h,
                             double tol_deg = kDefaultDegeneracyTol);

/// Energy gap between the two lowest eigenvalues of the full spectrum
/// (0 when the ground level is exactly degenerate).
double spectral_gap(const model::BlockHamiltonian& h);

struct DensityMatrix {
    linalg::SymMatrix entries;
    bool block_diagonal = false;  // commutes with Sz

    int dim() const { return entries.dim(); }
};

/// Gibbs state Z^{-1} e^{-beta H} for T > 0 (energies shifted by the global
/// minimum before exponentiating); for T = 0, the uniform mixture over the
/// ground level found with tol_deg.
DensityMatrix thermal_state(const model::BlockHamiltonian& h, double temperature,
                            double tol_deg = kDefaultDegeneracyTol);

/// Partial trace over the other site; site is 1 or 2.
linalg::SymMatrix reduced_state(const DensityMatrix& rho, int site, int two_s);

/// Projector onto a product-basis state vector (test and T=0 plumbing).
DensityMatrix projector(const std::vector<double>& state);

/// Embed a block-coordinate eigenvector into the product basis.
std::vector<double> embed_block_vector(const model::BlockHamiltonian& h, int magnetization,
                                       const std::vector<double>& block_vec);

}  // namespace spinpair::thermal

#endif
