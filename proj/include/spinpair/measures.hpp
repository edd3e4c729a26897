#ifndef SPINPAIR_MEASURES_HPP
#define SPINPAIR_MEASURES_HPP

#include <vector>

#include "spinpair/model.hpp"
#include "spinpair/thermal.hpp"

// Entanglement and coherence quantifiers: general dense-matrix routes plus
// the closed forms available for s = 1/2 and s = 1. All entropies are base 2.

namespace spinpair::measures {

/// Closed-form data for the s=1/2 thermal state in the standard basis,
///   rho = diag-block [[p+,0,0,0],[0,q+,w,0],[0,w,q-,0],[0,0,0,p-]].
/// Weights are normalized with energies shifted by e_shift, so the raw
/// partition function is z_shifted * exp(-beta * e_shift).
struct HalfSpinAnalytics {
    double Delta;
    double eta;
    double alpha_plus, alpha_minus;  // tan(alpha+-) = (h1 - h2 +- Delta)/J
    double p_plus, p_minus;          // aligned-state weights
    double q_plus, q_minus;          // M=0 diagonal entries
    double w;                        // M=0 off-diagonal entry (<= 0 for J > 0)
    double z_shifted;
    double e_shift;

    /// Eq.-(9) concurrence 2 max(|w| - sqrt(p+ p-), 0).
    double concurrence() const;
    /// Exact relative entropy of coherence -sum_nu (q_nu log q_nu - p0_nu log p0_nu).
    double coherence() const;

    double p0_plus, p0_minus;        // weights of the entangled M=0 eigenstates
};

HalfSpinAnalytics halfspin_analytics(const model::SpinPairParams& p, double temperature);

/// Closed-form data for the s=1 pair: |Psi_+-1> mixing angles for any Jz and
/// the M=0 coefficients (gamma_+, gamma_0, gamma_-), the latter for Jz=0 only.
struct SpinOneAnalytics {
    double eta;
    double alpha_plus, alpha_minus;  // tan(alpha+-) = +-eta/2 - sqrt(1+eta^2/4)
    double gamma_plus, gamma_zero, gamma_minus;  // normalized, Jz=0 closed form

    /// N(|Psi_+-1>) = |sin 2 alpha|/2 = 1/sqrt(4+eta^2).
    double negativity_m1() const;
    /// N(|Psi_0>) = [|g+ g-| + |g0|(|g+|+|g-|)]/2 (Jz=0).
    double negativity_m0() const;
    /// Same quantity written directly in eta (Jz=0).
    double negativity_m0_eta_form() const;
};

SpinOneAnalytics spinone_analytics(double eta);

/// C(|Psi+->) = J/Delta for the s=1/2 pair (pure M=0 eigenstates).
double concurrence_pure_psi(const model::SpinPairParams& p);

/// Wootters concurrence of a two-qubit state. States are real in this basis,
/// so the spin flip is the fixed signed permutation sigma_y x sigma_y and the
/// algorithm stays in real symmetric algebra via sqrt(rho).
double concurrence_wootters(const thermal::DensityMatrix& rho);

/// Entanglement of formation from a concurrence value in [0, 1].
double eof_from_concurrence(double c);

/// Negativity (Tr|rho^{t2}| - 1)/2 of a (2s+1)^2 state.
double negativity(const thermal::DensityMatrix& rho, int two_s);

/// Pure-state negativity from the one-spin reduced state,
/// N = [(Tr sqrt(rho_1))^2 - 1]/2. Input must be normalized (tol 1e-10).
double negativity_pure(const std::vector<double>& state, int two_s);

/// Entanglement entropy -Tr rho_1 log2 rho_1 of a normalized pure state.
double entanglement_entropy_pure(const std::vector<double>& state, int two_s);

/// Relative entropy of coherence S(rho_diag) - S(rho) in the standard basis.
double rel_entropy_coherence(const thermal::DensityMatrix& rho);

/// High-temperature asymptote of the coherence: the general leading term
/// (s(s+1) J / kT)^2 / (9 ln 2), with the known next-order corrections for
/// s = 1/2 (any Jz) and s = 1 (Jz = 0 form; leading term otherwise).
/// Valid for kT >> max(J, |Jz|, |h1|, |h2|).
double coherence_asymptotic(const model::SpinPairParams& p, double temperature);

/// Leading term alone, (s(s+1) J / kT)^2 / (9 ln 2).
double coherence_asymptotic_leading(const model::SpinPairParams& p, double temperature);

/// Shannon entropy (base 2) of a weight vector; weights below 1e-14 dropped.
double entropy_base2(const std::vector<double>& weights);

}  // namespace spinpair::measures

#endif
