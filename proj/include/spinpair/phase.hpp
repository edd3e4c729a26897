#ifndef SPINPAIR_PHASE_HPP
#define SPINPAIR_PHASE_HPP

#include <stdexcept>
#include <vector>

#include "spinpair/model.hpp"
#include "spinpair/thermal.hpp"

// Phase structure: analytic ground-state boundary, critical temperatures,
// separability-stripe widths, the critical points on the h1 = -h2 line, and
// the average-field (Lemma 1) certificates.

namespace spinpair::phase {

/// Bisection could not bracket a sign change within the allowed range.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Binding { c0_upper, c1_hyperbola, c2_hyperbola };

/// Ground-state entanglement verdict from the closed-form boundary
/// |h1+h2| < 2s Jz + sqrt(4 s^2 J^2 + (h1-h2)^2). The binding tag names the
/// equivalent hyperbola branch by the sign of h1+h2 (c0 on the symmetric line).
struct BoundaryVerdict {
    bool entangled_gs;
    Binding binding_inequality;
    double margin;  // RHS - |h1+h2|; > 0 strictly inside the entangled sector
};

BoundaryVerdict gs_boundary(const model::SpinPairParams& p);

/// |M| of the ground state on a rectangular field grid (h1-outer, row-major),
/// with the degeneracy count found at tol_deg. Boundary-degenerate nodes take
/// the lower |M|.
struct MagnetizationMap {
    std::vector<double> h1_values;
    std::vector<double> h2_values;
    std::vector<int> abs_m;
    std::vector<int> degeneracy;

    int at(int i, int j) const { return abs_m[static_cast<std::size_t>(i) * h2_values.size() + j]; }
    int deg_at(int i, int j) const {
        return degeneracy[static_cast<std::size_t>(i) * h2_values.size() + j];
    }
};

MagnetizationMap gs_magnetization_map(const model::SpinPairParams& base, double h1_min,
                                      double h1_max, int n1, double h2_min, double h2_max, int n2,
                                      double tol_deg = thermal::kDefaultDegeneracyTol);

/// Minimal eigenvalue of the partial transpose of the thermal state.
double min_pt_eigenvalue(const model::SpinPairParams& p, double temperature);

/// Entanglement classifier used by the bisections: lambda_min < -1e-12.
/// Deep inside the stripe the exact lambda_min is positive but exponentially
/// small, i.e. pure rounding noise in double, so a strict sign test is not
/// usable there.
inline constexpr double kPtSignThreshold = 1e-12;
bool thermally_entangled(const model::SpinPairParams& p, double temperature);

enum class StripeMethod { analytic_s_half, bisection_negativity };

struct StripeResult {
    double h_c;  // thermal state entangled iff |h1 - h2| > h_c; 0 if the whole line is
    double temperature;
    StripeMethod method;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

/// Threshold field difference h_c(T, J, Jz); fields in `base` are ignored.
/// s = 1/2 evaluates the closed form h_c = sqrt(Delta_c^2 - J^2) with
/// Delta_c = 2kT f^{-1}((2kT/J) e^{-beta Jz/2}), f(x) = sinh(x)/x; higher s
/// bisects |h1-h2| along h1 = -h2 on the minimal-PT-eigenvalue sign.
StripeResult stripe_width(const model::SpinPairParams& base, double temperature);

/// The bisection path for any s (cross-checks the s = 1/2 closed form).
StripeResult stripe_width_numeric(const model::SpinPairParams& base, double temperature);

/// Limit temperature for whole-plane entanglement at h1 = h2. Returns 0 for
/// Jz <= -J (the stripe exists at every T > 0). s = 1/2 solves
/// e^{beta Jz/2} sinh(beta J/2) = 1; higher s bisects on the PT sign at zero field.
double critical_temperature(const model::SpinPairParams& base);

/// Jz threshold for thermal entanglement at field difference dh (s = 1/2,
/// Eq. form 2kT ln[(Delta/J)/sinh(beta Delta/2)]).
double jz_threshold(double temperature, double J, double dh);

/// The 4s+1-fold degenerate points h1 = -h2 = +-h_c/2 for Jz < -J, with the
/// numeric re-derivation via ground_state at the exact location.
struct CriticalPointInfo {
    double h_c;             // 2s sqrt(Jz^2 - J^2)
    int degeneracy;         // 4s + 1
    double energy;          // s^2 Jz
    int degeneracy_measured;
    double energy_measured;
};

CriticalPointInfo critical_points(const model::SpinPairParams& base,
                                  double tol_deg = thermal::kDefaultDegeneracyTol);

/// Average-field certificates at field difference p.h1 - p.h2 (baseline
/// h_avg = 0): (a) the entrywise conjugation identity for the partial
/// transpose, (b) its determinant-scaling corollary, (c) invariance of the
/// PT-positivity verdict under the shift. Computed in adaptive-precision
/// arithmetic; precision_bits reports the working precision used.
struct Lemma1Report {
    double t2_max_abs_err;
    double det_rel_err;
    bool pt_negative_at_zero;
    bool pt_negative_at_shift;
    bool pt_sign_consistent;
    unsigned precision_bits;
};

Lemma1Report lemma1_certificates(const model::SpinPairParams& p, double temperature,
                                 double h_shift);

}  // namespace spinpair::phase

#endif
