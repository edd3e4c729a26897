#ifndef SPINPAIR_HIGHPREC_HPP
#define SPINPAIR_HIGHPREC_HPP

#include "spinpair/model.hpp"

// Adaptive-precision backend for the average-field certificates. The
// conjugation factors e^{beta h M/2} and the Boltzmann weights span exponent
// ranges far beyond double for low temperatures or large average-field
// shifts, so the identities are verified in MPFR arithmetic with the
// precision chosen from the exponent budget of each call.

namespace spinpair::hp {

struct Lemma1Numbers {
    double t2_max_abs_err;      // max entry deviation, shifted state vs conjugated state
    double det_rel_err;         // |det ratio - 1| for the determinant scaling identity
    bool pt_negative_at_zero;   // partial transpose not positive definite at h_avg = 0
    bool pt_negative_at_shift;  // same at h_avg = h_shift
    unsigned precision_bits;
};

/// Verifies the three average-field certificates for the state with field
/// difference dh (fields +-dh/2) at temperature T > 0, shifted by h_shift.
Lemma1Numbers lemma1_check(int two_s, double J, double Jz, double dh, double temperature,
                           double h_shift);

}  // namespace spinpair::hp

#endif
