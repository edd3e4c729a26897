#include "spinpair.h"

#include <cmath>
#include <new>
#include <stdexcept>

#include "spinpair/measures.hpp"
#include "spinpair/model.hpp"
#include "spinpair/phase.hpp"
#include "spinpair/thermal.hpp"

// Thin extern-C layer: opaque handles own the C++ objects, exceptions are
// mapped to status codes at the boundary.

using namespace spinpair;

struct sp_model {
    model::SpinPairParams params;  // reduced (D folded in, J > 0)
    model::BlockHamiltonian blocks;
};

struct sp_state {
    int two_s;
    thermal::DensityMatrix rho;
};

namespace {

sp_status map_exception() {
    try {
        throw;
    } catch (const phase::BracketError&) {
        return SP_ERR_NO_BRACKET;
    } catch (const std::invalid_argument&) {
        return SP_ERR_INVALID_PARAM;
    } catch (const std::bad_alloc&) {
        return SP_ERR_NUMERIC;
    } catch (const std::exception&) {
        return SP_ERR_NUMERIC;
    }
}

model::SpinPairParams to_params(const sp_params& p) {
    model::SpinPairParams out;
    out.two_s = p.two_s;
    out.J = p.j;
    out.Jz = p.jz;
    out.h1 = p.h1;
    out.h2 = p.h2;
    out.D = p.d;
    return out;
}

template <typename F>
sp_status guarded(F&& f) {
    try {
        f();
        return SP_OK;
    } catch (...) {
        return map_exception();
    }
}

}  // namespace

extern "C" {

const char* sp_status_message(sp_status status) {
    switch (status) {
        case SP_OK: return "ok";
        case SP_ERR_NULL_ARG: return "required pointer argument was NULL";
        case SP_ERR_INVALID_PARAM: return "parameter outside its documented domain";
        case SP_ERR_DOMAIN: return "operation undefined for this spin or state";
        case SP_ERR_NO_BRACKET: return "bisection could not bracket a sign change";
        case SP_ERR_NUMERIC: return "internal numerical failure";
    }
    return "unknown status";
}

const char* sp_version(void) { return SPINPAIR_VERSION_STRING; }

sp_status sp_model_create(const sp_params* params, sp_model** out) {
    if (!params || !out) return SP_ERR_NULL_ARG;
    *out = nullptr;
    return guarded([&] {
        auto reduced = model::reduce(to_params(*params));
        auto m = new sp_model{reduced, model::build_hamiltonian(reduced)};
        *out = m;
    });
}

void sp_model_destroy(sp_model* model) { delete model; }

sp_status sp_model_ground_state(const sp_model* model, double tol_deg, double* energy,
                                int* degeneracy, int* abs_magnetization) {
    if (!model || !energy || !degeneracy || !abs_magnetization) return SP_ERR_NULL_ARG;
    return guarded([&] {
        auto gs = thermal::ground_state(model->blocks,
                                        tol_deg > 0.0 ? tol_deg : thermal::kDefaultDegeneracyTol);
        *energy = gs.energy;
        *degeneracy = gs.degeneracy;
        *abs_magnetization = gs.min_abs_magnetization();
    });
}

sp_status sp_model_gap(const sp_model* model, double* gap) {
    if (!model || !gap) return SP_ERR_NULL_ARG;
    return guarded([&] { *gap = thermal::spectral_gap(model->blocks); });
}

sp_status sp_state_thermal(const sp_model* model, double temperature, sp_state** out) {
    if (!model || !out) return SP_ERR_NULL_ARG;
    *out = nullptr;
    return guarded([&] {
        auto rho = thermal::thermal_state(model->blocks, temperature);
        *out = new sp_state{model->params.two_s, std::move(rho)};
    });
}

void sp_state_destroy(sp_state* state) { delete state; }

sp_status sp_state_negativity(const sp_state* state, double* out) {
    if (!state || !out) return SP_ERR_NULL_ARG;
    return guarded([&] { *out = measures::negativity(state->rho, state->two_s); });
}

sp_status sp_state_concurrence(const sp_state* state, double* out) {
    if (!state || !out) return SP_ERR_NULL_ARG;
    if (state->two_s != 1) return SP_ERR_DOMAIN;
    return guarded([&] { *out = measures::concurrence_wootters(state->rho); });
}

sp_status sp_state_eof(const sp_state* state, double* out) {
    if (!state || !out) return SP_ERR_NULL_ARG;
    if (state->two_s != 1) return SP_ERR_DOMAIN;
    return guarded([&] {
        *out = measures::eof_from_concurrence(measures::concurrence_wootters(state->rho));
    });
}

sp_status sp_state_coherence(const sp_state* state, double* out) {
    if (!state || !out) return SP_ERR_NULL_ARG;
    return guarded([&] { *out = measures::rel_entropy_coherence(state->rho); });
}

sp_status sp_gs_boundary(const sp_params* params, int* entangled, double* margin) {
    if (!params || !entangled || !margin) return SP_ERR_NULL_ARG;
    return guarded([&] {
        auto v = phase::gs_boundary(model::reduce(to_params(*params)));
        *entangled = v.entangled_gs ? 1 : 0;
        *margin = v.margin;
    });
}

sp_status sp_critical_temperature(int two_s, double j, double jz, double* kt_c) {
    if (!kt_c) return SP_ERR_NULL_ARG;
    return guarded([&] {
        model::SpinPairParams p;
        p.two_s = two_s;
        p.J = j;
        p.Jz = jz;
        *kt_c = phase::critical_temperature(model::reduce(p));
    });
}

sp_status sp_stripe_width(int two_s, double j, double jz, double temperature, double* h_c) {
    if (!h_c) return SP_ERR_NULL_ARG;
    return guarded([&] {
        model::SpinPairParams p;
        p.two_s = two_s;
        p.J = j;
        p.Jz = jz;
        *h_c = phase::stripe_width(model::reduce(p), temperature).h_c;
    });
}

sp_status sp_jz_threshold(double j, double dh, double temperature, double* jz_min) {
    if (!jz_min) return SP_ERR_NULL_ARG;
    return guarded([&] { *jz_min = phase::jz_threshold(temperature, j, dh); });
}

sp_status sp_critical_points(int two_s, double j, double jz, double tol_deg, double* h_c,
                             int* degeneracy, double* energy, int* degeneracy_measured,
                             double* energy_measured) {
    if (!h_c || !degeneracy || !energy || !degeneracy_measured || !energy_measured)
        return SP_ERR_NULL_ARG;
    return guarded([&] {
        model::SpinPairParams p;
        p.two_s = two_s;
        p.J = j;
        p.Jz = jz;
        auto info = phase::critical_points(model::reduce(p),
                                           tol_deg > 0.0 ? tol_deg : thermal::kDefaultDegeneracyTol);
        *h_c = info.h_c;
        *degeneracy = info.degeneracy;
        *energy = info.energy;
        *degeneracy_measured = info.degeneracy_measured;
        *energy_measured = info.energy_measured;
    });
}

sp_status sp_lemma1_certificates(const sp_params* params, double temperature, double h_shift,
                                 sp_lemma1_report* out) {
    if (!params || !out) return SP_ERR_NULL_ARG;
    return guarded([&] {
        auto rep = phase::lemma1_certificates(model::reduce(to_params(*params)), temperature,
                                              h_shift);
        out->t2_max_abs_err = rep.t2_max_abs_err;
        out->det_rel_err = rep.det_rel_err;
        out->pt_negative_at_zero = rep.pt_negative_at_zero ? 1 : 0;
        out->pt_negative_at_shift = rep.pt_negative_at_shift ? 1 : 0;
        out->pt_sign_consistent = rep.pt_sign_consistent ? 1 : 0;
        out->precision_bits = rep.precision_bits;
    });
}

sp_status sp_dm_reduction_error(const sp_params* params, double* max_spectrum_diff) {
    if (!params || !max_spectrum_diff) return SP_ERR_NULL_ARG;
    return guarded([&] { *max_spectrum_diff = model::dm_reduction_error(to_params(*params)); });
}

sp_status sp_gauge_flip_error(const sp_params* params, double* max_spectrum_diff,
                              double* max_entropy_diff) {
    if (!params || !max_spectrum_diff || !max_entropy_diff) return SP_ERR_NULL_ARG;
    return guarded([&] {
        auto cert = model::gauge_flip_J(to_params(*params));
        *max_spectrum_diff = cert.max_spectrum_diff;
        *max_entropy_diff = cert.max_entropy_diff;
    });
}

}  // extern "C"
