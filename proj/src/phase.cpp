#include "spinpair/phase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "highprec.hpp"

namespace spinpair::phase {

namespace {

double logsinh(double x) {
    // log(sinh x) for x > 0 without overflow
    if (x > 1e-3) return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
    return std::log(x) + std::log1p(x * x / 6.0);
}

model::SpinPairParams with_fields(const model::SpinPairParams& base, double h1, double h2) {
    model::SpinPairParams p = base;
    p.h1 = h1;
    p.h2 = h2;
    return p;
}

}  // namespace

BoundaryVerdict gs_boundary(const model::SpinPairParams& p) {
    model::validate(p);
    const double s = p.s();
    const double rhs = 2.0 * s * p.Jz + std::hypot(2.0 * s * p.J, p.h1 - p.h2);
    const double hsum = p.h1 + p.h2;

    BoundaryVerdict v;
    v.margin = rhs - std::abs(hsum);
    v.entangled_gs = v.margin > 0.0;
    v.binding_inequality = (hsum > 0.0)   ? Binding::c1_hyperbola
                           : (hsum < 0.0) ? Binding::c2_hyperbola
                                          : Binding::c0_upper;
    return v;
}

MagnetizationMap gs_magnetization_map(const model::SpinPairParams& base, double h1_min,
                                      double h1_max, int n1, double h2_min, double h2_max, int n2,
                                      double tol_deg) {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("gs_magnetization_map: grid resolution must be >= 2");

    MagnetizationMap map;
    map.h1_values.resize(n1);
    map.h2_values.resize(n2);
    for (int i = 0; i < n1; ++i) map.h1_values[i] = h1_min + (h1_max - h1_min) * i / (n1 - 1);
    for (int j = 0; j < n2; ++j) map.h2_values[j] = h2_min + (h2_max - h2_min) * j / (n2 - 1);

    map.abs_m.resize(static_cast<std::size_t>(n1) * n2);
    map.degeneracy.resize(map.abs_m.size());
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            auto h = model::build_hamiltonian(with_fields(base, map.h1_values[i], map.h2_values[j]));
            auto gs = thermal::ground_state(h, tol_deg);
            map.abs_m[static_cast<std::size_t>(i) * n2 + j] = gs.min_abs_magnetization();
            map.degeneracy[static_cast<std::size_t>(i) * n2 + j] = gs.degeneracy;
        }
    return map;
}

double min_pt_eigenvalue(const model::SpinPairParams& p, double temperature) {
    const int d = p.two_s + 1;
    auto rho = thermal::thermal_state(model::build_hamiltonian(p), temperature);
    auto pt = linalg::partial_transpose(rho.entries, d, d);
    return linalg::eig_sym_dense(pt).eigenvalues.front();
}

bool thermally_entangled(const model::SpinPairParams& p, double temperature) {
    return min_pt_eigenvalue(p, temperature) < -kPtSignThreshold;
}

StripeResult stripe_width_numeric(const model::SpinPairParams& base, double temperature) {
    if (!(temperature > 0.0)) throw std::invalid_argument("stripe_width: requires T > 0");

    const double s = base.s();
    const double scale = s * std::max(base.J, std::abs(base.Jz));
    auto entangled = [&](double dh) {
        return thermally_entangled(with_fields(base, 0.5 * dh, -0.5 * dh), temperature);
    };

    StripeResult r;
    r.temperature = temperature;
    r.method = StripeMethod::bisection_negativity;

    if (entangled(0.0)) {
        r.h_c = 0.0;
        return r;
    }

    double lo = 0.0;
    double hi = 2.0 * scale;
    const double limit = 20.0 * scale;
    while (!entangled(hi)) {
        if (hi >= limit)
            throw BracketError("stripe_width: no entanglement onset up to 20 s max(J,|Jz|)");
        hi = std::min(2.0 * hi, limit);
    }
    r.bracket_lo = lo;
    r.bracket_hi = hi;

    while (hi - lo > 1e-10 * base.J) {
        const double mid = 0.5 * (lo + hi);
        (entangled(mid) ? hi : lo) = mid;
    }
    r.h_c = 0.5 * (lo + hi);
    return r;
}

StripeResult stripe_width(const model::SpinPairParams& base, double temperature) {
    if (!(temperature > 0.0)) throw std::invalid_argument("stripe_width: requires T > 0");
    model::validate(base);
    if (base.two_s != 1) return stripe_width_numeric(base, temperature);

    StripeResult r;
    r.temperature = temperature;
    r.method = StripeMethod::analytic_s_half;
    r.h_c = 0.0;

    // Delta_c = 2kT f^{-1}((2kT/J) e^{-beta Jz/2}), f(x) = sinh(x)/x increasing
    const double beta = 1.0 / temperature;
    const double log_y = std::log(2.0 * temperature / base.J) - 0.5 * beta * base.Jz;
    if (log_y <= 0.0) return r;  // f^{-1} argument <= 1: no onset, stripe absent

    auto g = [&](double x) { return logsinh(x) - std::log(x) - log_y; };
    double lo = 1e-300, hi = 1.0;
    while (g(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    const double delta_c = 2.0 * temperature * 0.5 * (lo + hi);
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    if (delta_c > base.J) r.h_c = std::sqrt(delta_c * delta_c - base.J * base.J);
    return r;
}

double critical_temperature(const model::SpinPairParams& base) {
    model::validate(base);
    if (base.Jz <= -base.J) return 0.0;

    if (base.two_s == 1) {
        // root of e^{beta Jz/2} sinh(beta J/2) = 1; LHS increasing in beta for Jz > -J
        auto g = [&](double beta) { return 0.5 * beta * base.Jz + logsinh(0.5 * beta * base.J); };
        double lo = 1e-12, hi = 1.0 / base.J;
        while (g(hi) < 0.0) hi *= 2.0;
        while (g(lo) > 0.0) lo *= 0.5;
        while (hi - lo > 1e-12 * hi) {
            const double mid = 0.5 * (lo + hi);
            (g(mid) < 0.0 ? lo : hi) = mid;
        }
        return 2.0 / (lo + hi);
    }

    const double scale = std::max(base.J, std::abs(base.Jz));
    auto entangled = [&](double t) { return thermally_entangled(with_fields(base, 0.0, 0.0), t); };

    double lo = 0.01 * scale;
    while (!entangled(lo)) {
        lo *= 0.5;
        if (lo < 1e-8 * scale)
            throw BracketError("critical_temperature: no entanglement at low T");
    }
    double hi = scale;
    while (entangled(hi)) {
        hi *= 2.0;
        if (hi > 1e4 * scale)
            throw BracketError("critical_temperature: entangled beyond 1e4 max(J,|Jz|)");
    }
    while (hi - lo > 1e-10 * hi) {
        const double mid = 0.5 * (lo + hi);
        (entangled(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double jz_threshold(double temperature, double J, double dh) {
    if (!(temperature > 0.0)) throw std::invalid_argument("jz_threshold: requires T > 0");
    if (!(J > 0.0)) throw std::invalid_argument("jz_threshold: requires J > 0");
    const double delta = std::hypot(dh, J);
    const double beta = 1.0 / temperature;
    return 2.0 * temperature * (std::log(delta / J) - logsinh(0.5 * beta * delta));
}

CriticalPointInfo critical_points(const model::SpinPairParams& base, double tol_deg) {
    model::validate(base);
    if (!(base.Jz < -base.J))
        throw std::invalid_argument("critical_points: requires Jz < -J");

    const double s = base.s();
    CriticalPointInfo info;
    info.h_c = 2.0 * s * std::sqrt(base.Jz * base.Jz - base.J * base.J);
    info.degeneracy = 2 * base.two_s + 1;  // 4s + 1
    info.energy = s * s * base.Jz;

    auto h = model::build_hamiltonian(with_fields(base, 0.5 * info.h_c, -0.5 * info.h_c));
    auto gs = thermal::ground_state(h, tol_deg);
    info.degeneracy_measured = gs.degeneracy;
    info.energy_measured = gs.energy;
    return info;
}

Lemma1Report lemma1_certificates(const model::SpinPairParams& p, double temperature,
                                 double h_shift) {
    model::validate(p);
    auto n = hp::lemma1_check(p.two_s, p.J, p.Jz, p.h1 - p.h2, temperature, h_shift);

    Lemma1Report rep;
    rep.t2_max_abs_err = n.t2_max_abs_err;
    rep.det_rel_err = n.det_rel_err;
    rep.pt_negative_at_zero = n.pt_negative_at_zero;
    rep.pt_negative_at_shift = n.pt_negative_at_shift;
    rep.pt_sign_consistent = (n.pt_negative_at_zero == n.pt_negative_at_shift);
    rep.precision_bits = n.precision_bits;
    return rep;
}

}  // namespace spinpair::phase
