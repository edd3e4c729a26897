#include "spinpair/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinpair::measures {

namespace {

constexpr double kEntropyClip = 1e-14;
constexpr double kLn2 = 0.6931471805599453;

double xlog2x(double x) { return (x > kEntropyClip) ? x * std::log2(x) : 0.0; }

}  // namespace

double entropy_base2(const std::vector<double>& weights) {
    double s = 0.0;
    for (double w : weights) s -= xlog2x(w);
    return s;
}

double HalfSpinAnalytics::concurrence() const {
    return std::max(2.0 * (std::abs(w) - std::sqrt(p_plus * p_minus)), 0.0);
}

double HalfSpinAnalytics::coherence() const {
    return -(xlog2x(q_plus) + xlog2x(q_minus)) + (xlog2x(p0_plus) + xlog2x(p0_minus));
}

HalfSpinAnalytics halfspin_analytics(const model::SpinPairParams& p, double temperature) {
    if (p.two_s != 1) throw std::invalid_argument("halfspin_analytics: requires s = 1/2");
    if (temperature <= 0.0) throw std::invalid_argument("halfspin_analytics: requires T > 0");
    model::validate(p);

    const double dh = p.h1 - p.h2;
    const double Delta = std::hypot(dh, p.J);
    const double beta = 1.0 / temperature;

    const double E_up = -0.5 * (p.h1 + p.h2) + 0.25 * p.Jz;   // |00>, M = +1
    const double E_dn = +0.5 * (p.h1 + p.h2) + 0.25 * p.Jz;   // |11>, M = -1
    const double E0p = +0.5 * Delta - 0.25 * p.Jz;
    const double E0m = -0.5 * Delta - 0.25 * p.Jz;

    const double e0 = std::min(std::min(E_up, E_dn), E0m);
    const double a_up = std::exp(-beta * (E_up - e0));
    const double a_dn = std::exp(-beta * (E_dn - e0));
    const double a0p = std::exp(-beta * (E0p - e0));
    const double a0m = std::exp(-beta * (E0m - e0));
    const double z = a_up + a_dn + a0p + a0m;

    HalfSpinAnalytics out;
    out.Delta = Delta;
    out.eta = dh / p.J;
    out.alpha_plus = std::atan((dh + Delta) / p.J);
    out.alpha_minus = std::atan((dh - Delta) / p.J);
    out.p_plus = a_up / z;
    out.p_minus = a_dn / z;
    // q+- = e^{beta Jz/4} (cosh(beta Delta/2) +- (dh/Delta) sinh(beta Delta/2)) / Z,
    // written through the shifted M=0 weights for stability at large beta
    const double half_sum = 0.5 * (a0m + a0p) / z;
    const double half_diff = 0.5 * (a0m - a0p) / z;
    out.q_plus = half_sum + (dh / Delta) * half_diff;
    out.q_minus = half_sum - (dh / Delta) * half_diff;
    out.w = -(p.J / Delta) * half_diff;
    out.p0_plus = a0p / z;
    out.p0_minus = a0m / z;
    out.z_shifted = z;
    out.e_shift = e0;
    return out;
}

double SpinOneAnalytics::negativity_m1() const {
    return 0.5 * std::abs(std::sin(2.0 * alpha_plus));
}

double SpinOneAnalytics::negativity_m0() const {
    // pairwise Schmidt products; for normalized gammas the 1/2 of the
    // (Tr sqrt(rho1))^2 form cancels against the cross-term factor 2
    return std::abs(gamma_plus * gamma_minus) +
           std::abs(gamma_zero) * (std::abs(gamma_plus) + std::abs(gamma_minus));
}

double SpinOneAnalytics::negativity_m0_eta_form() const {
    double sum = 0.0;
    for (double nu : {+1.0, -1.0})
        sum += std::sqrt(1.0 + eta * (eta + nu * std::sqrt(2.0 + eta * eta)));
    return (1.0 + std::sqrt(2.0) * sum) / (2.0 * (2.0 + eta * eta));
}

SpinOneAnalytics spinone_analytics(double eta) {
    SpinOneAnalytics out;
    out.eta = eta;
    const double root = std::sqrt(1.0 + 0.25 * eta * eta);
    out.alpha_plus = std::atan(+0.5 * eta - root);
    out.alpha_minus = std::atan(-0.5 * eta - root);

    // Jz = 0 closed form: g0/g+ = eta - sqrt(2+eta^2), g-/g+ = 1 + eta g0/g+
    const double g0 = eta - std::sqrt(2.0 + eta * eta);
    const double gm = 1.0 + eta * g0;
    const double norm = std::sqrt(1.0 + g0 * g0 + gm * gm);
    out.gamma_plus = 1.0 / norm;
    out.gamma_zero = g0 / norm;
    out.gamma_minus = gm / norm;
    return out;
}

double concurrence_pure_psi(const model::SpinPairParams& p) {
    if (p.two_s != 1) throw std::invalid_argument("concurrence_pure_psi: requires s = 1/2");
    model::validate(p);
    return p.J / std::hypot(p.h1 - p.h2, p.J);
}

double concurrence_wootters(const thermal::DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("concurrence_wootters: requires dim 4");

    // flip = sigma_y x sigma_y, a signed permutation in the real standard basis
    linalg::SymMatrix flip(4);
    flip.set(0, 3, -1.0);
    flip.set(1, 2, 1.0);

    // lambda_i are the sqrt eigenvalues of rho rho~ = Y Y^T S Y Y^T S for the
    // square-root factor Y = V diag(sqrt w); the nonzero spectrum equals that
    // of K^2 with the symmetric K = Y^T S Y, so lambda_i = |eig K|. K entries
    // carry products of two square roots and stay accurate for near-singular
    // rho, unlike forming sqrt(rho) itself.
    auto dec = linalg::eig_sym_dense(rho.entries);
    std::vector<double> root_w(4);
    for (int k = 0; k < 4; ++k) root_w[k] = std::sqrt(std::max(dec.eigenvalues[k], 0.0));

    linalg::SymMatrix k_mat(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            double acc = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    acc += dec.vec(i, a) * flip(i, j) * dec.vec(j, b);
            k_mat.set(a, b, root_w[a] * acc * root_w[b]);
        }

    auto w = linalg::eig_sym_dense(k_mat).eigenvalues;
    std::vector<double> lam(4);
    for (int k = 0; k < 4; ++k) lam[k] = std::abs(w[k]);
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return std::max(lam[0] - lam[1] - lam[2] - lam[3], 0.0);
}

double eof_from_concurrence(double c) {
    constexpr double slack = 1e-12;
    if (c < -slack || c > 1.0 + slack)
        throw std::invalid_argument("eof_from_concurrence: C must lie in [0, 1]");
    c = std::clamp(c, 0.0, 1.0);
    const double root = std::sqrt(1.0 - c * c);
    return entropy_base2({0.5 * (1.0 + root), 0.5 * (1.0 - root)});
}

double negativity(const thermal::DensityMatrix& rho, int two_s) {
    const int d = two_s + 1;
    if (rho.dim() != d * d)
        throw std::invalid_argument("negativity: dim(rho) must be (2s+1)^2");
    return linalg::trace_norm_negativity(linalg::partial_transpose(rho.entries, d, d));
}

namespace {

linalg::SymMatrix reduced_from_pure(const std::vector<double>& state, int two_s) {
    const int d = two_s + 1;
    if (static_cast<int>(state.size()) != d * d)
        throw std::invalid_argument("pure-state measure: dim must be (2s+1)^2");
    double norm2 = 0.0;
    for (double v : state) norm2 += v * v;
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("pure-state measure: state not normalized");

    linalg::SymMatrix rho1(d);
    for (int a = 0; a < d; ++a)
        for (int ap = a; ap < d; ++ap) {
            double acc = 0.0;
            for (int b = 0; b < d; ++b)
                acc += state[static_cast<std::size_t>(a) * d + b] *
                       state[static_cast<std::size_t>(ap) * d + b];
            rho1.set(a, ap, acc);
        }
    return rho1;
}

}  // namespace

double negativity_pure(const std::vector<double>& state, int two_s) {
    auto dec = linalg::eig_sym_dense(reduced_from_pure(state, two_s));
    double tr_sqrt = 0.0;
    for (double v : dec.eigenvalues) tr_sqrt += std::sqrt(std::max(v, 0.0));
    return std::max(0.5 * (tr_sqrt * tr_sqrt - 1.0), 0.0);
}

double entanglement_entropy_pure(const std::vector<double>& state, int two_s) {
    auto dec = linalg::eig_sym_dense(reduced_from_pure(state, two_s));
    return entropy_base2(dec.eigenvalues);
}

double rel_entropy_coherence(const thermal::DensityMatrix& rho) {
    auto dec = linalg::eig_sym_dense(rho.entries);
    if (dec.eigenvalues.front() < -1e-10)
        throw std::invalid_argument("rel_entropy_coherence: state is not PSD");

    std::vector<double> diag(rho.dim());
    for (int i = 0; i < rho.dim(); ++i) diag[i] = rho.entries(i, i);
    return entropy_base2(diag) - entropy_base2(dec.eigenvalues);
}

double coherence_asymptotic_leading(const model::SpinPairParams& p, double temperature) {
    if (temperature <= 0.0) throw std::invalid_argument("coherence_asymptotic: requires T > 0");
    const double s = p.s();
    const double x = s * (s + 1.0) * p.J / temperature;
    return x * x / (9.0 * kLn2);
}

double coherence_asymptotic(const model::SpinPairParams& p, double temperature) {
    const double lead = coherence_asymptotic_leading(p, temperature);
    const double kt = temperature;
    const double hs = p.h1 + p.h2;
    const double hd = p.h1 - p.h2;

    if (p.two_s == 1) {
        // (J/kT)^2/(16 ln2) [1 + Jz/4kT - (3[(h1+h2)^2+J^2]+(h1-h2)^2)/48(kT)^2]
        return lead * (1.0 + p.Jz / (4.0 * kt) -
                       (3.0 * (hs * hs + p.J * p.J) + hd * hd) / (48.0 * kt * kt));
    }
    if (p.two_s == 2 && p.Jz == 0.0) {
        // 4(J/kT)^2/(9 ln2) [1 - (55 J^2 + 15(h1+h2)^2 + 9(h1-h2)^2)/(12 kT)^2]
        return lead * (1.0 - (55.0 * p.J * p.J + 15.0 * hs * hs + 9.0 * hd * hd) /
                                 (144.0 * kt * kt));
    }
    return lead;
}

}  // namespace spinpair::measures
