#include "highprec.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinpair::hp {

namespace {

using big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

struct Mat {
    int n = 0;
    std::vector<big> a;

    explicit Mat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, big(0)) {}
    big& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const big& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Cyclic Jacobi; block sizes here are at most 2s+1, so simplicity wins.
void jacobi_eig(Mat a, std::vector<big>& evals, Mat& vecs) {
    const int n = a.n;
    vecs = Mat(n);
    for (int i = 0; i < n; ++i) vecs.at(i, i) = 1;

    if (n == 1) {
        evals.assign(1, a.at(0, 0));
        return;
    }

    big norm = 0;
    for (const big& v : a.a) norm += v * v;
    norm = sqrt(norm);
    const big tol = norm * pow(big(2), -static_cast<long>(big::default_precision() * 3.2));

    big prev_off = -1;
    for (int sweep = 0; sweep < 200; ++sweep) {
        big off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        off = sqrt(off);
        if (off <= tol) break;
        if (prev_off >= 0 && off >= prev_off) break;  // stagnated at rounding level
        prev_off = off;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (a.at(p, q) == 0) continue;
                const big theta = (a.at(q, q) - a.at(p, p)) / (2 * a.at(p, q));
                big t = 1 / (abs(theta) + sqrt(theta * theta + 1));
                if (theta < 0) t = -t;
                const big c = 1 / sqrt(t * t + 1);
                const big s = t * c;

                for (int k = 0; k < n; ++k) {
                    const big akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const big apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const big vkp = vecs.at(k, p), vkq = vecs.at(k, q);
                    vecs.at(k, p) = c * vkp - s * vkq;
                    vecs.at(k, q) = s * vkp + c * vkq;
                }
            }
    }

    evals.resize(n);
    for (int i = 0; i < n; ++i) evals[i] = a.at(i, i);
}

// det by LU with partial pivoting.
big lu_det(Mat a) {
    const int n = a.n;
    big det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (abs(a.at(i, k)) > abs(a.at(piv, k))) piv = i;
        if (a.at(piv, k) == 0) return big(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const big f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

// Strict positive-definiteness via Cholesky pivots.
bool cholesky_pd(const Mat& a) {
    const int n = a.n;
    Mat l(n);
    for (int j = 0; j < n; ++j) {
        big diag = a.at(j, j);
        for (int k = 0; k < j; ++k) diag -= l.at(j, k) * l.at(j, k);
        if (diag <= 0) return false;
        l.at(j, j) = sqrt(diag);
        for (int i = j + 1; i < n; ++i) {
            big v = a.at(i, j);
            for (int k = 0; k < j; ++k) v -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = v / l.at(j, j);
        }
    }
    return true;
}

struct ThermalBig {
    Mat rho;
    big log_z;

    explicit ThermalBig(int dim) : rho(dim), log_z(0) {}
};

// sqrt(s(s+1) - m(m+1)) from doubled labels.
big raise_factor_big(int two_s, int two_m) {
    return sqrt(big(two_s * (two_s + 2) - two_m * (two_m + 2))) / 2;
}

// Gibbs state over the fixed-M blocks, fields (dh/2 + h, -dh/2 + h). Block
// entries are formed in big so that H(h) = H(0) - h Sz holds to working
// precision by construction, as in the average-field decomposition.
ThermalBig thermal_big(int two_s, double J, double Jz, double dh, double h, const big& beta) {
    const int d = two_s + 1;
    ThermalBig out(d * d);

    const big h1 = big(dh) / 2 + big(h);
    const big h2 = -big(dh) / 2 + big(h);
    const big jz(Jz), jx(J);

    // first pass: global minimum energy
    std::vector<std::vector<big>> all_evals;
    std::vector<Mat> all_vecs;
    std::vector<std::vector<int>> all_labels;

    big e_min;
    bool have_min = false;
    for (int M = -two_s; M <= two_s; ++M) {
        const int hi_l = std::min(two_s, 2 * M + two_s);
        const int lo_l = std::max(-two_s, 2 * M - two_s);
        std::vector<int> labels;
        for (int tm = hi_l; tm >= lo_l; tm -= 2) labels.push_back(tm);
        const int n = static_cast<int>(labels.size());

        Mat block(n);
        for (int k = 0; k < n; ++k) {
            const big m1 = big(labels[k]) / 2;
            const big m2 = big(M) - m1;
            block.at(k, k) = -h1 * m1 - h2 * m2 + jz * m1 * m2;
        }
        for (int k = 0; k + 1 < n; ++k) {
            const big v = jx / 2 * raise_factor_big(two_s, labels[k] - 2) *
                          raise_factor_big(two_s, 2 * M - labels[k]);
            block.at(k, k + 1) = v;
            block.at(k + 1, k) = v;
        }

        std::vector<big> evals;
        Mat vecs(n);
        jacobi_eig(block, evals, vecs);
        for (const big& e : evals)
            if (!have_min || e < e_min) {
                e_min = e;
                have_min = true;
            }
        all_evals.push_back(std::move(evals));
        all_vecs.push_back(std::move(vecs));
        all_labels.push_back(std::move(labels));
    }

    big z = 0;
    for (const auto& evals : all_evals)
        for (const big& e : evals) z += exp(-beta * (e - e_min));
    out.log_z = log(z) - beta * e_min;

    auto product_index = [&](int two_m1, int two_m2) {
        return ((two_s - two_m1) / 2) * d + (two_s - two_m2) / 2;
    };

    for (std::size_t bi = 0; bi < all_evals.size(); ++bi) {
        const auto& labels = all_labels[bi];
        const int M = -two_s + static_cast<int>(bi);
        const int n = static_cast<int>(labels.size());
        for (int a = 0; a < n; ++a) {
            const int i = product_index(labels[a], 2 * M - labels[a]);
            for (int b = 0; b < n; ++b) {
                const int j = product_index(labels[b], 2 * M - labels[b]);
                big acc = 0;
                for (int k = 0; k < n; ++k)
                    acc += all_vecs[bi].at(a, k) * exp(-beta * (all_evals[bi][k] - e_min)) *
                           all_vecs[bi].at(b, k);
                out.rho.at(i, j) = acc / z;
            }
        }
    }
    return out;
}

Mat partial_transpose_big(const Mat& m, int d) {
    Mat r(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int ap = 0; ap < d; ++ap)
                for (int bp = 0; bp < d; ++bp)
                    r.at(a * d + b, ap * d + bp) = m.at(a * d + bp, ap * d + b);
    return r;
}

unsigned required_bits(int two_s, double J, double Jz, double dh, double beta, double h_shift) {
    // exponent budget: Boltzmann span at both field settings plus the
    // conjugation factors e^{beta h M / 2}
    const double s = 0.5 * two_s;
    const double field = 0.5 * std::abs(dh) + std::abs(h_shift);
    const double span = 2.0 * (s * s * std::abs(Jz) + s * std::abs(J) + 2.0 * s * field) + 8.0;
    const double nats = beta * (2.0 * span + 2.0 * std::abs(h_shift) * 2.0 * s) + 64.0;
    const double bits = 256.0 + nats * 1.4427;
    if (bits > static_cast<double>(1u << 22))
        throw std::invalid_argument("lemma1_check: temperature too low for certificate arithmetic");
    return static_cast<unsigned>(bits);
}

}  // namespace

Lemma1Numbers lemma1_check(int two_s, double J, double Jz, double dh, double temperature,
                           double h_shift) {
    if (two_s < 1) throw std::invalid_argument("lemma1_check: two_s must be >= 1");
    if (!(temperature > 0.0)) throw std::invalid_argument("lemma1_check: requires T > 0");
    if (!(J > 0.0)) throw std::invalid_argument("lemma1_check: requires J > 0");

    const double beta_d = 1.0 / temperature;
    const unsigned bits = required_bits(two_s, J, Jz, dh, beta_d, h_shift);
    const unsigned digits = static_cast<unsigned>(bits * 0.302) + 4;
    const unsigned saved = big::default_precision();
    big::default_precision(digits);

    Lemma1Numbers out{};
    out.precision_bits = bits;
    {
        const int d = two_s + 1;
        const big beta = 1 / big(temperature);

        ThermalBig base = thermal_big(two_s, J, Jz, dh, 0.0, beta);
        ThermalBig shifted = thermal_big(two_s, J, Jz, dh, h_shift, beta);

        Mat pt0 = partial_transpose_big(base.rho, d);
        Mat pth = partial_transpose_big(shifted.rho, d);

        // doubled magnetization labels of the product basis
        std::vector<int> two_m_sum(d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                two_m_sum[a * d + b] = (two_s - 2 * a) + (two_s - 2 * b);

        const big log_scale = base.log_z - shifted.log_z;
        const big bh = beta * big(h_shift);

        // (a) entrywise: rho^{t2}(h) = (Z0/Zh) e^{beta h Sz/2} rho^{t2}(0) e^{beta h Sz/2}
        big worst = 0;
        for (int i = 0; i < d * d; ++i)
            for (int j = 0; j < d * d; ++j) {
                const big expo = log_scale + bh * (two_m_sum[i] + two_m_sum[j]) / 4;
                const big rhs = exp(expo) * pt0.at(i, j);
                const big diff = abs(pth.at(i, j) - rhs);
                if (diff > worst) worst = diff;
            }
        out.t2_max_abs_err = worst.convert_to<double>();

        // (b) det[rho^{t2}(h)] = (Z0/Zh)^{d^2} det[rho^{t2}(0)]
        const big det_h = lu_det(pth);
        const big det_rhs = exp(log_scale * d * d) * lu_det(pt0);
        if (det_rhs == 0)
            out.det_rel_err = abs(det_h).convert_to<double>();
        else
            out.det_rel_err = abs(det_h / det_rhs - 1).convert_to<double>();

        // (c) positivity of the partial transpose is field-shift invariant
        out.pt_negative_at_zero = !cholesky_pd(pt0);
        out.pt_negative_at_shift = !cholesky_pd(pth);
    }
    big::default_precision(saved);
    return out;
}

}  // namespace spinpair::hp
