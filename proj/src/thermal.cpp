#include "spinpair/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spinpair::thermal {

int GroundStateInfo::min_abs_magnetization() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& m : members) best = std::min(best, std::abs(m.magnetization));
    return best;
}

GroundStateInfo ground_state(const model::BlockHamiltonian& h, double tol_deg) {
    GroundStateInfo info;
    info.tol_deg = tol_deg;
    info.energy = std::numeric_limits<double>::infinity();

    std::vector<std::pair<int, linalg::SpectralDecomposition>> decomps;
    for (const auto& [M, block] : h.blocks) {
        decomps.emplace_back(M, linalg::eig_sym_tridiag(block));
        info.energy = std::min(info.energy, decomps.back().second.eigenvalues.front());
    }

    const double window = tol_deg * (1.0 + std::abs(info.energy));
    for (const auto& [M, dec] : decomps) {
        for (int k = 0; k < dec.dim; ++k) {
            if (dec.eigenvalues[k] - info.energy > window) break;
            GroundStateMember member;
            member.magnetization = M;
            member.index_in_block = k;
            member.vector.resize(dec.dim);
            for (int i = 0; i < dec.dim; ++i) member.vector[i] = dec.vec(i, k);
            info.members.push_back(std::move(member));
        }
    }
    info.degeneracy = static_cast<int>(info.members.size());
    return info;
}

double spectral_gap(const model::BlockHamiltonian& h) {
    auto spec = model::full_spectrum(h);
    return spec.size() > 1 ? spec[1] - spec[0] : 0.0;
}

std::vector<double> embed_block_vector(const model::BlockHamiltonian& h, int magnetization,
                                       const std::vector<double>& block_vec) {
    const auto& labels = h.basis_two_m1.at(magnetization);
    if (labels.size() != block_vec.size())
        throw std::invalid_argument("embed_block_vector: size mismatch");
    std::vector<double> out(h.pair_dim(), 0.0);
    for (std::size_t k = 0; k < labels.size(); ++k)
        out[h.product_index(labels[k], 2 * magnetization - labels[k])] = block_vec[k];
    return out;
}

DensityMatrix thermal_state(const model::BlockHamiltonian& h, double temperature,
                            double tol_deg) {
    if (temperature < 0.0) throw std::invalid_argument("thermal_state: negative temperature");

    const int dim = h.pair_dim();
    DensityMatrix rho;
    rho.entries = linalg::SymMatrix(dim);
    rho.block_diagonal = true;

    if (temperature == 0.0) {
        auto gs = ground_state(h, tol_deg);
        const double weight = 1.0 / gs.degeneracy;
        for (const auto& member : gs.members) {
            auto vec = embed_block_vector(h, member.magnetization, member.vector);
            for (int i = 0; i < dim; ++i) {
                if (vec[i] == 0.0) continue;
                for (int j = i; j < dim; ++j)
                    rho.entries.add(i, j, weight * vec[i] * vec[j]);
            }
        }
        return rho;
    }

    const double beta = 1.0 / temperature;

    double e_min = std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, linalg::SpectralDecomposition>> decomps;
    for (const auto& [M, block] : h.blocks) {
        decomps.emplace_back(M, linalg::eig_sym_tridiag(block));
        e_min = std::min(e_min, decomps.back().second.eigenvalues.front());
    }

    double z = 0.0;
    for (const auto& [M, dec] : decomps)
        for (double e : dec.eigenvalues) z += std::exp(-beta * (e - e_min));

    for (const auto& [M, dec] : decomps) {
        const auto& labels = h.basis_two_m1.at(M);
        const int n = dec.dim;
        for (int a = 0; a < n; ++a) {
            const int i = h.product_index(labels[a], 2 * M - labels[a]);
            for (int b = a; b < n; ++b) {
                const int j = h.product_index(labels[b], 2 * M - labels[b]);
                double acc = 0.0;
                for (int k = 0; k < n; ++k)
                    acc += dec.vec(a, k) * std::exp(-beta * (dec.eigenvalues[k] - e_min)) *
                           dec.vec(b, k);
                rho.entries.set(i, j, acc / z);
            }
        }
    }
    return rho;
}

linalg::SymMatrix reduced_state(const DensityMatrix& rho, int site, int two_s) {
    const int d = two_s + 1;
    if (rho.dim() != d * d)
        throw std::invalid_argument("reduced_state: dim(rho) must be (2s+1)^2");
    if (site != 1 && site != 2) throw std::invalid_argument("reduced_state: site must be 1 or 2");

    linalg::SymMatrix out(d);
    for (int a = 0; a < d; ++a)
        for (int ap = a; ap < d; ++ap) {
            double acc = 0.0;
            for (int b = 0; b < d; ++b)
                acc += (site == 1) ? rho.entries(a * d + b, ap * d + b)
                                   : rho.entries(b * d + a, b * d + ap);
            out.set(a, ap, acc);
        }
    return out;
}

DensityMatrix projector(const std::vector<double>& state) {
    const int n = static_cast<int>(state.size());
    DensityMatrix rho;
    rho.entries = linalg::SymMatrix(n);
    rho.block_diagonal = false;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rho.entries.set(i, j, state[i] * state[j]);
    return rho;
}

}  // namespace spinpair::thermal
