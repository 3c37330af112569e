#include "rotor/master.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

constexpr Complex kI(0.0, 1.0);

struct Cluster {
    double value = 0.0;  // mean of members
    double lo = 0.0;
    double hi = 0.0;
    std::vector<int> members;
};

// Sorted single-linkage clustering: a new cluster starts whenever the gap
// between consecutive sorted values reaches tol.
std::vector<Cluster> cluster_sorted(const std::vector<std::pair<double, int>>& sorted,
                                    double tol) {
    std::vector<Cluster> clusters;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (clusters.empty() || sorted[i].first - clusters.back().hi >= tol) {
            clusters.push_back(Cluster{0.0, sorted[i].first, sorted[i].first, {}});
        }
        clusters.back().hi = sorted[i].first;
        clusters.back().members.push_back(sorted[i].second);
    }
    for (auto& c : clusters) {
        c.value = 0.5 * (c.lo + c.hi);
    }
    return clusters;
}

Matrix dyad9(int f, int i) {
    Matrix m = Matrix::Zero(9, 9);
    m(f, i) = 1.0;
    return m;
}

void add_classical_terms(const RotorParams& p, const BathParams& b,
                         std::vector<LindbladTerm>* terms) {
    const Eigen::Matrix3d u = potts_potential(p);
    for (int ja = 0; ja < 3; ++ja) {
        for (int jb = 0; jb < 3; ++jb) {
            const int from = 3 * ja + jb;
            for (int step : {1, 2}) {  // +1 and -1 mod 3
                const int ka = (ja + step) % 3;
                const int kb = (jb + step) % 3;
                const double rate_a =
                    bath_rate(u(ja, jb) - u(ka, jb), b.beta(Particle::A), b.g(Particle::A));
                terms->push_back(LindbladTerm{rate_a, dyad9(3 * ka + jb, from),
                                              Particle::A, 0.0});
                const double rate_b =
                    bath_rate(u(ja, jb) - u(ja, kb), b.beta(Particle::B), b.g(Particle::B));
                terms->push_back(LindbladTerm{rate_b, dyad9(3 * ja + kb, from),
                                              Particle::B, 0.0});
            }
        }
    }
}

}  // namespace

double bath_rate(double omega, double beta, double g) {
    if (beta <= 0.0 || g <= 0.0) {
        throw std::invalid_argument("bath_rate: beta and g must be positive");
    }
    const double aw = std::abs(omega);
    if (aw < 1e-12) {
        return g / beta;
    }
    const double denom = -std::expm1(-beta * aw);
    const double base = g * aw / denom;
    return omega > 0.0 ? base : base * std::exp(beta * omega);
}

std::vector<std::pair<double, Matrix>> global_jump_ops(const Matrix& h,
                                                       const Matrix& a_op,
                                                       double gap_tol) {
    if (gap_tol <= 0.0) {
        throw std::invalid_argument("global_jump_ops: gap_tol must be positive");
    }
    const EigResult eig = hermitian_eig(h);
    if ((a_op - a_op.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("global_jump_ops: coupling operator not Hermitian");
    }
    const int dim = static_cast<int>(h.rows());

    // Cluster eigenvalues into levels.
    std::vector<std::pair<double, int>> evals;
    for (int i = 0; i < dim; ++i) {
        evals.emplace_back(eig.values(i), i);
    }
    const std::vector<Cluster> levels = cluster_sorted(evals, gap_tol);

    std::vector<double> energy;
    std::vector<Matrix> proj;
    for (const auto& level : levels) {
        double mean = 0.0;
        Matrix pi = Matrix::Zero(dim, dim);
        for (int idx : level.members) {
            mean += eig.values(idx);
            pi += eig.vectors.col(idx) * eig.vectors.col(idx).adjoint();
        }
        energy.push_back(mean / static_cast<double>(level.members.size()));
        proj.push_back(std::move(pi));
    }

    // All ordered level pairs give candidate gaps omega = E_k - E_m with
    // operator Pi_m A Pi_k; equal gaps are merged by the same clustering.
    std::vector<double> gap_value;
    std::vector<Matrix> gap_op;
    for (size_t m = 0; m < proj.size(); ++m) {
        for (size_t k = 0; k < proj.size(); ++k) {
            gap_value.push_back(energy[k] - energy[m]);
            gap_op.push_back(proj[m] * a_op * proj[k]);
        }
    }
    std::vector<std::pair<double, int>> gaps;
    for (size_t i = 0; i < gap_value.size(); ++i) {
        gaps.emplace_back(gap_value[i], static_cast<int>(i));
    }
    std::sort(gaps.begin(), gaps.end());
    const std::vector<Cluster> gap_clusters = cluster_sorted(gaps, gap_tol);
    for (size_t c = 0; c + 1 < gap_clusters.size(); ++c) {
        if (gap_clusters[c + 1].lo - gap_clusters[c].hi < 2.0 * gap_tol) {
            throw std::runtime_error(
                "global_jump_ops: ambiguous Bohr-frequency clustering, adjust gap_tol");
        }
    }

    std::vector<std::pair<double, Matrix>> out;
    for (const auto& c : gap_clusters) {
        double mean = 0.0;
        Matrix lambda = Matrix::Zero(dim, dim);
        for (int idx : c.members) {
            mean += gap_value[static_cast<size_t>(idx)];
            lambda += gap_op[static_cast<size_t>(idx)];
        }
        mean /= static_cast<double>(c.members.size());
        if (std::abs(mean) < gap_tol) {
            mean = 0.0;
        }
        if (lambda.cwiseAbs().maxCoeff() > 1e-14) {
            out.emplace_back(mean, std::move(lambda));
        }
    }
    return out;
}

Generator build_global(const RotorParams& p, const BathParams& b, double rel_gap_tol) {
    const Matrix h = rotor_hamiltonian(p);
    const double scale = std::max(h.cwiseAbs().maxCoeff(), 1.0);
    const double gap_tol = rel_gap_tol * scale;
    const auto [a_a, a_b] = coupling_ops();

    Generator gen;
    gen.kind = GeneratorKind::Global;
    gen.hamiltonian = h;
    for (Particle alpha : {Particle::A, Particle::B}) {
        const Matrix& a_op = alpha == Particle::A ? a_a : a_b;
        for (auto& [omega, lambda] : global_jump_ops(h, a_op, gap_tol)) {
            const double rate = bath_rate(omega, b.beta(alpha), b.g(alpha));
            gen.terms.push_back(LindbladTerm{rate, lambda, alpha, omega});
        }
    }
    return gen;
}

ClassicalGenerator build_classical(const RotorParams& p, const BathParams& b) {
    const Eigen::Matrix3d u = potts_potential(p);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(9, 9);
    for (int ja = 0; ja < 3; ++ja) {
        for (int jb = 0; jb < 3; ++jb) {
            const int from = 3 * ja + jb;
            for (int step : {1, 2}) {
                const int ka = (ja + step) % 3;
                const int kb = (jb + step) % 3;
                w(3 * ka + jb, from) +=
                    bath_rate(u(ja, jb) - u(ka, jb), b.beta(Particle::A), b.g(Particle::A));
                w(3 * ja + kb, from) +=
                    bath_rate(u(ja, jb) - u(ja, kb), b.beta(Particle::B), b.g(Particle::B));
            }
        }
    }
    for (int i = 0; i < 9; ++i) {
        w(i, i) = -w.col(i).sum();
    }
    return ClassicalGenerator{w};
}

Generator embed_classical(const ClassicalGenerator& cg) {
    Generator gen;
    gen.kind = GeneratorKind::Classical;
    gen.hamiltonian = Matrix::Zero(9, 9);
    for (int i = 0; i < 9; ++i) {
        for (int f = 0; f < 9; ++f) {
            if (f != i && cg.rates(f, i) > 0.0) {
                const int ja = i / 3;
                const Particle bath = (f / 3 == ja) ? Particle::B : Particle::A;
                gen.terms.push_back(LindbladTerm{cg.rates(f, i), dyad9(f, i), bath, 0.0});
            }
        }
    }
    return gen;
}

Generator build_local(const RotorParams& p, const BathParams& b) {
    Generator gen;
    gen.kind = GeneratorKind::Local;
    gen.hamiltonian = rotor_hamiltonian(p);
    add_classical_terms(p, b, &gen.terms);
    return gen;
}

Matrix apply(const Generator& gen, const Matrix& rho) {
    Matrix out = -kI * (gen.hamiltonian * rho - rho * gen.hamiltonian);
    for (const auto& term : gen.terms) {
        const Matrix lr = term.jump * rho;
        const Matrix ll = term.jump.adjoint() * term.jump;
        out += term.rate * (lr * term.jump.adjoint() - 0.5 * (ll * rho + rho * ll));
    }
    return out;
}

Matrix apply_adjoint(const Generator& gen, const Matrix& x) {
    Matrix out = kI * (gen.hamiltonian * x - x * gen.hamiltonian);
    for (const auto& term : gen.terms) {
        const Matrix ll = term.jump.adjoint() * term.jump;
        out += term.rate * (term.jump.adjoint() * x * term.jump -
                            0.5 * (ll * x + x * ll));
    }
    return out;
}

Matrix apply_dissipator(const Generator& gen, const Matrix& rho, Particle bath) {
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto& term : gen.terms) {
        if (term.bath != bath) {
            continue;
        }
        const Matrix ll = term.jump.adjoint() * term.jump;
        out += term.rate * (term.jump * rho * term.jump.adjoint() -
                            0.5 * (ll * rho + rho * ll));
    }
    return out;
}

Matrix vec(const Matrix& m) {
    return Eigen::Map<const Matrix>(m.data(), m.size(), 1);
}

Matrix unvec(const Vector& v, int dim) {
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Matrix superoperator_matrix(const Generator& gen) {
    const int dim = static_cast<int>(gen.hamiltonian.rows());
    Matrix super(dim * dim, dim * dim);
    Matrix basis = Matrix::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            basis(i, j) = 1.0;
            super.col(i + dim * j) = vec(rotor::apply(gen, basis));
            basis(i, j) = 0.0;
        }
    }
    return super;
}

}  // namespace rotor
