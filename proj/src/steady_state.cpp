#include "rotor/steady_state.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

// Clip eigenvalues in (-tol, 0), renormalize; anything more negative is a
// hard error.
DensityMatrix repair_psd(const Matrix& candidate, double tol) {
    const Matrix herm = hermitize(candidate);
    const EigResult eig = hermitian_eig(herm);
    if (eig.values.minCoeff() < -tol) {
        throw std::runtime_error("steady state has a significantly negative eigenvalue");
    }
    RealVector clipped = eig.values.cwiseMax(0.0);
    const double total = clipped.sum();
    if (total <= 0.0) {
        throw std::runtime_error("steady state candidate has zero trace");
    }
    clipped /= total;
    Matrix out = eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
    return DensityMatrix(hermitize(out));
}

Matrix sector_state(const Matrix& sector_proj, const std::vector<Vector>& kernel,
                    int dim) {
    // Any kernel vector with non-negligible weight in the sector works; the
    // projected, trace-normalized state is independent of the choice. Pairwise
    // sums cover the unlucky case of a basis vector orthogonal to the sector.
    Complex best_trace = 0.0;
    Matrix best;
    auto consider = [&](const Matrix& m) {
        const Matrix proj = sector_proj * m * sector_proj;
        const Complex t = proj.trace();
        if (std::abs(t) > std::abs(best_trace)) {
            best_trace = t;
            best = proj;
        }
    };
    for (const auto& v : kernel) {
        consider(unvec(v, dim));
    }
    for (size_t i = 0; i < kernel.size(); ++i) {
        for (size_t j = i + 1; j < kernel.size(); ++j) {
            consider(unvec(Vector(kernel[i] + kernel[j]), dim));
        }
    }
    if (std::abs(best_trace) < 1e-12) {
        throw std::runtime_error("solve_basis: no kernel weight in a rotation sector");
    }
    return best / best_trace;
}

}  // namespace

SteadyStateBasis solve_basis(const Generator& gen, double kernel_tol) {
    const int dim = static_cast<int>(gen.hamiltonian.rows());
    const Matrix super = superoperator_matrix(gen);
    const std::vector<Vector> kernel = kernel_basis(super, kernel_tol);
    if (kernel.empty()) {
        throw std::runtime_error("solve_basis: empty Liouvillian null space");
    }

    std::array<Matrix, 3> raw;
    if (kernel.size() >= 3) {
        const SymmetryDecomposition rot = global_rotation();
        for (int k = 0; k < 3; ++k) {
            raw[static_cast<size_t>(k)] =
                sector_state(rot.projectors[static_cast<size_t>(k)], kernel, dim);
        }
    } else {
        // Unique steady state (local/classical generators): duplicated.
        Matrix m = unvec(kernel.front(), dim);
        m /= m.trace();
        raw = {m, m, m};
    }

    SteadyStateBasis basis{{repair_psd(raw[0], 1e-10), repair_psd(raw[1], 1e-10),
                            repair_psd(raw[2], 1e-10)},
                           static_cast<int>(kernel.size())};
    for (const auto& state : basis.states) {
        const double residual = rotor::apply(gen, state.mat()).cwiseAbs().maxCoeff();
        if (residual > 1e-9) {
            throw std::runtime_error("solve_basis: steady-state residual above 1e-9");
        }
    }
    return basis;
}

WeightDecomposition weights(const Matrix& rho0) {
    Complex theta0 = 0.0;
    for (int ja = 0; ja < 3; ++ja) {
        for (int jb = 0; jb < 3; ++jb) {
            theta0 += rho0(3 * ja + jb, 3 * ((ja + 1) % 3) + (jb + 1) % 3);
        }
    }
    const SymmetryDecomposition rot = global_rotation();
    WeightDecomposition w;
    w.theta0 = theta0;
    for (int k = 0; k < 3; ++k) {
        w.lambda[static_cast<size_t>(k)] =
            (rot.projectors[static_cast<size_t>(k)] * rho0).trace().real();
    }
    return w;
}

DensityMatrix asymptotic_state(const SteadyStateBasis& basis, const Matrix& rho0) {
    if (basis.kernel_dim != 3) {
        throw std::runtime_error(
            "asymptotic_state: sector mixture requires kernel dimension 3; "
            "use asymptotic_state_dynamic for degenerate parameters");
    }
    const WeightDecomposition w = weights(rho0);
    Matrix mix = Matrix::Zero(9, 9);
    for (int k = 0; k < 3; ++k) {
        mix += w.lambda[static_cast<size_t>(k)] * basis.states[static_cast<size_t>(k)].mat();
    }
    return repair_psd(mix, 1e-10);
}

Matrix asymptotic_projector(const Generator& gen) {
    const Matrix super = superoperator_matrix(gen);
    // exp(L * 2^22): decaying modes are annihilated, kernel modes kept.
    Matrix propagator = super.exp();
    for (int i = 0; i < 22; ++i) {
        propagator = propagator * propagator;
    }
    return propagator;
}

DensityMatrix asymptotic_state_dynamic(const Generator& gen, const Matrix& rho0) {
    const int dim = static_cast<int>(gen.hamiltonian.rows());
    const Matrix projector = asymptotic_projector(gen);
    const Vector limit = projector * vec(rho0);
    Matrix m = unvec(limit, dim);
    m /= m.trace();
    return repair_psd(m, 1e-8);
}

SteadyCurrents steady_current_decomposition(const SteadyStateBasis& basis,
                                            const Matrix& rho0, const Generator& gen) {
    const DensityMatrix state = asymptotic_state(basis, rho0);
    const WeightDecomposition w = weights(rho0);

    SteadyCurrents out;
    for (Particle particle : {Particle::A, Particle::B}) {
        const CurrentOperators ops = current_operators(gen, Edge{particle, 1, 2});
        const CurrentAverages direct = average_current(ops, state.mat());
        const CurrentAverages first = average_current(ops, basis.states[0].mat());
        const double predicted = 2.0 * w.theta0.imag() / std::sqrt(3.0) * first.tunneling +
                                 (2.0 - 2.0 * w.theta0.real()) / 3.0 * first.thermal;
        if (std::abs(direct.total - predicted) > 1e-8) {
            throw std::runtime_error(
                "steady_current_decomposition: sector identity violated");
        }
        (particle == Particle::A ? out.particle_a : out.particle_b) = direct;
    }
    return out;
}

}  // namespace rotor
