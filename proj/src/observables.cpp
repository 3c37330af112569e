#include "rotor/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

// Above the noise floor of the spectral projector (~1e-9), far below any
// physical negativity of interest.
constexpr double kEntanglementEps = 1e-8;

bool entangled(const Matrix& rho) { return negativity(rho) > kEntanglementEps; }

}  // namespace

double heat_flux(const Generator& gen, const Matrix& rho, Particle bath) {
    const Complex q = (gen.hamiltonian * apply_dissipator(gen, rho, bath)).trace();
    if (std::abs(q.imag()) > 1e-9) {
        throw std::runtime_error("heat_flux: non-real heat flow");
    }
    return q.real();
}

double negativity(const Matrix& rho) {
    const EigResult eig = hermitian_eig(partial_transpose(rho));
    double neg = 0.0;
    for (int i = 0; i < eig.values.size(); ++i) {
        if (eig.values(i) < 0.0) {
            neg -= eig.values(i);
        }
    }
    return neg;
}

double ergotropy(const Matrix& rho, const Matrix& h) {
    const EigResult h_eig = hermitian_eig(h);            // ascending
    const EigResult rho_eig = hermitian_eig(rho);        // ascending
    double passive = 0.0;
    const int dim = static_cast<int>(h_eig.values.size());
    for (int m = 0; m < dim; ++m) {
        passive += h_eig.values(m) * rho_eig.values(dim - 1 - m);
    }
    const double energy = (h * rho).trace().real();
    return energy - passive;
}

double coherence(const Matrix& sigma) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < sigma.rows(); ++i) {
        for (Eigen::Index j = 0; j < sigma.cols(); ++j) {
            if (i != j) {
                sum += std::abs(sigma(i, j));
            }
        }
    }
    return sum;
}

Complex theta_sigma(const Matrix& sigma) {
    return sigma(0, 1) + std::conj(sigma(0, 2)) + sigma(1, 2);
}

DensityMatrix thermal_state(const Matrix& h, double temperature) {
    if (temperature <= 0.0) {
        throw std::invalid_argument("thermal_state: temperature must be positive");
    }
    const EigResult eig = hermitian_eig(h);
    const double ground = eig.values.minCoeff();
    RealVector weight(eig.values.size());
    for (int i = 0; i < eig.values.size(); ++i) {
        weight(i) = std::exp(-(eig.values(i) - ground) / temperature);
    }
    weight /= weight.sum();
    Matrix rho = eig.vectors * weight.asDiagonal() * eig.vectors.adjoint();
    return DensityMatrix(hermitize(rho));
}

CoherentInputFamily coherent_inputs(double delta) {
    if (delta < 0.0 || delta > 1.0) {
        throw std::invalid_argument("coherent_inputs: delta must lie in [0, 1]");
    }
    const double s = 1.0 / std::sqrt(3.0);
    Vector ket_a(3);
    ket_a << s, s * std::exp(Complex(0.0, -2.0 * M_PI / 3.0)),
        s * std::exp(Complex(0.0, 2.0 * M_PI / 3.0));
    Vector ket_b(3);
    ket_b << s, s, s;
    const Matrix id3 = Matrix::Identity(3, 3) / 3.0;
    Matrix sa = (1.0 - delta) * (ket_a * ket_a.adjoint()) + delta * id3;
    Matrix sb = (1.0 - delta) * (ket_b * ket_b.adjoint()) + delta * id3;
    return CoherentInputFamily{delta, DensityMatrix(hermitize(sa)),
                               DensityMatrix(hermitize(sb))};
}

double delta_max(const RotorParams& p, const BathParams& b, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("delta_max: tol must be positive");
    }
    const Generator gen = build_global(p, b);
    const Matrix projector = asymptotic_projector(gen);
    const int dim = 9;
    auto steady_negativity = [&](double delta) {
        const CoherentInputFamily in = coherent_inputs(delta);
        const Matrix rho0 = kron(in.sigma_a.mat(), in.sigma_b.mat());
        Matrix limit = unvec(Vector(projector * vec(rho0)), dim);
        limit = hermitize(limit);
        limit /= limit.trace().real();
        return negativity(limit);
    };

    if (steady_negativity(0.0) <= kEntanglementEps) {
        return 0.0;
    }
    if (steady_negativity(1.0) > kEntanglementEps) {
        return 1.0;
    }
    // A 21-point grid locates the last entangled point, guarding the
    // bisection against a non-monotone predicate.
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 20; i >= 1; --i) {
        if (steady_negativity(i / 20.0) > kEntanglementEps) {
            lo = i / 20.0;
            hi = (i + 1) / 20.0;
            break;
        }
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (steady_negativity(mid) > kEntanglementEps ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double entanglement_temperature(const Matrix& h, double tol) {
    if (tol <= 0.0) {
        throw std::invalid_argument("entanglement_temperature: tol must be positive");
    }
    auto thermal_entangled = [&](double t) { return entangled(thermal_state(h, t).mat()); };
    double lo = 1e-3;
    if (!thermal_entangled(lo)) {
        return 0.0;
    }
    double hi = 1.0;
    while (thermal_entangled(hi)) {
        hi *= 2.0;
        if (hi > 1e6) {
            throw std::runtime_error("entanglement_temperature: no upper bracket");
        }
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (thermal_entangled(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace rotor
