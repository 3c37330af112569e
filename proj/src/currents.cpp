#include "rotor/currents.hpp"

#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

constexpr Complex kI(0.0, 1.0);

void check_edge(const SiteProjector& xj, const SiteProjector& xj2) {
    if (xj.particle != xj2.particle) {
        throw std::invalid_argument("current: edge sites must belong to one particle");
    }
    if (xj.site == xj2.site) {
        throw std::invalid_argument("current: same-site edge");
    }
}

double real_checked(Complex z) {
    if (std::abs(z.imag()) > 1e-9) {
        throw std::runtime_error("current average has a non-negligible imaginary part");
    }
    return z.real();
}

}  // namespace

Matrix current_op_general(const Generator& gen, const SiteProjector& xj,
                          const SiteProjector& xj2) {
    check_edge(xj, xj2);
    const Matrix dxj = apply_adjoint(gen, xj.matrix);
    const Matrix dxj2 = apply_adjoint(gen, xj2.matrix);
    return 0.5 * (xj.matrix * dxj2 + dxj2 * xj.matrix) -
           0.5 * (xj2.matrix * dxj + dxj * xj2.matrix);
}

Matrix tunneling_current_op(const Matrix& h, const SiteProjector& xj,
                            const SiteProjector& xj2) {
    check_edge(xj, xj2);
    return kI * (xj.matrix * h * xj2.matrix - xj2.matrix * h * xj.matrix);
}

Matrix thermal_current_op(const Generator& gen, const SiteProjector& xj,
                          const SiteProjector& xj2) {
    check_edge(xj, xj2);
    Matrix out = Matrix::Zero(xj.matrix.rows(), xj.matrix.cols());
    for (const auto& term : gen.terms) {
        const Matrix fwd = term.jump.adjoint() * xj2.matrix * term.jump;
        const Matrix bwd = term.jump.adjoint() * xj.matrix * term.jump;
        out += 0.5 * term.rate *
               (xj.matrix * fwd + fwd * xj.matrix - xj2.matrix * bwd - bwd * xj2.matrix);
    }
    return out;
}

CurrentOperators current_operators(const Generator& gen, const Edge& edge) {
    const SiteProjector xj = site_projector(edge.particle, edge.from);
    const SiteProjector xj2 = site_projector(edge.particle, edge.to);
    CurrentOperators ops;
    ops.edge = edge;
    ops.tunneling = tunneling_current_op(gen.hamiltonian, xj, xj2);
    ops.thermal = thermal_current_op(gen, xj, xj2);
    ops.total = ops.tunneling + ops.thermal;
    return ops;
}

CurrentAverages average_current(const CurrentOperators& ops, const Matrix& rho) {
    CurrentAverages avg;
    avg.tunneling = real_checked((rho * ops.tunneling).trace());
    avg.thermal = real_checked((rho * ops.thermal).trace());
    avg.total = real_checked((rho * ops.total).trace());
    return avg;
}

double tsm_current(const Generator& gen, const Matrix& rho, const SiteProjector& xj,
                   const SiteProjector& xj2) {
    check_edge(xj, xj2);
    Complex sum = 0.0;
    for (const auto& term : gen.terms) {
        const Matrix fwd = term.jump * (xj.matrix * rho * xj.matrix) * term.jump.adjoint();
        const Matrix bwd = term.jump * (xj2.matrix * rho * xj2.matrix) * term.jump.adjoint();
        sum += term.rate * ((fwd * xj2.matrix).trace() - (bwd * xj.matrix).trace());
    }
    return real_checked(sum);
}

MHRate mh_rate(const Generator& gen, const Matrix& rho, const SiteProjector& xj,
               const SiteProjector& xj2) {
    check_edge(xj, xj2);
    // x_j x_j' = 0, so the epsilon^0 term of Re tr[x_j x_j'(eps) rho]
    // vanishes and the limit is the first-order coefficient.
    const Matrix dxj2 = apply_adjoint(gen, xj2.matrix);
    const Complex val = (xj.matrix * dxj2 * rho).trace();
    return MHRate{val.real(), Edge{xj.particle, xj.site, xj2.site}};
}

double weak_value(const Generator& gen, const Matrix& rho, const SiteProjector& xj,
                  const SiteProjector& xj2, double eps) {
    check_edge(xj, xj2);
    if (eps <= 0.0) {
        throw std::invalid_argument("weak_value: eps must be positive");
    }
    const Matrix evolved = xj2.matrix + eps * apply_adjoint(gen, xj2.matrix);
    const Complex denom = (evolved * rho).trace();
    if (std::abs(denom) < 1e-14) {
        throw std::runtime_error("weak_value: postselection probability underflow");
    }
    const Complex numer = (xj.matrix * (rho * evolved + evolved * rho)).trace();
    return numer.real() / (2.0 * denom.real());
}

ContextualityResult contextuality_witness(const Generator& gen, const Matrix& rho,
                                          Particle particle) {
    ContextualityResult res;
    bool first = true;
    for (int j = 1; j <= 3; ++j) {
        for (int j2 = 1; j2 <= 3; ++j2) {
            if (j == j2) {
                continue;
            }
            const MHRate mu = mh_rate(gen, rho, site_projector(particle, j),
                                      site_projector(particle, j2));
            if (first || mu.value < res.min_mh) {
                res.min_mh = mu.value;
                res.edge = mu.edge;
                first = false;
            }
        }
    }
    res.is_contextual = res.min_mh < -1e-12;
    return res;
}

}  // namespace rotor
