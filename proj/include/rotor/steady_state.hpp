#ifndef ROTOR_STEADY_STATE_HPP
#define ROTOR_STEADY_STATE_HPP

#include "rotor/currents.hpp"
#include "rotor/linalg.hpp"
#include "rotor/master.hpp"

#include <array>

namespace rotor {

// The three symmetry-resolved steady states of the global ME together with
// the dimension of the Liouvillian null space.
struct SteadyStateBasis {
    std::array<DensityMatrix, 3> states;  // states[k-1] lives in the R_k sector
    int kernel_dim = 0;
};

struct WeightDecomposition {
    Complex theta0;
    std::array<double, 3> lambda;
};

// Null-space solve of the vectorized generator, projected onto the three
// rotation sectors and normalized.
SteadyStateBasis solve_basis(const Generator& gen, double kernel_tol = 1e-9);

WeightDecomposition weights(const Matrix& rho0);

// Sector mixture sum_k lambda_k rho_k; valid only for kernel_dim 3.
DensityMatrix asymptotic_state(const SteadyStateBasis& basis, const Matrix& rho0);

// Long-time limit computed dynamically from the spectral projector of the
// vectorized generator (repeated squaring of its exponential); valid for
// degenerate steady-state spaces as well.
DensityMatrix asymptotic_state_dynamic(const Generator& gen, const Matrix& rho0);

// The 81x81 map rho0 -> lim exp(L t)[rho0].
Matrix asymptotic_projector(const Generator& gen);

struct SteadyCurrents {
    CurrentAverages particle_a;
    CurrentAverages particle_b;
};

// Steady currents of both particles for the asymptotic state of rho0;
// cross-checked against the sector decomposition identity before returning.
SteadyCurrents steady_current_decomposition(const SteadyStateBasis& basis,
                                            const Matrix& rho0, const Generator& gen);

}  // namespace rotor

#endif
