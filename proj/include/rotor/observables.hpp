#ifndef ROTOR_OBSERVABLES_HPP
#define ROTOR_OBSERVABLES_HPP

#include "rotor/linalg.hpp"
#include "rotor/master.hpp"
#include "rotor/steady_state.hpp"

namespace rotor {

// Heat flow from bath alpha into the system, Qdot = tr(H D_alpha[rho]).
double heat_flux(const Generator& gen, const Matrix& rho, Particle bath);

// Sum of the absolute values of the negative eigenvalues of the partial
// transpose; equals (||rho^Gamma||_1 - 1) / 2.
double negativity(const Matrix& rho);

// Maximal work extractable by a cyclic unitary: tr(H rho) minus the passive
// energy (H levels ascending paired with rho eigenvalues descending).
double ergotropy(const Matrix& rho, const Matrix& h);

// l1 coherence: sum of off-diagonal moduli.
double coherence(const Matrix& sigma);

// theta_sigma = sigma_12 + conj(sigma_13) + sigma_23 for a qutrit state.
Complex theta_sigma(const Matrix& sigma);

DensityMatrix thermal_state(const Matrix& h, double temperature);

// Input family sigma(delta) = (1-delta)|sigma><sigma| + delta/3 I for the two
// fixed maximally coherent kets.
struct CoherentInputFamily {
    double delta;
    DensityMatrix sigma_a;
    DensityMatrix sigma_b;
};

CoherentInputFamily coherent_inputs(double delta);

// Largest delta for which the steady state evolved from
// sigma_a(delta) x sigma_b(delta) stays entangled; bisection with bracket
// validation and an 21-point grid fallback. Returns 0 when even delta = 0
// gives a separable (PPT) steady state.
double delta_max(const RotorParams& p, const BathParams& b, double tol = 1e-3);

// PPT threshold temperature of the thermal-state family of h: above it,
// negativity vanishes. Returns 0 when no thermal state is NPT.
double entanglement_temperature(const Matrix& h, double tol = 1e-4);

}  // namespace rotor

#endif
