#ifndef ROTOR_CONTINUUM_HPP
#define ROTOR_CONTINUUM_HPP

#include "rotor/linalg.hpp"

namespace rotor {

// Discretized line of 2N+1 sites with spacing ell / sqrt(2N+1); periodic
// (circulant) boundary throughout.
struct ContinuumParams {
    int half_width = 20;  // N
    double ell = 1.0;
    double mass = 1.0;

    int dim() const { return 2 * half_width + 1; }
    double eps() const;
    double min_length() const { return ell * eps(); }
};

// Discrete momentum operator in the position basis.
Matrix momentum_op(const ContinuumParams& p);

// <q_n | P^2 | q_{n+k}>; site-independent by translation invariance.
Complex p_squared_offdiag(const ContinuumParams& p, int k);

// The dimensionless sum tending to the Fourier integral (-1)^k / (2 pi^2 k^2).
Complex riemann_kernel_sum(int half_width, int k);

// Position current assembled from all k-th-neighbour tunneling currents of
// H = P^2 / 2m, weighted by k * ell_N. Site index is centered: -N..N.
Matrix assembled_current(const ContinuumParams& p, int site);

// The continuum target {P, |q><q|} / 2m at the same site.
Matrix schroedinger_current(const ContinuumParams& p, int site);

// Heisenberg derivative i[H, |q_n><q_n|] of the site projector.
Matrix site_projector_derivative(const ContinuumParams& p, int site);

}  // namespace rotor

#endif
