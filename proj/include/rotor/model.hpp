#ifndef ROTOR_MODEL_HPP
#define ROTOR_MODEL_HPP

#include "rotor/linalg.hpp"

#include <array>

namespace rotor {

// Two-qutrit rotor parameters: tunneling rate, Potts coupling, phase.
struct RotorParams {
    double tau = 0.1;
    double coupling = 2.0;  // K
    double phase = 0.0;     // phi
};

// Projector on one vertex of one particle, embedded in the 9-dim space.
struct SiteProjector {
    Particle particle;
    int site;  // 1-based, cyclic
    Matrix matrix;
};

// Rigid rotation R together with its eigenprojectors R_k,
// R = sum_k exp(2 pi i k / 3) R_k, k = 1, 2, 3.
struct SymmetryDecomposition {
    Matrix rotation;
    std::array<Matrix, 3> projectors;  // projectors[k-1] <-> eigenvalue e^{2 pi i k/3}
};

// Nearest-neighbour hopping on a 3-cycle; for d=3 all off-diagonals are 1.
Matrix x_op();

// Single-particle shift |j> -> |j+1> (cyclic).
Matrix shift_op();

Matrix swap_op();

// U[ja][jb] = (K/2) cos(2 pi (ja - jb)/3 + phi), 0-based indices.
Eigen::Matrix3d potts_potential(const RotorParams& p);

// H = tau (X x I + I x X) + diag(U).
Matrix rotor_hamiltonian(const RotorParams& p);

SymmetryDecomposition global_rotation();

Matrix local_rotation(Particle which);

// Generalized exchange Xi_k: particle swap combined with a unilateral
// rotation; commutes with the rotor Hamiltonian exactly when phi = k pi/3.
Matrix generalized_exchange(int k);

// Bath coupling operators A_a = X x I / 3, A_b = I x X / 3.
std::pair<Matrix, Matrix> coupling_ops();

SiteProjector site_projector(Particle particle, int site);

std::array<SiteProjector, 6> site_projectors();

int composite_index(int ja, int jb);  // 1-based sites -> 0..8

}  // namespace rotor

#endif
