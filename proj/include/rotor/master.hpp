#ifndef ROTOR_MASTER_HPP
#define ROTOR_MASTER_HPP

#include "rotor/linalg.hpp"
#include "rotor/model.hpp"

#include <vector>

namespace rotor {

// Per-bath temperature and spectral prefactor of the ohmic rate.
struct BathParams {
    double temp_a = 1.0;
    double temp_b = 1.0;
    double g_a = 0.2;
    double g_b = 0.2;

    double beta(Particle which) const {
        return 1.0 / (which == Particle::A ? temp_a : temp_b);
    }
    double g(Particle which) const { return which == Particle::A ? g_a : g_b; }
};

struct LindbladTerm {
    double rate = 0.0;
    Matrix jump;
    Particle bath = Particle::A;
    double frequency = 0.0;  // Bohr frequency; 0 for classical/local terms
};

enum class GeneratorKind { Classical, Local, Global };

// A GKLS generator: Hamiltonian plus a list of weighted jump operators.
struct Generator {
    GeneratorKind kind = GeneratorKind::Global;
    Matrix hamiltonian;
    std::vector<LindbladTerm> terms;
};

// Classical Markov chain on the 9 configurations (ja, jb); column-stochastic
// rate matrix, dp/dt = W p.
struct ClassicalGenerator {
    Eigen::MatrixXd rates;  // rates(f, i) = rate i -> f for f != i
};

// Bosonic bath rate of a single Bohr frequency. gamma(0) = g / beta.
double bath_rate(double omega, double beta, double g);

// Jump operators of the microscopically derived ME: eigenlevels of h are
// clustered with gap_tol (absolute), and one Lambda(omega) is produced per
// clustered gap, including omega = 0 and negative gaps.
std::vector<std::pair<double, Matrix>> global_jump_ops(const Matrix& h,
                                                       const Matrix& a_op,
                                                       double gap_tol);

Generator build_global(const RotorParams& p, const BathParams& b,
                       double rel_gap_tol = 1e-8);

ClassicalGenerator build_classical(const RotorParams& p, const BathParams& b);

// Classical chain embedded as a GKLS generator with vertex-dyad jumps and
// zero Hamiltonian.
Generator embed_classical(const ClassicalGenerator& w);

// Phenomenological (local) ME: rotor Hamiltonian plus the classical hops as
// vertex-dyad jump operators.
Generator build_local(const RotorParams& p, const BathParams& b);

// Schroedinger-picture action L[rho].
Matrix apply(const Generator& gen, const Matrix& rho);

// Heisenberg-picture (adjoint) action L*[x].
Matrix apply_adjoint(const Generator& gen, const Matrix& x);

// Dissipative part of one bath only, D_alpha[rho].
Matrix apply_dissipator(const Generator& gen, const Matrix& rho, Particle bath);

// Column-major vectorization of the generator, acting on vec(rho).
Matrix superoperator_matrix(const Generator& gen);

Matrix vec(const Matrix& m);
Matrix unvec(const Vector& v, int dim);

}  // namespace rotor

#endif
