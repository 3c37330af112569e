#ifndef ROTOR_CURRENTS_HPP
#define ROTOR_CURRENTS_HPP

#include "rotor/linalg.hpp"
#include "rotor/master.hpp"
#include "rotor/model.hpp"

namespace rotor {

struct Edge {
    Particle particle;
    int from;  // 1-based site
    int to;
};

// Tunneling + thermal current operators for one edge.
struct CurrentOperators {
    Matrix tunneling;
    Matrix thermal;
    Matrix total;
    Edge edge;
};

struct CurrentAverages {
    double tunneling = 0.0;
    double thermal = 0.0;
    double total = 0.0;
};

// Time derivative of the Margenau-Hill distribution for an ordered edge,
// evaluated in the exact epsilon -> 0 limit.
struct MHRate {
    double value = 0.0;
    Edge edge;
};

// General current operator J_{j -> j'} = {x_j, dx_j'/dt}/2 - {x_j', dx_j/dt}/2
// with the derivative taken through the adjoint generator.
Matrix current_op_general(const Generator& gen, const SiteProjector& xj,
                          const SiteProjector& xj2);

Matrix tunneling_current_op(const Matrix& h, const SiteProjector& xj,
                            const SiteProjector& xj2);

Matrix thermal_current_op(const Generator& gen, const SiteProjector& xj,
                          const SiteProjector& xj2);

CurrentOperators current_operators(const Generator& gen, const Edge& edge);

CurrentAverages average_current(const CurrentOperators& ops, const Matrix& rho);

// Current inferred from two projective position measurements; drops the
// coherent contributions.
double tsm_current(const Generator& gen, const Matrix& rho,
                   const SiteProjector& xj, const SiteProjector& xj2);

MHRate mh_rate(const Generator& gen, const Matrix& rho, const SiteProjector& xj,
               const SiteProjector& xj2);

// Finite-epsilon conditional transition probability; the weak value's
// real part.
double weak_value(const Generator& gen, const Matrix& rho, const SiteProjector& xj,
                  const SiteProjector& xj2, double eps);

struct ContextualityResult {
    bool is_contextual = false;
    double min_mh = 0.0;
    Edge edge;
};

// Scans all ordered site pairs of one particle for a negative MH rate.
ContextualityResult contextuality_witness(const Generator& gen, const Matrix& rho,
                                          Particle particle);

}  // namespace rotor

#endif
