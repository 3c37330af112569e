#ifndef ROTOR_LINALG_HPP
#define ROTOR_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

namespace rotor {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// A d x d state: Hermitian, unit trace, positive semidefinite up to
// numerical tolerance. Construction validates all three.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }

private:
    Matrix mat_;
};

// Kronecker product; the first factor is the slow index.
Matrix kron(const Matrix& a, const Matrix& b);

struct EigResult {
    RealVector values;  // ascending
    Matrix vectors;     // orthonormal columns
};

// Eigendecomposition of a Hermitian matrix. Rejects input whose
// anti-Hermitian part exceeds 1e-10 entrywise.
EigResult hermitian_eig(const Matrix& h);

// Orthonormal basis of the numerical null space of a square matrix:
// right singular vectors with singular value < tol * sigma_max.
std::vector<Vector> kernel_basis(const Matrix& m, double tol = 1e-9);

enum class Particle { A, B };

// Trace out the complementary factor of a 9x9 state viewed as 3 (x) 3,
// keeping the requested particle.
Matrix partial_trace(const Matrix& rho, Particle keep);

// Transpose on the second (b) factor of a 9x9 matrix.
Matrix partial_transpose(const Matrix& rho);

// Sum of singular values.
double trace_norm(const Matrix& m);

double trace_distance(const Matrix& a, const Matrix& b);

using GeneratorFn = std::function<Matrix(const Matrix&)>;

// One fixed-size RK4 step of d(rho)/dt = L[rho]. The result is
// re-Hermitized; a trace drift above 1e-6 throws.
Matrix rk4_step(const Matrix& rho, const GeneratorFn& lindbladian, double dt);

inline Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace rotor

#endif
