#include "rotor/linalg.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

bool all_finite(const Matrix& m) { return m.allFinite(); }

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    }
    if (!all_finite(mat_)) {
        throw std::invalid_argument("DensityMatrix: non-finite entries");
    }
    const double herm_err = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-12) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > 1e-12) {
        throw std::invalid_argument("DensityMatrix: trace != 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

EigResult hermitian_eig(const Matrix& h) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("hermitian_eig: matrix must be square");
    }
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("hermitian_eig: input not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(h));
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver failed");
    }
    return EigResult{es.eigenvalues(), es.eigenvectors()};
}

std::vector<Vector> kernel_basis(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("kernel_basis: matrix must be square");
    }
    if (tol <= 0.0) {
        throw std::invalid_argument("kernel_basis: tol must be positive");
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const double sigma_max = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    std::vector<Vector> basis;
    if (sigma_max == 0.0) {
        for (Eigen::Index i = 0; i < m.cols(); ++i) {
            basis.push_back(Matrix::Identity(m.cols(), m.cols()).col(i));
        }
        return basis;
    }
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) < tol * sigma_max) {
            basis.push_back(svd.matrixV().col(i));
        }
    }
    return basis;
}

Matrix partial_trace(const Matrix& rho, Particle keep) {
    if (rho.rows() != 9 || rho.cols() != 9) {
        throw std::invalid_argument("partial_trace: expected a 9x9 matrix");
    }
    Matrix out = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                if (keep == Particle::A) {
                    out(i, j) += rho(3 * i + k, 3 * j + k);
                } else {
                    out(i, j) += rho(3 * k + i, 3 * k + j);
                }
            }
        }
    }
    return out;
}

Matrix partial_transpose(const Matrix& rho) {
    if (rho.rows() != 9 || rho.cols() != 9) {
        throw std::invalid_argument("partial_transpose: expected a 9x9 matrix");
    }
    Matrix out(9, 9);
    for (int ja = 0; ja < 3; ++ja) {
        for (int jb = 0; jb < 3; ++jb) {
            for (int ka = 0; ka < 3; ++ka) {
                for (int kb = 0; kb < 3; ++kb) {
                    out(3 * ja + jb, 3 * ka + kb) = rho(3 * ja + kb, 3 * ka + jb);
                }
            }
        }
    }
    return out;
}

double trace_norm(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("trace_norm: matrix must be square");
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

double trace_distance(const Matrix& a, const Matrix& b) {
    return 0.5 * trace_norm(a - b);
}

Matrix rk4_step(const Matrix& rho, const GeneratorFn& lindbladian, double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("rk4_step: dt must be positive");
    }
    const Matrix k1 = lindbladian(rho);
    const Matrix k2 = lindbladian(rho + 0.5 * dt * k1);
    const Matrix k3 = lindbladian(rho + 0.5 * dt * k2);
    const Matrix k4 = lindbladian(rho + dt * k3);
    Matrix next = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    next = hermitize(next);
    const double drift = std::abs(next.trace() - rho.trace());
    if (drift > 1e-6) {
        throw std::runtime_error("rk4_step: trace drift exceeds 1e-6, reduce dt");
    }
    return next;
}

}  // namespace rotor
