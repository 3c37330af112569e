#include "rotor/model.hpp"

#include <cmath>
#include <stdexcept>

namespace rotor {

namespace {

constexpr double kTwoPiOverThree = 2.0 * M_PI / 3.0;

int mod3(int j) { return ((j % 3) + 3) % 3; }

}  // namespace

int composite_index(int ja, int jb) {
    return 3 * mod3(ja - 1) + mod3(jb - 1);
}

Matrix x_op() {
    Matrix x = Matrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k) {
        x(mod3(k + 1), k) += 1.0;
        x(k, mod3(k + 1)) += 1.0;
    }
    return x;
}

Matrix shift_op() {
    Matrix s = Matrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k) {
        s(mod3(k + 1), k) = 1.0;
    }
    return s;
}

Matrix swap_op() {
    Matrix s = Matrix::Zero(9, 9);
    for (int ja = 0; ja < 3; ++ja) {
        for (int jb = 0; jb < 3; ++jb) {
            s(3 * jb + ja, 3 * ja + jb) = 1.0;
        }
    }
    return s;
}

Eigen::Matrix3d potts_potential(const RotorParams& p) {
    Eigen::Matrix3d u;
    for (int ja = 0; ja < 3; ++ja) {
        for (int jb = 0; jb < 3; ++jb) {
            u(ja, jb) = 0.5 * p.coupling * std::cos(kTwoPiOverThree * (ja - jb) + p.phase);
        }
    }
    return u;
}

Matrix rotor_hamiltonian(const RotorParams& p) {
    const Matrix id3 = Matrix::Identity(3, 3);
    const Matrix x = x_op();
    Matrix h = p.tau * (kron(x, id3) + kron(id3, x));
    const Eigen::Matrix3d u = potts_potential(p);
    for (int ja = 0; ja < 3; ++ja) {
        for (int jb = 0; jb < 3; ++jb) {
            h(3 * ja + jb, 3 * ja + jb) += u(ja, jb);
        }
    }
    return h;
}

SymmetryDecomposition global_rotation() {
    const Matrix s = shift_op();
    const Matrix r = kron(s, s);
    SymmetryDecomposition dec;
    dec.rotation = r;
    // Discrete Fourier sum over powers of R; exact to machine precision.
    std::array<Matrix, 3> powers = {Matrix::Identity(9, 9), r, r * r};
    for (int k = 1; k <= 3; ++k) {
        Matrix proj = Matrix::Zero(9, 9);
        for (int m = 0; m < 3; ++m) {
            const Complex phase = std::exp(Complex(0.0, -kTwoPiOverThree * k * m));
            proj += phase * powers[static_cast<size_t>(m)];
        }
        dec.projectors[static_cast<size_t>(k - 1)] = hermitize(proj / 3.0);
    }
    return dec;
}

Matrix local_rotation(Particle which) {
    const Matrix id3 = Matrix::Identity(3, 3);
    return which == Particle::A ? kron(shift_op(), id3) : kron(id3, shift_op());
}

Matrix generalized_exchange(int k) {
    // SWAP combined with rotating particle b back by k steps. With the
    // shift convention |j> -> |j+1| this inverse power is the one that
    // commutes with H_ab at phi = k pi / 3.
    const Matrix s = shift_op();
    Matrix sk = Matrix::Identity(3, 3);
    for (int i = 0; i < mod3(-k); ++i) {
        sk = s * sk;
    }
    return swap_op() * kron(Matrix::Identity(3, 3), sk);
}

std::pair<Matrix, Matrix> coupling_ops() {
    const Matrix id3 = Matrix::Identity(3, 3);
    const Matrix x = x_op();
    return {kron(x, id3) / 3.0, kron(id3, x) / 3.0};
}

SiteProjector site_projector(Particle particle, int site) {
    if (site < 1 || site > 3) {
        throw std::invalid_argument("site_projector: site must be 1, 2 or 3");
    }
    Matrix ket = Matrix::Zero(3, 3);
    ket(site - 1, site - 1) = 1.0;
    const Matrix id3 = Matrix::Identity(3, 3);
    Matrix m = particle == Particle::A ? kron(ket, id3) : kron(id3, ket);
    return SiteProjector{particle, site, std::move(m)};
}

std::array<SiteProjector, 6> site_projectors() {
    return {site_projector(Particle::A, 1), site_projector(Particle::A, 2),
            site_projector(Particle::A, 3), site_projector(Particle::B, 1),
            site_projector(Particle::B, 2), site_projector(Particle::B, 3)};
}

}  // namespace rotor
