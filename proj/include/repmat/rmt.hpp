#pragma once

#include "repmat/hermitian.hpp"
#include "repmat/rng.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

namespace repmat {

/// d x d Haar unitary from the QR decomposition of a complex Ginibre matrix, with the columns
/// rephased so that diag(R) is real positive (without this the law is not Haar).
Eigen::MatrixXcd sample_haar_unitary(int d, RngStream& rng);

/// d x d Haar element of SO(d) (real Ginibre QR, sign fix, then determinant fix).
Eigen::MatrixXd sample_haar_rotation(int d, RngStream& rng);

/// A G-invariant random matrix U diag(lambda) U^* with U Haar and lambda drawn independently.
struct InvariantMatrixModel {
    int d = 0;
    std::function<Eigen::VectorXd(RngStream&)> eigenvalue_sampler;
    std::string description;

    /// Deterministic spectrum.
    static InvariantMatrixModel fixed(const Eigen::VectorXd& eigenvalues);
};

HermitianMatrix sample_invariant(const InvariantMatrixModel& model, RngStream& rng);

/// Top-left d x d block.
HermitianMatrix corner(const HermitianMatrix& a, int d);

/// g - tr(g) I + x I, with g from the GUE (E|g_ij|^2 = 1, diagonal N(0,1)) and x ~ N(0, v).
HermitianMatrix sample_gue_v(int d, double v, RngStream& rng);

/// Sum of independent samples of the two models, each drawn from its own forked sub-stream.
HermitianMatrix sum_independent(const InvariantMatrixModel& a, const InvariantMatrixModel& b, RngStream& rng);

template <class Real>
struct HermitianEigenResult {
    Eigen::Matrix<Real, Eigen::Dynamic, 1> values;                       // non-increasing
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> vectors;  // columns match values
    int sweeps = 0;
};

/// Cyclic complex Jacobi. Stops once the off-diagonal Frobenius norm is below
/// `tol * ||A||_F`; throws Error(no_convergence) after `max_sweeps`.
template <class Real>
HermitianEigenResult<Real> jacobi_eigen(const BasicHermitianMatrix<Real>& input, Real tol = Real(1e-13),
                                        int max_sweeps = 100) {
    using std::abs;
    using std::sqrt;
    using Complex = std::complex<Real>;
    using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index d = input.rows();
    Matrix a = input.matrix();
    Matrix v = Matrix::Identity(d, d);
    const Real scale = a.norm();

    auto off_norm = [&] {
        Real s(0);
        for (Eigen::Index j = 0; j < d; ++j)
            for (Eigen::Index i = 0; i < d; ++i)
                if (i != j) s += std::norm(a(i, j));
        return sqrt(s);
    };

    HermitianEigenResult<Real> out;
    const Real threshold = tol * scale;
    while (off_norm() > threshold) {
        if (out.sweeps == max_sweeps)
            throw Error(ErrorCode::no_convergence, "Jacobi eigensolver did not converge");
        ++out.sweeps;
        for (Eigen::Index p = 0; p < d - 1; ++p) {
            for (Eigen::Index q = p + 1; q < d; ++q) {
                const Real mag = abs(a(p, q));
                if (mag == Real(0)) continue;
                // Rephase so the (p,q) block is real symmetric, then apply a real rotation.
                const Complex phase = a(p, q) / mag;
                const Real app = a(p, p).real();
                const Real aqq = a(q, q).real();
                const Real theta = (aqq - app) / (Real(2) * mag);
                const Real t = (theta >= 0 ? Real(1) : Real(-1)) / (abs(theta) + sqrt(Real(1) + theta * theta));
                const Real c = Real(1) / sqrt(Real(1) + t * t);
                const Real s = t * c;
                // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
                const Complex gpp = c;
                const Complex gpq = s;
                const Complex gqp = -s * std::conj(phase);
                const Complex gqq = c * std::conj(phase);
                for (Eigen::Index k = 0; k < d; ++k) {  // A <- A G, V <- V G
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
                for (Eigen::Index k = 0; k < d; ++k) {  // A <- G^* A
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = Complex(0);
                a(q, p) = Complex(0);
                a(p, p) = Complex(a(p, p).real());
                a(q, q) = Complex(a(q, q).real());
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });
    out.values.resize(d);
    out.vectors.resize(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
        out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
    }
    return out;
}

/// Spectrum sorted non-increasing.
template <class Real>
Eigen::Matrix<Real, Eigen::Dynamic, 1> eigenvalues_hermitian(const BasicHermitianMatrix<Real>& a) {
    return jacobi_eigen(a).values;
}

}  // namespace repmat
