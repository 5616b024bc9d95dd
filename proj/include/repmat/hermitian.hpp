#pragma once

#include "repmat/error.hpp"

#include <Eigen/Core>

#include <complex>

namespace repmat {

/// Complex self-adjoint d x d matrix. Construction symmetrizes (A + A^*) / 2 after checking the
/// defect ||A - A^*||_F <= 1e-12 * max(1, ||A||_F).
template <class Real>
class BasicHermitianMatrix {
public:
    using Scalar = std::complex<Real>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

    BasicHermitianMatrix() = default;

    explicit BasicHermitianMatrix(const Matrix& a) {
        if (a.rows() != a.cols()) throw Error(ErrorCode::not_hermitian, "matrix is not square");
        using std::max;
        const Real defect = (a - a.adjoint()).norm();
        if (defect > Real(1e-12) * max(Real(1), a.norm()))
            throw Error(ErrorCode::not_hermitian, "matrix is not Hermitian");
        m_ = (a + a.adjoint()) / Real(2);
    }

    static BasicHermitianMatrix diagonal(const RealVector& eigs) {
        BasicHermitianMatrix h;
        h.m_ = eigs.template cast<Scalar>().asDiagonal();
        return h;
    }

    static BasicHermitianMatrix identity(Eigen::Index d) {
        return diagonal(RealVector::Ones(d));
    }

    static BasicHermitianMatrix zero(Eigen::Index d) {
        BasicHermitianMatrix h;
        h.m_ = Matrix::Zero(d, d);
        return h;
    }

    Eigen::Index rows() const noexcept { return m_.rows(); }
    int dim() const noexcept { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const noexcept { return m_; }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    /// Tr / d.
    Real normalized_trace() const { return m_.trace().real() / Real(m_.rows()); }
    Real frobenius_norm() const { return m_.norm(); }

    BasicHermitianMatrix operator+(const BasicHermitianMatrix& other) const {
        if (other.rows() != rows()) throw Error(ErrorCode::rank_mismatch, "matrix size mismatch");
        BasicHermitianMatrix h;
        h.m_ = m_ + other.m_;
        return h;
    }

    BasicHermitianMatrix operator*(Real s) const {
        BasicHermitianMatrix h;
        h.m_ = m_ * s;
        return h;
    }

private:
    Matrix m_;
};

using HermitianMatrix = BasicHermitianMatrix<double>;

}  // namespace repmat
