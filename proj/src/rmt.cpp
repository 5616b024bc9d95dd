#include "repmat/rmt.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <sstream>

namespace repmat {

namespace {

constexpr double kSingularPivot = 1e-200;

}  // namespace

Eigen::MatrixXcd sample_haar_unitary(int d, RngStream& rng) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "Haar unitary needs d >= 1");
    const double s = std::sqrt(0.5);
    while (true) {
        Eigen::MatrixXcd z(d, d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) {
                const double re = rng.normal();
                const double im = rng.normal();
                z(i, j) = {s * re, s * im};
            }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
        Eigen::MatrixXcd q = qr.householderQ();
        const auto& r = qr.matrixQR();
        bool singular = false;
        for (int j = 0; j < d; ++j) {
            const double mag = std::abs(r(j, j));
            if (mag < kSingularPivot) {
                singular = true;
                break;
            }
            q.col(j) *= r(j, j) / mag;
        }
        if (!singular) return q;
    }
}

Eigen::MatrixXd sample_haar_rotation(int d, RngStream& rng) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "Haar rotation needs d >= 1");
    while (true) {
        Eigen::MatrixXd z(d, d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) z(i, j) = rng.normal();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
        Eigen::MatrixXd q = qr.householderQ();
        const auto& r = qr.matrixQR();
        bool singular = false;
        for (int j = 0; j < d; ++j) {
            if (std::abs(r(j, j)) < kSingularPivot) {
                singular = true;
                break;
            }
            if (r(j, j) < 0) q.col(j) = -q.col(j);
        }
        if (singular) continue;
        // Haar on O(d); flipping one column maps the det = -1 coset onto SO(d) measure-preservingly.
        if (q.determinant() < 0) q.col(0) = -q.col(0);
        return q;
    }
}

InvariantMatrixModel InvariantMatrixModel::fixed(const Eigen::VectorXd& eigenvalues) {
    std::ostringstream desc;
    desc << "fixed spectrum (";
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) desc << (i ? "," : "") << eigenvalues(i);
    desc << ")";
    return InvariantMatrixModel{static_cast<int>(eigenvalues.size()),
                                [eigenvalues](RngStream&) { return eigenvalues; }, desc.str()};
}

HermitianMatrix sample_invariant(const InvariantMatrixModel& model, RngStream& rng) {
    const Eigen::VectorXd lambda = model.eigenvalue_sampler(rng);
    if (lambda.size() != model.d) throw Error(ErrorCode::rank_mismatch, "eigenvalue sampler returned wrong length");
    if (!lambda.allFinite()) throw Error(ErrorCode::invalid_argument, "eigenvalue sampler returned non-finite values");
    const Eigen::MatrixXcd u = sample_haar_unitary(model.d, rng);
    const Eigen::MatrixXcd a = u * lambda.cast<std::complex<double>>().asDiagonal() * u.adjoint();
    return HermitianMatrix(a);
}

HermitianMatrix corner(const HermitianMatrix& a, int d) {
    if (d < 1 || d > a.dim()) throw Error(ErrorCode::rank_constraint, "corner size out of range");
    return HermitianMatrix(Eigen::MatrixXcd(a.matrix().topLeftCorner(d, d)));
}

HermitianMatrix sample_gue_v(int d, double v, RngStream& rng) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "GUE needs d >= 1");
    if (!(v >= 0)) throw Error(ErrorCode::invalid_argument, "GUE_v needs v >= 0");
    const double s = std::sqrt(0.5);
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i) {
        g(i, i) = rng.normal();
        for (int j = i + 1; j < d; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = {s * re, s * im};
            g(j, i) = std::conj(g(i, j));
        }
    }
    const std::complex<double> tr = g.trace() / static_cast<double>(d);
    const double x = v > 0 ? std::sqrt(v) * rng.normal() : 0.0;
    g.diagonal().array() += x - tr;
    return HermitianMatrix(g);
}

HermitianMatrix sum_independent(const InvariantMatrixModel& a, const InvariantMatrixModel& b, RngStream& rng) {
    if (a.d != b.d) throw Error(ErrorCode::rank_mismatch, "sum_independent: rank mismatch");
    RngStream ra = rng.fork(0);
    RngStream rb = rng.fork(1);
    return sample_invariant(a, ra) + sample_invariant(b, rb);
}

}  // namespace repmat
