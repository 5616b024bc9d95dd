#pragma once

#include "repmat/hermitian.hpp"

#include <complex>
#include <span>
#include <vector>

namespace repmat {

/// Element i*H of u(d), stored by its Hermitian part H.
struct LieElement {
    HermitianMatrix h;

    int dim() const noexcept { return h.dim(); }
    /// H - tr(H) I, with tr the normalized trace.
    LieElement centered() const;
};

/// Lie bracket in the Hermitian convention: [iX, iY] = i * (i (XY - YX)), so the result's
/// Hermitian part is i(XY - YX).
LieElement bracket(const LieElement& x, const LieElement& y);

struct TraceMomentOptions {
    int max_k = 8;
};

/// Normalized trace of the ordered product of eps * (rho_n(x_i) - centered * n tr(x_i) Id), where
/// rho_n is the n-th tensor power of the defining representation. Evaluated through the
/// set-partition expansion
///     eps^k sum_pi n (n-1) ... (n-|pi|+1) prod_{B in pi} tr(prod_{i in B} x_i)
/// without forming (C^d)^{(x) n}. The value is complex in general; it is real whenever the ordered
/// product is self-adjoint on average (e.g. all x_i equal).
std::complex<double> tensor_power_trace_moment(std::span<const LieElement> xs, long long n, bool centered,
                                               double eps, const TraceMomentOptions& opts = {});

/// Gaussian (Wick) mixed moment with covariance tr(x_i x_j) after centering:
/// sum over pairings of prod tr(x_i x_j), zero for odd k.
double wick_limit_moment(std::span<const LieElement> xs);

}  // namespace repmat
