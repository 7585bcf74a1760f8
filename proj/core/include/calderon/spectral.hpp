#pragma once

// Spectral algebra on the boundary circle: the trigonometric Laplace-Beltrami
// eigenbasis, boundary Sobolev norms and Hilbert-Schmidt operator coefficients.

#include <Eigen/Dense>

namespace calderon {

enum class Parity { constant, cosine, sine };

/// Flat index k into the real trigonometric basis of L2(S^1).
///
/// k = 0 is the constant mode; odd k = 2n-1 is cos(n t), even k = 2n is
/// sin(n t). The eigenvalue of -d^2/dt^2 is n^2 with n = ceil(k/2).
class BasisIndex {
public:
    explicit BasisIndex(int k);

    int k() const noexcept { return k_; }
    int mode() const noexcept { return (k_ + 1) / 2; }
    Parity parity() const noexcept
    {
        if (k_ == 0) return Parity::constant;
        return (k_ % 2 == 1) ? Parity::cosine : Parity::sine;
    }

private:
    int k_;
};

/// lambda_k = ceil(k/2)^2, exact.
double eigenvalue(BasisIndex k);

/// phi_k(angle), orthonormal w.r.t. arc length on the unit circle.
double basis_eval(BasisIndex k, double angle);

/// Coefficients of a boundary function against phi_0 .. phi_Kmax.
struct BoundaryFunction {
    Eigen::VectorXd coeffs;

    int k_max() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double angle) const;

    static BoundaryFunction single_mode(int k, double amplitude = 1.0);
};

/// (sum_k (1+lambda_k)^r c_k^2)^(1/2). With quotient = true the constant mode
/// is dropped, which is the norm on H^r/C and on the mean-zero space.
double sobolev_norm(const BoundaryFunction& f, double r, bool quotient = false);

/// Finite coefficient block of an operator T in the H_r basis:
/// entries(j-1, k-1) = <T phi_j^(r), phi_k^(0)> for 1 <= j <= J, 1 <= k <= K.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(int J, int K, double r);
    OperatorMatrix(Eigen::MatrixXd entries, double r);

    int J() const noexcept { return static_cast<int>(entries_.rows()); }
    int K() const noexcept { return static_cast<int>(entries_.cols()); }
    double r() const noexcept { return r_; }

    /// 1-based access matching the basis indices.
    double operator()(int j, int k) const { return entries_(j - 1, k - 1); }
    double& operator()(int j, int k) { return entries_(j - 1, k - 1); }

    const Eigen::MatrixXd& entries() const noexcept { return entries_; }
    Eigen::MatrixXd& entries() noexcept { return entries_; }

    /// <T phi_j^(0), phi_k^(0)>, i.e. the entries with the H^r weight removed.
    Eigen::MatrixXd unweighted() const;

private:
    Eigen::MatrixXd entries_;
    double r_ = 0.0;
};

/// Frobenius inner product; both operands must share r and shape.
double hs_inner(const OperatorMatrix& a, const OperatorMatrix& b);
double hs_norm(const OperatorMatrix& T);

/// Norm of T in L2(H^p, H^q) computed on the stored block.
double hs_norm_between(const OperatorMatrix& T, double p, double q);

/// pi_JK: zero every entry with j > J or k > K. The result keeps the
/// stored shape so it can be compared against T directly.
OperatorMatrix project(const OperatorMatrix& T, int J, int K);

/// Operator norm H^{1/2}/C -> H^{-1/2} of the finite-rank operator stored in T.
double op_norm_star(const OperatorMatrix& T);

/// Re-express the same operator against phi_j^(r_new).
OperatorMatrix rescale_index(const OperatorMatrix& T, double r_new);

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);

} // namespace calderon
