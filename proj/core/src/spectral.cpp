#include "calderon/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace calderon {

namespace {

void require_same_shape(const OperatorMatrix& a, const OperatorMatrix& b, const char* what)
{
    if (a.J() != b.J() || a.K() != b.K())
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
    if (a.r() != b.r())
        throw std::invalid_argument(std::string(what) + ": heteroscedasticity index mismatch");
}

double weight(int k, double exponent)
{
    return std::pow(1.0 + eigenvalue(BasisIndex(k)), exponent);
}

} // namespace

BasisIndex::BasisIndex(int k) : k_(k)
{
    if (k < 0) throw std::invalid_argument("BasisIndex: k must be nonnegative");
}

double eigenvalue(BasisIndex k)
{
    const double n = k.mode();
    return n * n;
}

double basis_eval(BasisIndex k, double angle)
{
    using std::numbers::pi;
    switch (k.parity()) {
    case Parity::constant:
        return 1.0 / std::sqrt(2.0 * pi);
    case Parity::cosine:
        return std::cos(k.mode() * angle) / std::sqrt(pi);
    case Parity::sine:
        return std::sin(k.mode() * angle) / std::sqrt(pi);
    }
    return 0.0;
}

double BoundaryFunction::operator()(double angle) const
{
    double v = 0.0;
    for (int k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0) v += coeffs[k] * basis_eval(BasisIndex(k), angle);
    return v;
}

BoundaryFunction BoundaryFunction::single_mode(int k, double amplitude)
{
    BoundaryFunction f{Eigen::VectorXd::Zero(BasisIndex(k).k() + 1)};
    f.coeffs[k] = amplitude;
    return f;
}

double sobolev_norm(const BoundaryFunction& f, double r, bool quotient)
{
    double s = 0.0;
    for (int k = quotient ? 1 : 0; k < f.coeffs.size(); ++k)
        s += weight(k, r) * f.coeffs[k] * f.coeffs[k];
    return std::sqrt(s);
}

OperatorMatrix::OperatorMatrix(int J, int K, double r)
    : entries_(Eigen::MatrixXd::Zero(J, K)), r_(r)
{
    if (J < 0 || K < 0) throw std::invalid_argument("OperatorMatrix: negative truncation");
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXd entries, double r)
    : entries_(std::move(entries)), r_(r)
{
}

Eigen::MatrixXd OperatorMatrix::unweighted() const
{
    Eigen::MatrixXd m = entries_;
    for (int j = 1; j <= J(); ++j) m.row(j - 1) *= weight(j, r_ / 2.0);
    return m;
}

double hs_inner(const OperatorMatrix& a, const OperatorMatrix& b)
{
    require_same_shape(a, b, "hs_inner");
    return a.entries().cwiseProduct(b.entries()).sum();
}

double hs_norm(const OperatorMatrix& T)
{
    return T.entries().norm();
}

double hs_norm_between(const OperatorMatrix& T, double p, double q)
{
    // <T phi_j^(p), phi_k^(q)>_{H^q} = (1+l_j)^(-p/2) (1+l_k)^(q/2) <T phi_j, phi_k>
    Eigen::MatrixXd m = T.unweighted();
    for (int j = 1; j <= T.J(); ++j) m.row(j - 1) *= weight(j, -p / 2.0);
    for (int k = 1; k <= T.K(); ++k) m.col(k - 1) *= weight(k, q / 2.0);
    return m.norm();
}

OperatorMatrix project(const OperatorMatrix& T, int J, int K)
{
    if (J < 0 || K < 0 || J > T.J() || K > T.K())
        throw std::invalid_argument("project: truncation exceeds stored block");
    OperatorMatrix out(T.J(), T.K(), T.r());
    out.entries().topLeftCorner(J, K) = T.entries().topLeftCorner(J, K);
    return out;
}

double op_norm_star(const OperatorMatrix& T)
{
    if (T.J() == 0 || T.K() == 0) return 0.0;
    // A(k, j) = (1+l_k)^(-1/4) <T phi_j, phi_k> (1+l_j)^(-1/4)
    Eigen::MatrixXd a = T.unweighted().transpose();
    for (int k = 1; k <= T.K(); ++k) a.row(k - 1) *= weight(k, -0.25);
    for (int j = 1; j <= T.J(); ++j) a.col(j - 1) *= weight(j, -0.25);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    return svd.singularValues()(0);
}

OperatorMatrix rescale_index(const OperatorMatrix& T, double r_new)
{
    if (r_new == T.r()) return T;
    OperatorMatrix out(T.entries(), r_new);
    const double e = (r_new - T.r()) / 2.0;
    for (int j = 1; j <= T.J(); ++j) out.entries().row(j - 1) *= weight(j, -e);
    return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b)
{
    require_same_shape(a, b, "operator-");
    return OperatorMatrix(a.entries() - b.entries(), a.r());
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b)
{
    require_same_shape(a, b, "operator+");
    return OperatorMatrix(a.entries() + b.entries(), a.r());
}

} // namespace calderon
