#include "calderon/forward.hpp"

#include <Eigen/SparseCholesky>
#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace calderon {

namespace {

constexpr int kEdgePoints = 20;

struct EdgeRule {
    std::vector<double> t;
    std::vector<double> w;
};

// Gauss-Legendre nodes and weights on [0, 1].
const EdgeRule& edge_rule()
{
    static const EdgeRule rule = [] {
        using Gauss = boost::math::quadrature::gauss<double, kEdgePoints>;
        EdgeRule r;
        const auto& x = Gauss::abscissa();
        const auto& w = Gauss::weights();
        for (std::size_t i = 0; i < x.size(); ++i) {
            r.t.push_back(0.5 * (1.0 + x[i]));
            r.w.push_back(0.5 * w[i]);
            if (x[i] != 0.0) {
                r.t.push_back(0.5 * (1.0 - x[i]));
                r.w.push_back(0.5 * w[i]);
            }
        }
        return r;
    }();
    return rule;
}

} // namespace

double harmonic_extension(BasisIndex k, double x, double y)
{
    if (k.k() == 0) return 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const std::complex<double> zn = std::pow(std::complex<double>(x, y), k.mode());
    const double v = k.parity() == Parity::cosine ? zn.real() : zn.imag();
    return v / std::sqrt(std::numbers::pi);
}

ForwardSolver::ForwardSolver(DiskMesh mesh, int k_max) : mesh_(std::move(mesh)), k_max_(k_max)
{
    if (k_max < 0) throw std::invalid_argument("ForwardSolver: k_max must be nonnegative");
    const std::size_t nv = mesh_.num_vertices();
    const std::size_t nt = mesh_.num_triangles();

    boundary_slot_.assign(nv, -1);
    for (std::size_t b = 0; b < mesh_.boundary_vertices.size(); ++b)
        boundary_slot_[mesh_.boundary_vertices[b]] = static_cast<int>(b);
    interior_index_.assign(nv, -1);
    for (std::size_t v = 0; v < nv; ++v)
        if (boundary_slot_[v] < 0) interior_index_[v] = n_interior_++;

    elements_.resize(nt);
    std::vector<Eigen::Triplet<double>> triplets;
    for (std::size_t t = 0; t < nt; ++t) {
        const auto& tri = mesh_.triangles[t];
        Element& e = elements_[t];
        e.area = mesh_.triangle_area(t);
        if (!(e.area > 0.0)) throw SolverError("ForwardSolver: degenerate triangle");
        for (int i = 0; i < 3; ++i) {
            const auto& pj = mesh_.vertices[tri[(i + 1) % 3]];
            const auto& pk = mesh_.vertices[tri[(i + 2) % 3]];
            e.grad(i, 0) = (pj.y() - pk.y()) / (2.0 * e.area);
            e.grad(i, 1) = (pk.x() - pj.x()) / (2.0 * e.area);
        }
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                const int ia = interior_index_[tri[a]], ib = interior_index_[tri[b]];
                if (ia >= 0 && ib >= 0) triplets.emplace_back(ia, ib, 1.0);
            }
    }
    pattern_.resize(n_interior_, n_interior_);
    pattern_.setFromTriplets(triplets.begin(), triplets.end());
    pattern_.makeCompressed();

    slots_.resize(nt);
    const int* outer = pattern_.outerIndexPtr();
    const int* inner = pattern_.innerIndexPtr();
    for (std::size_t t = 0; t < nt; ++t) {
        const auto& tri = mesh_.triangles[t];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                const int row = interior_index_[tri[a]], col = interior_index_[tri[b]];
                int slot = -1;
                if (row >= 0 && col >= 0) {
                    const int* first = inner + outer[col];
                    const int* last = inner + outer[col + 1];
                    slot = static_cast<int>(std::lower_bound(first, last, row) - inner);
                }
                slots_[t][3 * a + b] = slot;
            }
    }

    W_ = gradient_integrals(0, k_max_);
}

std::vector<std::vector<Eigen::Vector2d>> ForwardSolver::gradient_integrals(int k_from, int k_to) const
{
    const int count = std::max(0, k_to - k_from + 1);
    std::vector<std::vector<Eigen::Vector2d>> W(
        count, std::vector<Eigen::Vector2d>(mesh_.num_triangles(), Eigen::Vector2d::Zero()));
    if (count == 0) return W;
    const int n_max = BasisIndex(k_to).mode();
    const EdgeRule& rule = edge_rule();
    const double scale = 1.0 / std::sqrt(std::numbers::pi);
    std::vector<std::complex<double>> zpow(n_max + 1);

    for (std::size_t t = 0; t < mesh_.num_triangles(); ++t) {
        const auto& tri = mesh_.triangles[t];
        for (int e = 0; e < 3; ++e) {
            const Eigen::Vector2d p = mesh_.vertices[tri[e]];
            const Eigen::Vector2d q = mesh_.vertices[tri[(e + 1) % 3]];
            // outward normal times edge length for a positively oriented triangle
            const Eigen::Vector2d nl(q.y() - p.y(), p.x() - q.x());
            for (std::size_t g = 0; g < rule.t.size(); ++g) {
                const Eigen::Vector2d x = p + rule.t[g] * (q - p);
                const std::complex<double> z(x.x(), x.y());
                zpow[0] = 1.0;
                for (int n = 1; n <= n_max; ++n) zpow[n] = zpow[n - 1] * z;
                for (int k = std::max(k_from, 1); k <= k_to; ++k) {
                    const BasisIndex bk(k);
                    const auto& zn = zpow[bk.mode()];
                    const double w = scale * (bk.parity() == Parity::cosine ? zn.real() : zn.imag());
                    W[k - k_from][t] += rule.w[g] * w * nl;
                }
            }
        }
    }
    return W;
}

TriangleConductivity ForwardSolver::sample(const ConductivityField& gamma) const
{
    TriangleConductivity out(mesh_.num_triangles());
    for (std::size_t t = 0; t < out.size(); ++t) {
        const Eigen::Vector2d c = mesh_.barycenter(t);
        out[t] = gamma.field.interpolate(c.x(), c.y());
    }
    return out;
}

TriangleConductivity ForwardSolver::sample(const ConductivityFunction& gamma) const
{
    TriangleConductivity out(mesh_.num_triangles());
    for (std::size_t t = 0; t < out.size(); ++t) {
        const Eigen::Vector2d c = mesh_.barycenter(t);
        out[t] = gamma(c.x(), c.y());
    }
    return out;
}

Eigen::MatrixXd ForwardSolver::solve_nodal(const TriangleConductivity& gamma,
                                           const Eigen::MatrixXd& boundary_values) const
{
    if (gamma.size() != mesh_.num_triangles())
        throw std::invalid_argument("solve_nodal: conductivity size does not match mesh");
    if (boundary_values.rows() != static_cast<Eigen::Index>(mesh_.boundary_vertices.size()))
        throw std::invalid_argument("solve_nodal: boundary data size does not match mesh");

    const Eigen::Index m = boundary_values.cols();
    Eigen::SparseMatrix<double> A = pattern_;
    std::fill(A.valuePtr(), A.valuePtr() + A.nonZeros(), 0.0);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n_interior_, m);
    double* val = A.valuePtr();

    for (std::size_t t = 0; t < elements_.size(); ++t) {
        const double g = gamma[t];
        if (!std::isfinite(g) || !(g > 0.0)) throw SolverError("solve_nodal: conductivity not positive");
        const Element& e = elements_[t];
        const Eigen::Matrix3d local = g * e.area * (e.grad * e.grad.transpose());
        const auto& tri = mesh_.triangles[t];
        for (int a = 0; a < 3; ++a) {
            const int ia = interior_index_[tri[a]];
            if (ia < 0) continue;
            for (int b = 0; b < 3; ++b) {
                const int s = slots_[t][3 * a + b];
                if (s >= 0) {
                    val[s] += local(a, b);
                } else {
                    rhs.row(ia) -= local(a, b) * boundary_values.row(boundary_slot_[tri[b]]);
                }
            }
        }
    }

    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(A);
    if (llt.info() != Eigen::Success) throw SolverError("solve_nodal: stiffness matrix not positive definite");
    const Eigen::MatrixXd ui = llt.solve(rhs);
    if (llt.info() != Eigen::Success || !ui.allFinite()) throw SolverError("solve_nodal: back-substitution failed");

    Eigen::MatrixXd u(mesh_.num_vertices(), m);
    for (std::size_t v = 0; v < mesh_.num_vertices(); ++v) {
        if (interior_index_[v] >= 0) u.row(v) = ui.row(interior_index_[v]);
        else u.row(v) = boundary_values.row(boundary_slot_[v]);
    }
    return u;
}

DirichletSolution ForwardSolver::solve(const TriangleConductivity& gamma, const BoundaryFunction& f) const
{
    Eigen::MatrixXd bv(mesh_.boundary_vertices.size(), 1);
    for (std::size_t b = 0; b < mesh_.boundary_vertices.size(); ++b) bv(b, 0) = f(mesh_.boundary_angles[b]);

    DirichletSolution sol;
    sol.u = solve_nodal(gamma, bv).col(0);
    sol.f = f;
    sol.gamma = gamma;

    Eigen::VectorXd residual = Eigen::VectorXd::Zero(mesh_.num_vertices());
    for (std::size_t t = 0; t < elements_.size(); ++t) {
        const auto& tri = mesh_.triangles[t];
        const Element& e = elements_[t];
        const Eigen::Vector3d ut(sol.u[tri[0]], sol.u[tri[1]], sol.u[tri[2]]);
        const Eigen::Vector2d grad = e.grad.transpose() * ut;
        sol.energy += gamma[t] * e.area * grad.squaredNorm();
        const Eigen::Vector3d r = gamma[t] * e.area * (e.grad * grad);
        for (int a = 0; a < 3; ++a) residual[tri[a]] += r[a];
    }
    for (int v : mesh_.boundary_vertices) sol.net_flux += residual[v];
    return sol;
}

OperatorMatrix ForwardSolver::assemble(const TriangleConductivity& gamma, int J, int K, double r) const
{
    if (J < 1 || K < 1) throw std::invalid_argument("assemble: J and K must be positive");
    const std::size_t nb = mesh_.boundary_vertices.size();
    Eigen::MatrixXd bv(nb, J);
    for (int j = 1; j <= J; ++j)
        for (std::size_t b = 0; b < nb; ++b) bv(b, j - 1) = basis_eval(BasisIndex(j), mesh_.boundary_angles[b]);

    std::vector<std::size_t> active;
    for (std::size_t t = 0; t < gamma.size() && t < elements_.size(); ++t)
        if (std::abs(gamma[t] - 1.0) > 1e-13) active.push_back(t);

    OperatorMatrix out(J, K, r);
    if (active.empty()) {
        if (gamma.size() != mesh_.num_triangles())
            throw std::invalid_argument("assemble: conductivity size does not match mesh");
        return out;
    }
    const Eigen::MatrixXd u = solve_nodal(gamma, bv);

    std::vector<std::vector<Eigen::Vector2d>> extra;
    if (K > k_max_) extra = gradient_integrals(k_max_ + 1, K);
    auto W = [&](int k) -> const std::vector<Eigen::Vector2d>& {
        return k <= k_max_ ? W_[k] : extra[k - k_max_ - 1];
    };

    const Eigen::Index na = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd gx(na, J), gy(na, J), wx(na, K), wy(na, K);
    Eigen::VectorXd d(na);
    for (Eigen::Index i = 0; i < na; ++i) {
        const std::size_t t = active[i];
        const auto& tri = mesh_.triangles[t];
        const Element& e = elements_[t];
        d[i] = gamma[t] - 1.0;
        for (int j = 0; j < J; ++j) {
            const Eigen::Vector3d ut(u(tri[0], j), u(tri[1], j), u(tri[2], j));
            const Eigen::Vector2d g = e.grad.transpose() * ut;
            gx(i, j) = g.x();
            gy(i, j) = g.y();
        }
        for (int k = 1; k <= K; ++k) {
            const Eigen::Vector2d& w = W(k)[t];
            wx(i, k - 1) = w.x();
            wy(i, k - 1) = w.y();
        }
    }
    Eigen::MatrixXd t = gx.transpose() * d.asDiagonal() * wx + gy.transpose() * d.asDiagonal() * wy;
    for (int j = 1; j <= J; ++j) t.row(j - 1) *= std::pow(1.0 + eigenvalue(BasisIndex(j)), -r / 2.0);
    out.entries() = t;
    return out;
}

DirichletSolution solve_dirichlet(const ConductivityField& gamma, const BoundaryFunction& f,
                                  const DiskMesh& mesh)
{
    ForwardSolver solver(mesh, 0);
    return solver.solve(solver.sample(gamma), f);
}

double dtn_diff_entry(const ConductivityField& gamma, BasisIndex j, BasisIndex k, const DiskMesh& mesh)
{
    if (j.k() < 1 || k.k() < 1) throw std::invalid_argument("dtn_diff_entry: indices must be >= 1");
    ForwardSolver solver(mesh, k.k());
    return solver.assemble(solver.sample(gamma), j.k(), k.k(), 0.0)(j.k(), k.k());
}

OperatorMatrix assemble_dtn_matrix(const ConductivityField& gamma, int J, int K, double r,
                                   const DiskMesh& mesh)
{
    ForwardSolver solver(mesh, K);
    return solver.assemble(solver.sample(gamma), J, K, r);
}

double analytic_dtn_concentric(double kappa, double rho, int n)
{
    if (!(kappa > 0.0) || !(rho > 0.0 && rho < 1.0) || n < 1)
        throw std::invalid_argument("analytic_dtn_concentric: need kappa > 0, 0 < rho < 1, n >= 1");
    const double mu = (1.0 - kappa) / (1.0 + kappa);
    const double q = mu * std::pow(rho, 2 * n);
    return n * (1.0 - q) / (1.0 + q);
}

OperatorMatrix analytic_dtn_matrix(double kappa, double rho, int J, int K, double r)
{
    OperatorMatrix out(J, K, r);
    for (int j = 1; j <= std::min(J, K); ++j) {
        const int n = BasisIndex(j).mode();
        out(j, j) = std::pow(1.0 + eigenvalue(BasisIndex(j)), -r / 2.0)
            * (analytic_dtn_concentric(kappa, rho, n) - n);
    }
    return out;
}

} // namespace calderon
