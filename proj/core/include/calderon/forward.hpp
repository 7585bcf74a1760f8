#pragma once

// P1 finite elements for div(gamma grad u) = 0 on the unit disk and the
// spectral assembly of the difference DtN operator Lambda_gamma - Lambda_1.

#include "calderon/conductivity.hpp"
#include "calderon/mesh.hpp"
#include "calderon/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <array>
#include <stdexcept>
#include <vector>

namespace calderon {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per-triangle conductivity values, one per mesh triangle.
using TriangleConductivity = std::vector<double>;

struct DirichletSolution {
    Eigen::VectorXd u;
    BoundaryFunction f;
    TriangleConductivity gamma;
    /// integral of gamma |grad u_h|^2
    double energy = 0.0;
    /// Discrete boundary flux tested against the constant function.
    double net_flux = 0.0;
};

/// Harmonic extension of phi_k into the disk: Re z^n / sqrt(pi) or
/// Im z^n / sqrt(pi), and 1/sqrt(2 pi) for k = 0.
double harmonic_extension(BasisIndex k, double x, double y);

/// Holds a mesh with its element geometry and, for each basis index up to
/// k_max, the element integrals of the gradient of the harmonic extension.
/// All solve methods are const and may be called concurrently.
class ForwardSolver {
public:
    explicit ForwardSolver(DiskMesh mesh, int k_max = 32);

    const DiskMesh& mesh() const noexcept { return mesh_; }
    int k_max() const noexcept { return k_max_; }

    /// Bilinear interpolation of the grid field at triangle barycenters.
    TriangleConductivity sample(const ConductivityField& gamma) const;
    /// Direct evaluation at triangle barycenters.
    TriangleConductivity sample(const ConductivityFunction& gamma) const;

    /// Nodal solutions for each column of boundary nodal data (one row per
    /// boundary vertex). One factorization serves all columns.
    Eigen::MatrixXd solve_nodal(const TriangleConductivity& gamma,
                                const Eigen::MatrixXd& boundary_values) const;

    DirichletSolution solve(const TriangleConductivity& gamma, const BoundaryFunction& f) const;

    /// t_jk = (1+lambda_j)^{-r/2} <(Lambda_gamma - Lambda_1) phi_j, phi_k>, 1 <= j <= J, 1 <= k <= K.
    OperatorMatrix assemble(const TriangleConductivity& gamma, int J, int K, double r) const;

private:
    struct Element {
        double area;
        Eigen::Matrix<double, 3, 2> grad; // rows: gradients of the barycentric basis
    };

    // W[k - k_from][t] = integral over triangle t of grad w_k
    std::vector<std::vector<Eigen::Vector2d>> gradient_integrals(int k_from, int k_to) const;

    DiskMesh mesh_;
    int k_max_;
    std::vector<Element> elements_;
    std::vector<int> interior_index_; // -1 on boundary
    std::vector<int> boundary_slot_;  // position in boundary_vertices or -1
    int n_interior_ = 0;
    Eigen::SparseMatrix<double> pattern_;   // interior-interior stiffness pattern
    std::vector<std::array<int, 9>> slots_; // local pair -> value index in pattern_, or -1
    std::vector<std::vector<Eigen::Vector2d>> W_;
};

/// Convenience wrappers building a solver for a single call.
DirichletSolution solve_dirichlet(const ConductivityField& gamma, const BoundaryFunction& f,
                                  const DiskMesh& mesh);
double dtn_diff_entry(const ConductivityField& gamma, BasisIndex j, BasisIndex k, const DiskMesh& mesh);
OperatorMatrix assemble_dtn_matrix(const ConductivityField& gamma, int J, int K, double r,
                                   const DiskMesh& mesh);

/// n (1 - mu rho^{2n}) / (1 + mu rho^{2n}) with mu = (1 - kappa)/(1 + kappa): the
/// DtN eigenvalue at mode n for conductivity kappa on |x| < rho and 1 outside.
double analytic_dtn_concentric(double kappa, double rho, int n);

/// Difference DtN matrix of the concentric conductivity: diagonal with
/// entries (1+lambda_j)^{-r/2} (analytic_dtn_concentric(n) - n).
OperatorMatrix analytic_dtn_matrix(double kappa, double rho, int J, int K, double r);

} // namespace calderon
