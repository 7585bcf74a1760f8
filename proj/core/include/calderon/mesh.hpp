#pragma once

#include <Eigen/Core>

#include <array>
#include <iosfwd>
#include <vector>

namespace calderon {

/// Triangulation of the closed unit disk built from concentric rings.
///
/// Ring radii are i / ceil(1/h); ring i carries max(6, ceil(2 pi r_i / h))
/// equally spaced vertices, so any radius of the form p / ceil(1/h) is
/// resolved by mesh edges. boundary_vertices lists the outer ring by angle.
struct DiskMesh {
    std::vector<Eigen::Vector2d> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> boundary_vertices;
    std::vector<double> boundary_angles;
    double h = 0.0;
    int rings = 0;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_triangles() const { return triangles.size(); }

    double triangle_area(std::size_t t) const;
    Eigen::Vector2d barycenter(std::size_t t) const;
    double total_area() const;
};

DiskMesh build_mesh(double h);

/// Plain-text export: "vertices N", N lines "x y", "triangles M", M lines "a b c".
void write_mesh(std::ostream& os, const DiskMesh& mesh);

} // namespace calderon
