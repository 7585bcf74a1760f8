#include "calderon/mesh.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace calderon {

namespace {

struct Ring {
    int first = 0;
    int count = 0;
    double offset = 0.0;

    double angle(int i) const { return offset + 2.0 * std::numbers::pi * i / count; }
};

double signed_area(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c)
{
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

void add_triangle(DiskMesh& mesh, int a, int b, int c)
{
    if (signed_area(mesh.vertices[a], mesh.vertices[b], mesh.vertices[c]) < 0) std::swap(b, c);
    mesh.triangles.push_back({a, b, c});
}

// Stitch the annulus between two rings, walking both by angle.
void zip(DiskMesh& mesh, const Ring& inner, const Ring& outer)
{
    int i = 0, j = 0;
    while (i < inner.count || j < outer.count) {
        const double next_inner = inner.angle(i + 1);
        const double next_outer = outer.angle(j + 1);
        const int a = inner.first + i % inner.count;
        const int b = outer.first + j % outer.count;
        const bool advance_inner =
            j == outer.count || (i < inner.count && next_inner <= next_outer);
        if (advance_inner) {
            add_triangle(mesh, a, inner.first + (i + 1) % inner.count, b);
            ++i;
        } else {
            add_triangle(mesh, a, outer.first + (j + 1) % outer.count, b);
            ++j;
        }
    }
}

} // namespace

double DiskMesh::triangle_area(std::size_t t) const
{
    const auto& tri = triangles[t];
    return signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
}

Eigen::Vector2d DiskMesh::barycenter(std::size_t t) const
{
    const auto& tri = triangles[t];
    return (vertices[tri[0]] + vertices[tri[1]] + vertices[tri[2]]) / 3.0;
}

double DiskMesh::total_area() const
{
    double a = 0.0;
    for (std::size_t t = 0; t < triangles.size(); ++t) a += triangle_area(t);
    return a;
}

DiskMesh build_mesh(double h)
{
    if (!(h > 0.0 && h < 0.5)) throw std::invalid_argument("build_mesh: h must lie in (0, 0.5)");

    DiskMesh mesh;
    mesh.h = h;
    mesh.rings = static_cast<int>(std::ceil(1.0 / h - 1e-9));
    const int nr = mesh.rings;

    mesh.vertices.emplace_back(0.0, 0.0);
    std::vector<Ring> rings;
    for (int i = 1; i <= nr; ++i) {
        const double radius = (i == nr) ? 1.0 : static_cast<double>(i) / nr;
        Ring ring;
        ring.first = static_cast<int>(mesh.vertices.size());
        ring.count = std::max(6, static_cast<int>(std::ceil(2.0 * std::numbers::pi * radius / h - 1e-9)));
        // stagger alternate rings by half a step
        ring.offset = (i % 2 == 0) ? std::numbers::pi / ring.count : 0.0;
        for (int k = 0; k < ring.count; ++k) {
            const double a = ring.angle(k);
            mesh.vertices.emplace_back(radius * std::cos(a), radius * std::sin(a));
        }
        rings.push_back(ring);
    }

    const Ring& first = rings.front();
    for (int k = 0; k < first.count; ++k)
        add_triangle(mesh, 0, first.first + k, first.first + (k + 1) % first.count);
    for (std::size_t i = 1; i < rings.size(); ++i) zip(mesh, rings[i - 1], rings[i]);

    const Ring& outer = rings.back();
    for (int k = 0; k < outer.count; ++k) {
        mesh.boundary_vertices.push_back(outer.first + k);
        mesh.boundary_angles.push_back(outer.angle(k));
    }
    return mesh;
}

void write_mesh(std::ostream& os, const DiskMesh& mesh)
{
    os.precision(17);
    os << "vertices " << mesh.vertices.size() << '\n';
    for (const auto& v : mesh.vertices) os << v.x() << ' ' << v.y() << '\n';
    os << "triangles " << mesh.triangles.size() << '\n';
    for (const auto& t : mesh.triangles) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

} // namespace calderon
