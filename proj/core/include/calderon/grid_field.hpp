#pragma once

#include <functional>
#include <vector>

namespace calderon {

/// Uniform n x n grid over [-1, 1]^2. Point (ix, iy) sits at
/// (-1 + ix*h, -1 + iy*h) with h = 2/(n-1).
class Grid {
public:
    explicit Grid(int n);

    int n() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }
    double coord(int i) const noexcept { return -1.0 + i * h_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_; }
    std::size_t index(int ix, int iy) const noexcept
    {
        return static_cast<std::size_t>(iy) * n_ + ix;
    }
    /// Closed unit disk mask.
    bool in_disk(int ix, int iy) const noexcept;

    bool operator==(const Grid&) const = default;

private:
    int n_;
    double h_;
};

/// Real samples on a Grid, stored row-major (iy outer). Values outside the
/// disk are kept so that interpolation near the boundary circle is well defined.
class GridField {
public:
    GridField() : grid_(2) {}
    explicit GridField(Grid grid, double fill = 0.0);
    GridField(Grid grid, std::vector<double> values);

    static GridField from_function(Grid grid, const std::function<double(double, double)>& f);

    const Grid& grid() const noexcept { return grid_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::vector<double>& values() noexcept { return values_; }

    double at(int ix, int iy) const noexcept { return values_[grid_.index(ix, iy)]; }
    double& at(int ix, int iy) noexcept { return values_[grid_.index(ix, iy)]; }

    /// Bilinear interpolation; (x, y) is clamped to the grid square.
    double interpolate(double x, double y) const noexcept;

    /// Maximum of |value| over grid points in the closed disk.
    double sup_norm() const;
    double min_in_disk() const;

    GridField& operator+=(const GridField& other);
    GridField& operator*=(double s);

private:
    Grid grid_;
    std::vector<double> values_;
};

GridField operator*(double s, GridField f);
GridField operator-(const GridField& a, const GridField& b);

} // namespace calderon
