#include "calderon/grid_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace calderon {

Grid::Grid(int n) : n_(n), h_(0.0)
{
    if (n < 2) throw std::invalid_argument("Grid: need at least 2 points per axis");
    h_ = 2.0 / (n - 1);
}

bool Grid::in_disk(int ix, int iy) const noexcept
{
    const double x = coord(ix), y = coord(iy);
    return x * x + y * y <= 1.0 + 1e-12;
}

GridField::GridField(Grid grid, double fill) : grid_(grid), values_(grid.size(), fill) {}

GridField::GridField(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw std::invalid_argument("GridField: value count does not match grid");
}

GridField GridField::from_function(Grid grid, const std::function<double(double, double)>& f)
{
    GridField out(grid);
    for (int iy = 0; iy < grid.n(); ++iy)
        for (int ix = 0; ix < grid.n(); ++ix)
            out.at(ix, iy) = f(grid.coord(ix), grid.coord(iy));
    return out;
}

double GridField::interpolate(double x, double y) const noexcept
{
    const int n = grid_.n();
    const double h = grid_.spacing();
    const double u = std::clamp((x + 1.0) / h, 0.0, static_cast<double>(n - 1));
    const double v = std::clamp((y + 1.0) / h, 0.0, static_cast<double>(n - 1));
    const int i0 = std::min(static_cast<int>(u), n - 2);
    const int j0 = std::min(static_cast<int>(v), n - 2);
    const double s = u - i0, t = v - j0;
    return (1 - s) * (1 - t) * at(i0, j0) + s * (1 - t) * at(i0 + 1, j0)
        + (1 - s) * t * at(i0, j0 + 1) + s * t * at(i0 + 1, j0 + 1);
}

double GridField::sup_norm() const
{
    double m = 0.0;
    for (int iy = 0; iy < grid_.n(); ++iy)
        for (int ix = 0; ix < grid_.n(); ++ix)
            if (grid_.in_disk(ix, iy)) m = std::max(m, std::abs(at(ix, iy)));
    return m;
}

double GridField::min_in_disk() const
{
    double m = std::numeric_limits<double>::infinity();
    for (int iy = 0; iy < grid_.n(); ++iy)
        for (int ix = 0; ix < grid_.n(); ++ix)
            if (grid_.in_disk(ix, iy)) m = std::min(m, at(ix, iy));
    return m;
}

GridField& GridField::operator+=(const GridField& other)
{
    if (!(grid_ == other.grid_)) throw std::invalid_argument("GridField: grid mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

GridField& GridField::operator*=(double s)
{
    for (double& v : values_) v *= s;
    return *this;
}

GridField operator*(double s, GridField f)
{
    f *= s;
    return f;
}

GridField operator-(const GridField& a, const GridField& b)
{
    if (!(a.grid() == b.grid())) throw std::invalid_argument("GridField: grid mismatch");
    GridField out = a;
    for (std::size_t i = 0; i < out.values().size(); ++i) out.values()[i] -= b.values()[i];
    return out;
}

} // namespace calderon
