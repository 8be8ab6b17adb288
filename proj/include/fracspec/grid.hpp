#pragma once

#include "fracspec/geometry.hpp"

#include <vector>

namespace fracspec {

/// Uniform grid of cell centers over a bounding box that contains the
/// domain plus one padding cell per side. Domain-boundary coordinates of
/// interval/box kinds land exactly on cell interfaces, and halving h keeps
/// the interfaces nested.
struct Grid {
    int N = 1;
    Point lo{0.0, 0.0};  // box corner (cell interfaces, not centers)
    double h = 0.0;
    int nx = 0;          // cells per axis, padding included
    int ny = 1;

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    Point node(int i, int j = 0) const {
        return {lo[0] + (i + 0.5) * h, N == 2 ? lo[1] + (j + 0.5) * h : 0.0};
    }
    std::size_t index(int i, int j = 0) const {
        return static_cast<std::size_t>(j) * nx + i;
    }
    BoundingBox box() const {
        return {lo, {lo[0] + nx * h, N == 2 ? lo[1] + ny * h : 0.0}};
    }
};

/// Build a grid for a domain with roughly cells_across cells spanning the
/// domain's bounding box (exactly that many across the first axis).
Grid make_grid(const Domain& d, int cells_across);

/// Values on grid nodes; identically zero at nodes outside the domain.
struct GridFunction {
    Grid grid;
    const Domain* domain = nullptr;
    std::vector<double> values;

    double at(int i, int j = 0) const { return values[grid.index(i, j)]; }
};

/// Indices of grid nodes whose centers lie inside the domain, in row-major
/// order; the collocation unknowns of the discretized operator.
std::vector<std::size_t> interior_nodes(const Grid& g, const Domain& d);

} // namespace fracspec
