#include "fracspec/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracspec {

Grid make_grid(const Domain& d, int cells_across) {
    if (cells_across < 4)
        throw std::invalid_argument("make_grid: need at least 4 cells across");
    const BoundingBox bb = d.bounding_box();
    Grid g;
    g.N = d.dimension();
    g.h = (bb.hi[0] - bb.lo[0]) / cells_across;
    g.lo = {bb.lo[0] - g.h, bb.lo[1] - g.h};
    g.nx = cells_across + 2;
    if (g.N == 2) {
        const int across_y = static_cast<int>(std::ceil((bb.hi[1] - bb.lo[1]) / g.h - 1e-12));
        g.ny = across_y + 2;
    } else {
        g.lo[1] = 0.0;
        g.ny = 1;
    }
    return g;
}

std::vector<std::size_t> interior_nodes(const Grid& g, const Domain& d) {
    std::vector<std::size_t> idx;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            if (d.contains(g.node(i, j))) idx.push_back(g.index(i, j));
    return idx;
}

} // namespace fracspec
