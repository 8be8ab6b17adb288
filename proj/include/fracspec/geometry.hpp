#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fracspec {

/// Point in R^N, N in {1,2}; one-dimensional code uses component 0 only.
using Point = std::array<double, 2>;

struct BoundingBox {
    Point lo{0.0, 0.0};
    Point hi{0.0, 0.0};
    double diameter(int N) const;
};

/// Binary occupancy mask on a uniform grid of square cells of side h.
/// Cell (i, j) is centered at ((i+1/2)h, (j+1/2)h); a nonzero entry marks
/// an interior cell.
struct RasterMask {
    int nx = 0;
    int ny = 0;
    double h = 0.0;
    std::vector<std::uint8_t> inside;

    bool at(int i, int j) const {
        if (i < 0 || j < 0 || i >= nx || j >= ny) return false;
        return inside[static_cast<std::size_t>(j) * nx + i] != 0;
    }
};

enum class DomainKind { Interval, Ball, Box, Raster };

/// Bounded domain Omega with distance, measure and containment queries.
/// Analytic kinds answer exactly; the raster kind uses an exact Euclidean
/// distance transform on the grid with the boundary at cell interfaces.
class Domain {
  public:
    static Domain interval(double a, double b);
    static Domain ball(Point center, double radius);
    static Domain box(Point lo, Point hi);
    static Domain raster(RasterMask mask);

    DomainKind kind() const { return kind_; }
    int dimension() const { return dim_; }
    BoundingBox bounding_box() const;
    bool contains(const Point& x) const;

    /// rho(x) = dist(x, boundary), defined on all of R^N (nonnegative on
    /// both sides; use contains() to tell inside from outside).
    double distance_to_boundary(const Point& x) const;

    /// Unit direction of increase of rho at an interior point (zero where
    /// the gradient is undefined, e.g. at ridge points of the cut locus).
    Point rho_gradient(const Point& x) const;

    double volume() const;

    /// (N-1)-measure of {x in Omega : rho(x) = t}; counting measure for
    /// N = 1. Zero for t >= inradius.
    double level_set_measure(double t) const;

    double inradius() const;
    Point incenter() const;

    /// Deterministic sample of boundary points (used by the circumradius
    /// check).
    std::vector<Point> boundary_samples() const;

    std::string spec_string() const;

    const RasterMask& mask() const;

  private:
    Domain() = default;

    DomainKind kind_ = DomainKind::Interval;
    int dim_ = 1;
    // interval
    double a_ = 0.0, b_ = 0.0;
    // ball
    Point center_{0.0, 0.0};
    double radius_ = 0.0;
    // box
    Point lo_{0.0, 0.0}, hi_{0.0, 0.0};
    // raster
    RasterMask mask_;
    std::vector<double> signed_dist_; // per cell, >0 inside, <0 outside
    double max_rho_ = 0.0;
    int argmax_i_ = 0, argmax_j_ = 0;

    double raster_signed_at(const Point& x) const;
};

/// Witnesses for the inradius/circumradius hypothesis B_R c Omega c B_2R
/// and the level-set bound |Omega_t| <= c0 R^(N-1).
struct GeometryReport {
    double R = 0.0;
    Point center{0.0, 0.0};
    bool circum_ok = false;
    double c0 = 0.0;
    std::vector<std::pair<double, double>> t_samples;
};

GeometryReport check_geometry(const Domain& d, int t_sample_count = 64);

/// Domain spec grammar: interval:a,b | ball:r | box:ax,ay,bx,by |
/// raster:<path to P5 PGM with a "# h=<cellsize>" header comment>.
Domain parse_domain(const std::string& spec);

RasterMask load_pgm_mask(const std::string& path);
void save_pgm_mask(const std::string& path, const RasterMask& mask);

} // namespace fracspec
