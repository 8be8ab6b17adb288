#include "fracspec/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fracspec {

namespace {

constexpr double kInf = 1e30;

// One-dimensional squared distance transform (lower envelope of parabolas).
// On entry f holds 0 at feature cells and kInf elsewhere (or a previous
// pass result); on exit f[q] = min_p (q-p)^2 + f_in[p].
void dt1d(std::vector<double>& f) {
    const int n = static_cast<int>(f.size());
    if (n == 0) return;
    std::vector<int> v(n, 0);
    std::vector<double> z(n + 1, 0.0), d(n, 0.0);
    int k = 0;
    z[0] = -kInf;
    z[1] = kInf;
    for (int q = 1; q < n; ++q) {
        double s = 0.0;
        while (true) {
            s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * (q - v[k]));
            if (s <= z[k] && k > 0) {
                --k;
            } else {
                break;
            }
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        while (z[k + 1] < q) ++k;
        d[q] = (q - v[k]) * (q - v[k]) + f[v[k]];
    }
    f = d;
}

// Exact squared Euclidean distance (in cell units) from every cell to the
// nearest feature cell. feature[j*nx+i] != 0 marks features.
std::vector<double> edt_squared(int nx, int ny, const std::vector<std::uint8_t>& feature) {
    std::vector<double> d(static_cast<std::size_t>(nx) * ny);
    for (std::size_t idx = 0; idx < d.size(); ++idx)
        d[idx] = feature[idx] ? 0.0 : kInf;
    std::vector<double> line;
    // rows
    line.resize(nx);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) line[i] = d[static_cast<std::size_t>(j) * nx + i];
        dt1d(line);
        for (int i = 0; i < nx; ++i) d[static_cast<std::size_t>(j) * nx + i] = line[i];
    }
    // columns
    line.resize(ny);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) line[j] = d[static_cast<std::size_t>(j) * nx + i];
        dt1d(line);
        for (int j = 0; j < ny; ++j) d[static_cast<std::size_t>(j) * nx + i] = line[j];
    }
    return d;
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

double BoundingBox::diameter(int N) const {
    if (N == 1) return hi[0] - lo[0];
    return std::hypot(hi[0] - lo[0], hi[1] - lo[1]);
}

Domain Domain::interval(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("interval: requires a < b");
    Domain d;
    d.kind_ = DomainKind::Interval;
    d.dim_ = 1;
    d.a_ = a;
    d.b_ = b;
    return d;
}

Domain Domain::ball(Point center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball: radius must be positive");
    Domain d;
    d.kind_ = DomainKind::Ball;
    d.dim_ = 2;
    d.center_ = center;
    d.radius_ = radius;
    return d;
}

Domain Domain::box(Point lo, Point hi) {
    if (!(hi[0] > lo[0]) || !(hi[1] > lo[1]))
        throw std::invalid_argument("box: requires lo < hi componentwise");
    Domain d;
    d.kind_ = DomainKind::Box;
    d.dim_ = 2;
    d.lo_ = lo;
    d.hi_ = hi;
    return d;
}

Domain Domain::raster(RasterMask mask) {
    if (mask.nx <= 0 || mask.ny <= 0 || !(mask.h > 0.0))
        throw std::invalid_argument("raster: bad mask dimensions");
    if (mask.inside.size() != static_cast<std::size_t>(mask.nx) * mask.ny)
        throw std::invalid_argument("raster: mask size mismatch");
    if (std::none_of(mask.inside.begin(), mask.inside.end(),
                     [](std::uint8_t v) { return v != 0; }))
        throw std::invalid_argument("raster: mask has no interior cell");

    Domain d;
    d.kind_ = DomainKind::Raster;
    d.dim_ = 2;

    // Pad with one ring of exterior cells so edge-adjacent interior cells
    // see the outside; everything beyond the ring is farther anyway.
    const int nx = mask.nx + 2, ny = mask.ny + 2;
    std::vector<std::uint8_t> in(static_cast<std::size_t>(nx) * ny, 0), out(in.size(), 0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            bool inside = mask.at(i - 1, j - 1);
            in[static_cast<std::size_t>(j) * nx + i] = inside ? 1 : 0;
            out[static_cast<std::size_t>(j) * nx + i] = inside ? 0 : 1;
        }
    std::vector<double> to_out = edt_squared(nx, ny, out);
    std::vector<double> to_in = edt_squared(nx, ny, in);

    d.signed_dist_.resize(static_cast<std::size_t>(mask.nx) * mask.ny);
    d.max_rho_ = 0.0;
    d.argmax_i_ = 0;
    d.argmax_j_ = 0;
    for (int j = 0; j < mask.ny; ++j)
        for (int i = 0; i < mask.nx; ++i) {
            const std::size_t p = static_cast<std::size_t>(j + 1) * nx + (i + 1);
            const std::size_t q = static_cast<std::size_t>(j) * mask.nx + i;
            double v;
            if (mask.at(i, j))
                v = (std::sqrt(to_out[p]) - 0.5) * mask.h;
            else
                v = -(std::sqrt(to_in[p]) - 0.5) * mask.h;
            d.signed_dist_[q] = v;
            // inradius witness; ties broken by smallest (x, y)
            if (v > d.max_rho_ + 1e-15 ||
                (std::abs(v - d.max_rho_) <= 1e-15 &&
                 (i < d.argmax_i_ || (i == d.argmax_i_ && j < d.argmax_j_)))) {
                d.max_rho_ = v;
                d.argmax_i_ = i;
                d.argmax_j_ = j;
            }
        }
    d.mask_ = std::move(mask);
    return d;
}

BoundingBox Domain::bounding_box() const {
    BoundingBox bb;
    switch (kind_) {
    case DomainKind::Interval:
        bb.lo = {a_, 0.0};
        bb.hi = {b_, 0.0};
        break;
    case DomainKind::Ball:
        bb.lo = {center_[0] - radius_, center_[1] - radius_};
        bb.hi = {center_[0] + radius_, center_[1] + radius_};
        break;
    case DomainKind::Box:
        bb.lo = lo_;
        bb.hi = hi_;
        break;
    case DomainKind::Raster:
        bb.lo = {0.0, 0.0};
        bb.hi = {mask_.nx * mask_.h, mask_.ny * mask_.h};
        break;
    }
    return bb;
}

bool Domain::contains(const Point& x) const {
    switch (kind_) {
    case DomainKind::Interval:
        return x[0] > a_ && x[0] < b_;
    case DomainKind::Ball:
        return std::hypot(x[0] - center_[0], x[1] - center_[1]) < radius_;
    case DomainKind::Box:
        return x[0] > lo_[0] && x[0] < hi_[0] && x[1] > lo_[1] && x[1] < hi_[1];
    case DomainKind::Raster: {
        const int i = static_cast<int>(std::floor(x[0] / mask_.h));
        const int j = static_cast<int>(std::floor(x[1] / mask_.h));
        return mask_.at(i, j);
    }
    }
    return false;
}

double Domain::raster_signed_at(const Point& x) const {
    // Bilinear interpolation of the signed cell-center field; points beyond
    // the grid get the clamped value minus the clamping offset.
    const double h = mask_.h;
    double px = x[0] / h - 0.5, py = x[1] / h - 0.5;
    const double cx = std::clamp(px, 0.0, mask_.nx - 1.0);
    const double cy = std::clamp(py, 0.0, mask_.ny - 1.0);
    const double off = std::hypot((px - cx) * h, (py - cy) * h);
    const int i0 = std::min(static_cast<int>(std::floor(cx)), mask_.nx - 2 >= 0 ? mask_.nx - 2 : 0);
    const int j0 = std::min(static_cast<int>(std::floor(cy)), mask_.ny - 2 >= 0 ? mask_.ny - 2 : 0);
    const double fx = std::clamp(cx - i0, 0.0, 1.0);
    const double fy = std::clamp(cy - j0, 0.0, 1.0);
    auto at = [&](int i, int j) {
        i = std::clamp(i, 0, mask_.nx - 1);
        j = std::clamp(j, 0, mask_.ny - 1);
        return signed_dist_[static_cast<std::size_t>(j) * mask_.nx + i];
    };
    const double v = (1 - fx) * (1 - fy) * at(i0, j0) + fx * (1 - fy) * at(i0 + 1, j0) +
                     (1 - fx) * fy * at(i0, j0 + 1) + fx * fy * at(i0 + 1, j0 + 1);
    return v - off;
}

double Domain::distance_to_boundary(const Point& x) const {
    switch (kind_) {
    case DomainKind::Interval:
        return std::min(std::abs(x[0] - a_), std::abs(b_ - x[0]));
    case DomainKind::Ball:
        return std::abs(radius_ - std::hypot(x[0] - center_[0], x[1] - center_[1]));
    case DomainKind::Box: {
        if (contains(x)) {
            return std::min(std::min(x[0] - lo_[0], hi_[0] - x[0]),
                            std::min(x[1] - lo_[1], hi_[1] - x[1]));
        }
        const double qx = std::clamp(x[0], lo_[0], hi_[0]);
        const double qy = std::clamp(x[1], lo_[1], hi_[1]);
        double d = std::hypot(x[0] - qx, x[1] - qy);
        if (d == 0.0) { // on the boundary itself
            d = 0.0;
        }
        return d;
    }
    case DomainKind::Raster:
        return std::abs(raster_signed_at(x));
    }
    return 0.0;
}

Point Domain::rho_gradient(const Point& x) const {
    switch (kind_) {
    case DomainKind::Interval: {
        const double dl = x[0] - a_, dr = b_ - x[0];
        if (dl == dr) return {0.0, 0.0};
        return {dl < dr ? 1.0 : -1.0, 0.0};
    }
    case DomainKind::Ball: {
        const double dx = x[0] - center_[0], dy = x[1] - center_[1];
        const double r = std::hypot(dx, dy);
        if (r == 0.0) return {0.0, 0.0};
        const double sign = (r < radius_) ? -1.0 : 1.0;
        return {sign * dx / r, sign * dy / r};
    }
    case DomainKind::Box: {
        if (contains(x)) {
            const double d[4] = {x[0] - lo_[0], hi_[0] - x[0], x[1] - lo_[1], hi_[1] - x[1]};
            int best = 0;
            for (int i = 1; i < 4; ++i)
                if (d[i] < d[best]) best = i;
            for (int i = 0; i < 4; ++i)
                if (i != best && d[i] == d[best]) return {0.0, 0.0};
            switch (best) {
            case 0: return {1.0, 0.0};
            case 1: return {-1.0, 0.0};
            case 2: return {0.0, 1.0};
            default: return {0.0, -1.0};
            }
        }
        const double qx = std::clamp(x[0], lo_[0], hi_[0]);
        const double qy = std::clamp(x[1], lo_[1], hi_[1]);
        const double d = std::hypot(x[0] - qx, x[1] - qy);
        if (d == 0.0) return {0.0, 0.0};
        return {(x[0] - qx) / d, (x[1] - qy) / d};
    }
    case DomainKind::Raster: {
        const double h = mask_.h;
        const double s0 = raster_signed_at(x);
        const double gx = (raster_signed_at({x[0] + 0.5 * h, x[1]}) -
                           raster_signed_at({x[0] - 0.5 * h, x[1]})) / h;
        const double gy = (raster_signed_at({x[0], x[1] + 0.5 * h}) -
                           raster_signed_at({x[0], x[1] - 0.5 * h})) / h;
        const double sign = s0 >= 0.0 ? 1.0 : -1.0;
        const double norm = std::hypot(gx, gy);
        if (norm < 1e-12) return {0.0, 0.0};
        return {sign * gx / norm, sign * gy / norm};
    }
    }
    return {0.0, 0.0};
}

double Domain::volume() const {
    switch (kind_) {
    case DomainKind::Interval:
        return b_ - a_;
    case DomainKind::Ball:
        return M_PI * radius_ * radius_;
    case DomainKind::Box:
        return (hi_[0] - lo_[0]) * (hi_[1] - lo_[1]);
    case DomainKind::Raster: {
        std::size_t count = 0;
        for (auto v : mask_.inside) count += (v != 0);
        return static_cast<double>(count) * mask_.h * mask_.h;
    }
    }
    return 0.0;
}

double Domain::level_set_measure(double t) const {
    if (!(t > 0.0)) throw std::invalid_argument("level_set_measure: t must be > 0");
    if (t >= inradius()) return 0.0;
    switch (kind_) {
    case DomainKind::Interval:
        return 2.0;
    case DomainKind::Ball:
        return 2.0 * M_PI * (radius_ - t);
    case DomainKind::Box: {
        const double w = hi_[0] - lo_[0], v = hi_[1] - lo_[1];
        return 2.0 * ((w - 2.0 * t) + (v - 2.0 * t));
    }
    case DomainKind::Raster: {
        // -d/dt |{rho > t}| by a centered difference with step h.
        const double h = mask_.h;
        auto super_level = [&](double tau) {
            std::size_t count = 0;
            for (double v : signed_dist_) count += (v > tau);
            return static_cast<double>(count) * h * h;
        };
        return (super_level(t - h) - super_level(t + h)) / (2.0 * h);
    }
    }
    return 0.0;
}

double Domain::inradius() const {
    switch (kind_) {
    case DomainKind::Interval:
        return 0.5 * (b_ - a_);
    case DomainKind::Ball:
        return radius_;
    case DomainKind::Box:
        return 0.5 * std::min(hi_[0] - lo_[0], hi_[1] - lo_[1]);
    case DomainKind::Raster:
        return max_rho_;
    }
    return 0.0;
}

Point Domain::incenter() const {
    switch (kind_) {
    case DomainKind::Interval:
        return {0.5 * (a_ + b_), 0.0};
    case DomainKind::Ball:
        return center_;
    case DomainKind::Box:
        return {0.5 * (lo_[0] + hi_[0]), 0.5 * (lo_[1] + hi_[1])};
    case DomainKind::Raster:
        return {(argmax_i_ + 0.5) * mask_.h, (argmax_j_ + 0.5) * mask_.h};
    }
    return {0.0, 0.0};
}

std::vector<Point> Domain::boundary_samples() const {
    std::vector<Point> pts;
    switch (kind_) {
    case DomainKind::Interval:
        pts.push_back({a_, 0.0});
        pts.push_back({b_, 0.0});
        break;
    case DomainKind::Ball:
        for (int i = 0; i < 256; ++i) {
            const double th = 2.0 * M_PI * i / 256.0;
            pts.push_back({center_[0] + radius_ * std::cos(th),
                           center_[1] + radius_ * std::sin(th)});
        }
        break;
    case DomainKind::Box:
        for (int i = 0; i <= 64; ++i) {
            const double fx = lo_[0] + (hi_[0] - lo_[0]) * i / 64.0;
            const double fy = lo_[1] + (hi_[1] - lo_[1]) * i / 64.0;
            pts.push_back({fx, lo_[1]});
            pts.push_back({fx, hi_[1]});
            pts.push_back({lo_[0], fy});
            pts.push_back({hi_[0], fy});
        }
        break;
    case DomainKind::Raster:
        for (int j = 0; j < mask_.ny; ++j)
            for (int i = 0; i < mask_.nx; ++i) {
                if (!mask_.at(i, j)) continue;
                if (mask_.at(i - 1, j) && mask_.at(i + 1, j) && mask_.at(i, j - 1) &&
                    mask_.at(i, j + 1))
                    continue;
                pts.push_back({(i + 0.5) * mask_.h, (j + 0.5) * mask_.h});
            }
        break;
    }
    return pts;
}

std::string Domain::spec_string() const {
    switch (kind_) {
    case DomainKind::Interval:
        return "interval:" + fmt_g(a_) + "," + fmt_g(b_);
    case DomainKind::Ball:
        return "ball:" + fmt_g(radius_);
    case DomainKind::Box:
        return "box:" + fmt_g(lo_[0]) + "," + fmt_g(lo_[1]) + "," + fmt_g(hi_[0]) + "," +
               fmt_g(hi_[1]);
    case DomainKind::Raster:
        return "raster:" + std::to_string(mask_.nx) + "x" + std::to_string(mask_.ny) +
               ",h=" + fmt_g(mask_.h);
    }
    return {};
}

const RasterMask& Domain::mask() const {
    if (kind_ != DomainKind::Raster)
        throw std::logic_error("mask: domain is not a raster");
    return mask_;
}

GeometryReport check_geometry(const Domain& d, int t_sample_count) {
    GeometryReport rep;
    rep.R = d.inradius();
    rep.center = d.incenter();

    const double tol = (d.kind() == DomainKind::Raster) ? 1.5 * d.mask().h : 1e-12;
    rep.circum_ok = true;
    for (const Point& p : d.boundary_samples()) {
        const double dist = (d.dimension() == 1)
                                ? std::abs(p[0] - rep.center[0])
                                : std::hypot(p[0] - rep.center[0], p[1] - rep.center[1]);
        if (dist > 2.0 * rep.R + tol) {
            rep.circum_ok = false;
            break;
        }
    }

    const double t_max = rep.R * (1.0 - 1.0 / t_sample_count);
    rep.c0 = 0.0;
    const double r_pow = (d.dimension() == 1) ? 1.0 : rep.R;
    for (int j = 1; j <= t_sample_count; ++j) {
        const double t = t_max * j / t_sample_count;
        const double m = d.level_set_measure(t);
        rep.t_samples.emplace_back(t, m);
        rep.c0 = std::max(rep.c0, m / r_pow);
    }
    return rep;
}

Domain parse_domain(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("domain spec: expected '<kind>:<args>', got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);

    auto parse_reals = [&](std::size_t expect) {
        std::vector<double> vals;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("domain spec: bad number '" + tok + "'");
            }
            if (pos != tok.size())
                throw std::invalid_argument("domain spec: bad number '" + tok + "'");
            vals.push_back(v);
        }
        if (vals.size() != expect)
            throw std::invalid_argument("domain spec: '" + kind + "' expects " +
                                        std::to_string(expect) + " numbers");
        return vals;
    };

    if (kind == "interval") {
        auto v = parse_reals(2);
        return Domain::interval(v[0], v[1]);
    }
    if (kind == "ball") {
        auto v = parse_reals(1);
        return Domain::ball({0.0, 0.0}, v[0]);
    }
    if (kind == "box") {
        auto v = parse_reals(4);
        return Domain::box({v[0], v[1]}, {v[2], v[3]});
    }
    if (kind == "raster") return Domain::raster(load_pgm_mask(args));
    throw std::invalid_argument("domain spec: unknown kind '" + kind + "'");
}

RasterMask load_pgm_mask(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open PGM file: " + path);

    double h = 0.0;
    auto next_token = [&]() -> std::string {
        std::string tok;
        int c = 0;
        while ((c = in.get()) != EOF) {
            if (c == '#') {
                std::string comment;
                std::getline(in, comment);
                const auto pos = comment.find("h=");
                if (pos != std::string::npos) h = std::stod(comment.substr(pos + 2));
                continue;
            }
            if (!std::isspace(c)) {
                tok.push_back(static_cast<char>(c));
                break;
            }
        }
        while ((c = in.get()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(c));
        return tok;
    };

    const std::string magic = next_token();
    if (magic != "P5") throw std::runtime_error("PGM: expected P5, got '" + magic + "'");
    RasterMask m;
    m.nx = std::stoi(next_token());
    m.ny = std::stoi(next_token());
    const int maxval = std::stoi(next_token());
    if (m.nx <= 0 || m.ny <= 0 || maxval <= 0 || maxval > 255)
        throw std::runtime_error("PGM: bad header");
    if (!(h > 0.0)) throw std::runtime_error("PGM: missing '# h=<cellsize>' comment");
    m.h = h;

    std::vector<std::uint8_t> raw(static_cast<std::size_t>(m.nx) * m.ny);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw std::runtime_error("PGM: truncated pixel data");

    // PGM rows run top to bottom; flip so row 0 is the bottom (y = 0).
    m.inside.resize(raw.size());
    for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i)
            m.inside[static_cast<std::size_t>(j) * m.nx + i] =
                raw[static_cast<std::size_t>(m.ny - 1 - j) * m.nx + i] > maxval / 2 ? 1 : 0;
    return m;
}

void save_pgm_mask(const std::string& path, const RasterMask& mask) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write PGM file: " + path);
    out << "P5\n# h=" << fmt_g(mask.h) << "\n" << mask.nx << " " << mask.ny << "\n255\n";
    std::vector<std::uint8_t> raw(mask.inside.size());
    for (int j = 0; j < mask.ny; ++j)
        for (int i = 0; i < mask.nx; ++i)
            raw[static_cast<std::size_t>(mask.ny - 1 - j) * mask.nx + i] =
                mask.at(i, j) ? 255 : 0;
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size()));
}

} // namespace fracspec
