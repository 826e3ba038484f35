#include "reldim/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "reldim/specfun.hpp"

namespace reldim {

BallSpec BallSpec::unit(int dim) {
    if (dim < 1) throw std::invalid_argument("BallSpec: dim must be >= 1");
    return BallSpec{Point(static_cast<std::size_t>(dim), 0.0), 1.0};
}

BallSpec BallSpec::at(Point center, double radius) {
    BallSpec s{std::move(center), radius};
    s.validate();
    return s;
}

void BallSpec::validate() const {
    if (center.empty()) throw std::invalid_argument("BallSpec: center must have dim >= 1");
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("BallSpec: radius must be positive and finite");
    }
}

void KernelSpec::validate() const {
    if (deg < 0) throw std::invalid_argument("KernelSpec: deg must be >= 0");
    if (dim < 1) throw std::invalid_argument("KernelSpec: dim must be >= 1");
    if (!(bias >= 1.0) || !std::isfinite(bias)) {
        throw std::invalid_argument("KernelSpec: bias must be finite and >= 1");
    }
}

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double squared_norm(std::span<const double> x) {
    return dot(x, x);
}

void sample_uniform_ball(const BallSpec& spec, RandomStream& rng, std::span<double> out) {
    const std::size_t d = spec.center.size();
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            out[i] = rng.normal();
            norm2 += out[i] * out[i];
        }
    } while (norm2 == 0.0);
    const double u = rng.uniform();
    const double r = spec.radius * std::pow(u, 1.0 / static_cast<double>(d));
    const double scale = r / std::sqrt(norm2);
    for (std::size_t i = 0; i < d; ++i) out[i] = spec.center[i] + scale * out[i];
}

Point sample_uniform_ball(const BallSpec& spec, RandomStream& rng) {
    Point p(spec.center.size());
    sample_uniform_ball(spec, rng, p);
    return p;
}

std::size_t feature_dimension(int dim, int deg) {
    if (dim < 0 || deg < 0) throw std::invalid_argument("feature_dimension: negative argument");
    // C(dim + deg, deg) built up as C(dim + i, i); each step stays integral.
    unsigned __int128 c = 1;
    for (int i = 1; i <= deg; ++i) {
        c = c * static_cast<unsigned>(dim + i) / static_cast<unsigned>(i);
        if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(c);
}

namespace {

// Appends all tuples of `len` non-negative integers summing to `total`,
// larger leading exponents first.
void enumerate_exponents(int len, int total, std::vector<int>& prefix, std::vector<int>& out) {
    if (len == 1) {
        prefix.push_back(total);
        out.insert(out.end(), prefix.begin(), prefix.end());
        prefix.pop_back();
        return;
    }
    for (int j = total; j >= 0; --j) {
        prefix.push_back(j);
        enumerate_exponents(len - 1, total - j, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

PolynomialFeatureMap::PolynomialFeatureMap(const KernelSpec& spec, std::size_t max_coords)
    : spec_(spec) {
    spec.validate();
    const std::size_t n = feature_dimension(spec.dim, spec.deg);
    if (n > max_coords) {
        throw std::length_error("feature map needs " + std::to_string(n) +
                                " coordinates, above the cap of " + std::to_string(max_coords));
    }
    const int width = spec.dim + 1;
    exps_.reserve(n * static_cast<std::size_t>(width));
    std::vector<int> prefix;
    enumerate_exponents(width, spec.deg, prefix, exps_);

    const double log_deg_fact = log_gamma(spec.deg + 1.0);
    coeffs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = exponents(i);
        double log_multinomial = log_deg_fact;
        for (int j : e) log_multinomial -= log_gamma(j + 1.0);
        coeffs_[i] = std::exp(0.5 * log_multinomial) * std::pow(spec.bias, e[0]);
    }
}

std::span<const int> PolynomialFeatureMap::exponents(std::size_t i) const {
    const std::size_t width = static_cast<std::size_t>(spec_.dim) + 1;
    return {exps_.data() + i * width, width};
}

void PolynomialFeatureMap::apply(std::span<const double> x, std::span<double> out) const {
    const std::size_t d = static_cast<std::size_t>(spec_.dim);
    const std::size_t stride = static_cast<std::size_t>(spec_.deg) + 1;
    if (x.size() != d) throw std::invalid_argument("feature map: point has wrong dimension");
    thread_local std::vector<double> pw;
    pw.resize(d * stride);
    for (std::size_t i = 0; i < d; ++i) {
        pw[i * stride] = 1.0;
        for (std::size_t p = 1; p < stride; ++p) pw[i * stride + p] = pw[i * stride + p - 1] * x[i];
    }
    const std::size_t width = d + 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const int* e = exps_.data() + k * width;
        double v = coeffs_[k];
        for (std::size_t i = 0; i < d; ++i) v *= pw[i * stride + static_cast<std::size_t>(e[i + 1])];
        out[k] = v;
    }
}

FeatureVector PolynomialFeatureMap::operator()(std::span<const double> x) const {
    FeatureVector out(size());
    apply(x, out);
    return out;
}

FeatureVector feature_map(std::span<const double> x, const KernelSpec& spec, std::size_t max_coords) {
    return PolynomialFeatureMap(spec, max_coords)(x);
}

double kernel(std::span<const double> x, std::span<const double> y, const KernelSpec& spec) {
    if (x.size() != y.size()) throw std::invalid_argument("kernel: dimension mismatch");
    return std::pow(spec.bias * spec.bias + dot(x, y), spec.deg);
}

void write_point_cloud(std::ostream& os, std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("write_point_cloud: no points");
    const std::size_t d = points.front().size();
    for (std::size_t i = 0; i < d; ++i) os << (i ? "," : "") << 'x' << i;
    os << '\n';
    const auto old = os.precision(17);
    for (const auto& p : points) {
        if (p.size() != d) throw std::invalid_argument("write_point_cloud: ragged point cloud");
        for (std::size_t i = 0; i < d; ++i) os << (i ? "," : "") << p[i];
        os << '\n';
    }
    os.precision(old);
}

std::vector<Point> read_point_cloud(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("point cloud: empty input");
    std::size_t d = 0;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
            if (cell != "x" + std::to_string(d)) {
                throw std::invalid_argument("point cloud: header must be x0,...,x{d-1}, got '" + line + "'");
            }
            ++d;
        }
    }
    if (d == 0) throw std::invalid_argument("point cloud: empty header");
    std::vector<Point> points;
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        Point p;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0) {
                throw std::invalid_argument("point cloud: bad number '" + cell + "' on row " + std::to_string(row));
            }
            p.push_back(v);
        }
        if (p.size() != d) {
            throw std::invalid_argument("point cloud: row " + std::to_string(row) + " has " +
                                        std::to_string(p.size()) + " values, expected " + std::to_string(d));
        }
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace reldim
