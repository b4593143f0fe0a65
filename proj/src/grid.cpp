// grid.cpp - frequency grids and quadrature

#include "fdqme/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdqme::grid {

std::vector<double> uniform(double lo, double hi, std::size_t n)
{
    if (n < 2 || !(hi > lo)) {
        throw std::invalid_argument("uniform grid needs n >= 2 and hi > lo");
    }
    std::vector<double> x(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = lo + h * static_cast<double>(i);
    }
    x.back() = hi;
    return x;
}

std::vector<double> logspace(double lo, double hi, std::size_t n)
{
    if (!(lo > 0.0)) {
        throw std::invalid_argument("logspace needs positive bounds");
    }
    auto x = uniform(std::log(lo), std::log(hi), n);
    for (double& v : x) {
        v = std::exp(v);
    }
    x.front() = lo;
    x.back() = hi;
    return x;
}

std::vector<double> adaptive(double lo, double hi, const std::vector<Peak>& peaks,
                             const AdaptiveGridOptions& opts)
{
    if (!(hi > lo)) {
        throw std::invalid_argument("adaptive grid needs hi > lo");
    }
    if (opts.points_per_width <= 0.0 || opts.growth <= 0.0 || opts.min_points < 2) {
        throw std::invalid_argument("adaptive grid options must be positive");
    }
    for (const auto& p : peaks) {
        if (!(p.width > 0.0)) {
            throw std::invalid_argument("adaptive grid peak widths must be positive");
        }
    }
    const double h_max = (hi - lo) / static_cast<double>(opts.min_points);
    auto spacing = [&](double x) {
        double h = h_max;
        for (const auto& p : peaks) {
            h = std::min(h, std::max(p.width / opts.points_per_width, opts.growth * std::abs(x - p.center)));
        }
        return h;
    };
    std::vector<double> x{lo};
    while (true) {
        const double next = x.back() + spacing(x.back());
        if (next >= hi) {
            break;
        }
        x.push_back(next);
    }
    // Avoid a sliver interval at the right edge.
    if (x.size() > 1 && hi - x.back() < 0.25 * spacing(x.back())) {
        x.back() = hi;
    } else {
        x.push_back(hi);
    }
    return x;
}

bool is_increasing(const std::vector<double>& x)
{
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (!(x[i] > x[i - 1])) {
            return false;
        }
    }
    return true;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size()) {
        throw std::invalid_argument("trapezoid: size mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    }
    return acc;
}

} // namespace fdqme::grid

namespace fdqme {

Spectrum normalized(Spectrum s)
{
    s.area = grid::trapezoid(s.grid, s.values);
    if (!(s.area > 0.0)) {
        throw std::runtime_error("cannot normalize a spectrum with non-positive area");
    }
    for (double& v : s.values) {
        v /= s.area;
    }
    s.normalized = true;
    return s;
}

double clip_negative(Spectrum& s, double rel_tol)
{
    if (s.values.empty()) {
        return 0.0;
    }
    const double peak = *std::max_element(s.values.begin(), s.values.end());
    double worst = 0.0;
    for (double& v : s.values) {
        if (v < 0.0) {
            const double rel = peak > 0.0 ? -v / peak : std::numeric_limits<double>::infinity();
            worst = std::max(worst, rel);
            if (rel <= rel_tol) {
                v = 0.0;
            }
        }
    }
    return worst;
}

std::size_t argmax(const Spectrum& s)
{
    if (s.values.empty()) {
        throw std::invalid_argument("argmax of empty spectrum");
    }
    return static_cast<std::size_t>(std::distance(s.values.begin(),
                                                  std::max_element(s.values.begin(), s.values.end())));
}

} // namespace fdqme
