// grid.hpp - frequency grids, trapezoid quadrature and the Spectrum container

#pragma once

#include <vector>

namespace fdqme::grid {

struct Peak {
    double center{0.0};
    double width{1.0}; // half width of the feature; sets the local resolution
};

struct AdaptiveGridOptions {
    double points_per_width{40.0}; // spacing width/points_per_width at a peak centre
    double growth{0.02};           // spacing grows as growth * |x - centre| away from peaks
    std::size_t min_points{1u << 14}; // caps the spacing at (hi - lo) / min_points
};

std::vector<double> uniform(double lo, double hi, std::size_t n);
std::vector<double> logspace(double lo, double hi, std::size_t n);

// Monotone grid on [lo, hi] whose spacing h(x) = min_i max(w_i/k, growth*|x - c_i|),
// capped at (hi - lo)/min_points.
std::vector<double> adaptive(double lo, double hi, const std::vector<Peak>& peaks,
                             const AdaptiveGridOptions& opts = {});

bool is_increasing(const std::vector<double>& x);

double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

} // namespace fdqme::grid

namespace fdqme {

struct Spectrum {
    std::vector<double> grid;
    std::vector<double> values;
    bool normalized{false};
    double area{0.0}; // trapezoid area of values before normalization
};

// Spectrum from callable values on a grid, not normalized.
template <class F>
Spectrum sample_spectrum(const std::vector<double>& x, F&& f)
{
    Spectrum s;
    s.grid = x;
    s.values.reserve(x.size());
    for (double v : x) {
        s.values.push_back(f(v));
    }
    return s;
}

// Trapezoid-normalize to unit area (numerical, never analytic).
Spectrum normalized(Spectrum s);

// Values clipped at zero when the negativity is below rel_tol * peak.
// Returns the largest relative negativity seen (before clipping).
double clip_negative(Spectrum& s, double rel_tol = 1e-12);

// Index of the largest value; grid location via s.grid[argmax(s)].
std::size_t argmax(const Spectrum& s);

} // namespace fdqme
