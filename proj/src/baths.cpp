// baths.cpp - thermal and squeezed cavity kernels

#include "fdqme/baths.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "fdqme/liouville.hpp"

namespace fdqme::baths {

namespace {

void require_finite(double v, const char* name)
{
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

Mat4 entry(int i, int j, cplx v)
{
    Mat4 c = Mat4::Zero();
    c(i, j) = v;
    return c;
}

// Population block: K11 = -x1 e(t), K41 = x1 e(t), K44 = -x4 e(t), K14 = x4 e(t).
Mat4 population_block(cplx x1, cplx x4)
{
    Mat4 c = Mat4::Zero();
    c(0, 0) = -x1;
    c(3, 0) = x1;
    c(3, 3) = -x4;
    c(0, 3) = x4;
    return c;
}

cplx expm1c(cplx z)
{
    // e^z - 1 without cancellation for small |z|
    const double x = z.real();
    const double y = z.imag();
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

} // namespace

void ThermalBathParams::validate() const
{
    require_finite(g, "g");
    require_finite(omega_q, "omega_q");
    require_finite(omega_c, "omega_c");
    require_finite(kappa, "kappa");
    require_finite(nbar, "nbar");
    if (!(g > 0.0)) throw std::invalid_argument("g must be > 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
    if (nbar < 0.0) throw std::invalid_argument("nbar must be >= 0");
}

void SqueezedBathParams::validate() const
{
    require_finite(g, "g");
    require_finite(delta_q, "delta_q");
    require_finite(delta_c, "delta_c");
    require_finite(r, "r");
    require_finite(kappa, "kappa");
    if (!(g > 0.0)) throw std::invalid_argument("g must be > 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
    if (r < 0.0) throw std::invalid_argument("r must be >= 0");
    if (!(r < std::abs(delta_c))) throw std::invalid_argument("squeezing requires r < |delta_c|");
}

BogoliubovParams bogoliubov_params(const SqueezedBathParams& p)
{
    p.validate();
    BogoliubovParams b;
    b.zeta = 0.5 * std::atanh(p.r / p.delta_c);
    b.delta_c_eff = std::sqrt((p.delta_c - p.r) * (p.delta_c + p.r));
    b.g1 = p.g * std::cosh(b.zeta);
    b.g2 = -p.g * std::sinh(b.zeta);
    const double sh = std::sinh(b.zeta);
    b.nbar = sh * sh;
    b.mbar = p.kappa * std::sinh(2.0 * b.zeta) / (2.0 * cplx(p.kappa, b.delta_c_eff));
    b.delta_diff = p.delta_q - b.delta_c_eff;
    b.sigma_sum = p.delta_q + b.delta_c_eff;
    return b;
}

KernelModel::KernelModel(double omega_ref, std::vector<KernelTerm> terms, KernelStructure structure)
    : omega_ref_(omega_ref), terms_(std::move(terms)), structure_(structure)
{
    for (const auto& t : terms_) {
        if (!(t.rate.real() < 0.0)) {
            throw std::invalid_argument("kernel terms must decay (Re rate < 0)");
        }
    }
}

Mat4 KernelModel::time(double t) const
{
    if (t < 0.0) {
        throw std::invalid_argument("kernel time must be >= 0");
    }
    Mat4 k = Mat4::Zero();
    for (const auto& term : terms_) {
        k += term.coeff * std::exp(term.rate * t);
    }
    return k;
}

Mat4 KernelModel::freq(double delta) const
{
    Mat4 k = Mat4::Zero();
    for (const auto& term : terms_) {
        k += term.coeff / cplx(-term.rate.real(), term.offset + delta);
    }
    return k;
}

Mat4 KernelModel::at_omega(double omega) const
{
    Mat4 k = Mat4::Zero();
    for (const auto& term : terms_) {
        k += term.coeff / cplx(-term.rate.real(), omega - term.rate.imag());
    }
    return k;
}

Mat4 KernelModel::laplace(cplx s) const
{
    Mat4 k = Mat4::Zero();
    for (const auto& term : terms_) {
        k += term.coeff / (s - term.rate);
    }
    return k;
}

Mat4 KernelModel::value_at_zero() const
{
    Mat4 k = Mat4::Zero();
    for (const auto& term : terms_) {
        k += term.coeff;
    }
    return k;
}

Mat4 KernelModel::derivative_at_zero() const
{
    Mat4 k = Mat4::Zero();
    for (const auto& term : terms_) {
        k += term.coeff * term.rate;
    }
    return k;
}

Eigen::Vector4d KernelModel::natural_frequencies() const
{
    return {0.0, omega_ref_, -omega_ref_, 0.0};
}

Mat4 KernelModel::free_liouvillian() const
{
    Mat4 l = Mat4::Zero();
    const auto nu = natural_frequencies();
    for (int k = 0; k < 4; ++k) {
        l(k, k) = I * nu(k);
    }
    return l;
}

KernelModel KernelModel::without_sum_frequency() const
{
    std::vector<KernelTerm> kept;
    for (const auto& t : terms_) {
        if (!t.sum_frequency) {
            kept.push_back(t);
        }
    }
    return KernelModel(omega_ref_, std::move(kept), structure_);
}

KernelModel thermal_kernel(const ThermalBathParams& p)
{
    p.validate();
    const double g2 = p.g * p.g;
    const double n = p.nbar;
    const double det = p.detuning();
    std::vector<KernelTerm> terms;
    // 2 cos(det t) = e^{i det t} + e^{-i det t} on the population block
    const Mat4 pop = population_block(n * g2, (n + 1.0) * g2);
    terms.push_back({pop, cplx(-p.kappa, det), p.omega_q - det, false});
    terms.push_back({pop, cplx(-p.kappa, -det), p.omega_q + det, false});
    const double coh = -(2.0 * n + 1.0) * g2;
    terms.push_back({entry(1, 1, coh), cplx(-p.kappa, p.omega_c), det, false});
    terms.push_back({entry(2, 2, coh), cplx(-p.kappa, -p.omega_c), p.omega_q + p.omega_c, false});
    return KernelModel(p.omega_q, std::move(terms), KernelStructure::thermal);
}

KernelModel squeezed_kernel(const SqueezedBathParams& p)
{
    const auto b = bogoliubov_params(p);
    const double g1 = b.g1;
    const double g2 = b.g2;
    const double n = b.nbar;
    const cplx m = b.mbar;
    const cplx mc = std::conj(m);
    const double k = p.kappa;
    const double dd = b.delta_diff;
    const double ss = b.sigma_sum;
    const double dc = b.delta_c_eff;

    // Population amplitudes: K11 = -e^{-kt}[a11 e^{-i dd t} + b11 e^{-i ss t} + c.c.], same for K44.
    const cplx a11 = g1 * g1 * n + g1 * g2 * mc;
    const cplx b11 = g2 * g2 * (n + 1.0) + g1 * g2 * m;
    const cplx a44 = g1 * g1 * (n + 1.0) + g1 * g2 * mc;
    const cplx b44 = g2 * g2 * n + g1 * g2 * m;
    // Coherences: K22 = -e^{-kt}[A22 e^{i dc t} + B22 e^{-i dc t}],
    //             K32 =  e^{-kt}[A32 e^{-i dc t} + B32 e^{i dc t}].
    const cplx A22 = g1 * g1 * (2.0 * n + 1.0) + 2.0 * g1 * g2 * mc;
    const cplx B22 = g2 * g2 * (2.0 * n + 1.0) + 2.0 * g1 * g2 * m;
    const cplx A32 = 2.0 * g1 * g1 * m + g1 * g2 * (2.0 * n + 1.0);
    const cplx B32 = 2.0 * g2 * g2 * mc + g1 * g2 * (2.0 * n + 1.0);

    const double wq = p.delta_q;
    std::vector<KernelTerm> terms;
    terms.push_back({population_block(a11, a44), cplx(-k, -dd), wq + dd, false});
    terms.push_back({population_block(std::conj(a11), std::conj(a44)), cplx(-k, dd), wq - dd, false});
    terms.push_back({population_block(b11, b44), cplx(-k, -ss), wq + ss, true});
    terms.push_back({population_block(std::conj(b11), std::conj(b44)), cplx(-k, ss), wq - ss, true});

    terms.push_back({entry(1, 1, -A22) + entry(2, 1, B32), cplx(-k, dc), dd, false});
    terms.push_back({entry(1, 1, -B22) + entry(2, 1, A32), cplx(-k, -dc), ss, true});
    terms.push_back({entry(2, 2, -std::conj(A22)) + entry(1, 2, std::conj(B32)), cplx(-k, -dc), wq + dc, false});
    terms.push_back({entry(2, 2, -std::conj(B22)) + entry(1, 2, std::conj(A32)), cplx(-k, dc), wq - dc, true});
    return KernelModel(wq, std::move(terms), KernelStructure::squeezed);
}

Mat4 thermal_kernel_time(const ThermalBathParams& p, double t) { return thermal_kernel(p).time(t); }
Mat4 thermal_kernel_freq(const ThermalBathParams& p, double delta) { return thermal_kernel(p).freq(delta); }
Mat4 squeezed_kernel_time(const SqueezedBathParams& p, double t) { return squeezed_kernel(p).time(t); }
Mat4 squeezed_kernel_freq(const SqueezedBathParams& p, double delta) { return squeezed_kernel(p).freq(delta); }

GenericKernelMatrices generic_kernel_matrices(const SqueezedBathParams& p)
{
    const auto b = bogoliubov_params(p);
    const double n = b.nbar;
    const cplx m = b.mbar;
    const cplx mc = std::conj(m);
    const double k = p.kappa;
    const cplx dc{0.0, b.delta_c_eff};
    const cplx wm = 2.0 * cplx(k, b.delta_c_eff) * m;

    GenericKernelMatrices out;
    out.m << dc + (2.0 * n + 1.0) * k, -wm, wm, -2.0 * n * k,
        wm, -dc - (2.0 * n + 1.0) * k, 2.0 * (n + 1.0) * k, -wm,
        wm, -2.0 * n * k, -dc + (2.0 * n + 1.0) * k, -wm,
        2.0 * (n + 1.0) * k, -wm, wm, dc - (2.0 * n + 1.0) * k;
    out.t << m, n + 1.0, n, m,
        n, mc, mc, n + 1.0,
        n, mc, mc, n + 1.0,
        m, n + 1.0, n, m;
    out.g << b.g1, b.g2, 0.0, 0.0,
        b.g2, b.g1, 0.0, 0.0,
        0.0, 0.0, -b.g1, -b.g2,
        0.0, 0.0, -b.g2, -b.g1;
    return out;
}

Mat4 generic_kernel_time(const SqueezedBathParams& p, double t)
{
    if (t < 0.0) {
        throw std::invalid_argument("kernel time must be >= 0");
    }
    using namespace fdqme::liouville;
    const auto mats = generic_kernel_matrices(p);
    const Mat em = expm(Mat(mats.m * t));
    const Mat4 c = mats.g * mats.t * em.transpose() * mats.g;

    const Mat sp = qubit::sigma_plus();
    const Mat sm = qubit::sigma_minus();
    const Mat sigma[4] = {left_superop(sp), left_superop(sm), right_superop(sm), right_superop(sp)};
    const Mat es = expm(Mat(commutator_superop(-(p.delta_q / 2.0) * qubit::sigma_z()) * t));

    Mat4 kern = Mat4::Zero();
    for (int i = 0; i < 4; ++i) {
        const Mat left = sigma[i] * es;
        for (int j = 0; j < 4; ++j) {
            kern -= c(i, j) * (left * sigma[j]);
        }
    }
    return kern;
}

MarkovRates thermal_markov_rates(const ThermalBathParams& p)
{
    const cplx k22 = thermal_kernel_freq(p, 0.0)(1, 1);
    return {k22.imag(), -k22.real()};
}

double nested_lorentzian(cplx k, double delta)
{
    const double re = k.real();
    const double x = delta - k.imag();
    return (-re / (x * x + re * re)) / kPi;
}

double thermal_closed_spectrum(const ThermalBathParams& p, double delta)
{
    return nested_lorentzian(thermal_kernel_freq(p, delta)(1, 1), delta);
}

double markovian_spectrum(const MarkovRates& rates, double delta)
{
    if (!(rates.gamma_eff > 0.0)) {
        throw std::invalid_argument("markovian_spectrum requires gamma_eff > 0");
    }
    const double x = delta - rates.delta_eff;
    return rates.gamma_eff / (x * x + rates.gamma_eff * rates.gamma_eff) / kPi;
}

cplx squeezed_effective_kernel(const SqueezedBathParams& p, double delta, const SqueezedSpectrumOptions& opts)
{
    const Mat4 k = squeezed_kernel_freq(p, delta);
    if (!opts.include_cross_terms) {
        return k(1, 1);
    }
    // k(1,2) is the transform of conj(K32(t)), not conj(K32[delta]).
    const cplx a33 = cplx(0.0, delta + 2.0 * p.delta_q) - k(2, 2);
    return k(1, 1) + k(2, 1) * k(1, 2) / a33;
}

double squeezed_closed_spectrum(const SqueezedBathParams& p, double delta, const SqueezedSpectrumOptions& opts)
{
    return nested_lorentzian(squeezed_effective_kernel(p, delta, opts), delta);
}

MarkovRates squeezed_markov_rates(const SqueezedBathParams& p)
{
    const cplx k = squeezed_effective_kernel(p, 0.0);
    return {k.imag(), -k.real()};
}

double squeezed_steady_ground_population(const SqueezedBathParams& p)
{
    const auto b = bogoliubov_params(p);
    const double k = p.kappa;
    const double k2 = k * k;
    const double n = b.nbar;
    const double d = b.delta_diff;
    const double s = b.sigma_sum;
    const double g1s = b.g1 * b.g1;
    const double g2s = b.g2 * b.g2;
    const double g12 = b.g1 * b.g2;
    const double cross = g12 * (b.mbar.real() * k * (2.0 * k2 + d * d + s * s)
                                + (s - d) * b.mbar.imag() * (k2 - s * d));
    const double num = k * ((n + 1.0) * g1s * (k2 + s * s) + n * g2s * (k2 + d * d)) + cross;
    const double den = (2.0 * n + 1.0) * k * (g1s * (k2 + s * s) + g2s * (k2 + d * d)) + 2.0 * cross;
    return num / den;
}

std::optional<double> locate_local_max(const std::function<double(double)>& f, double lo, double hi,
                                       double step, double target)
{
    if (!(hi > lo) || !(step > 0.0)) {
        throw std::invalid_argument("locate_local_max: bad interval or step");
    }
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1;
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::min(hi, lo + step * static_cast<double>(i));
        ys[i] = f(xs[i]);
    }
    std::optional<std::size_t> best;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (ys[i] >= ys[i - 1] && ys[i] >= ys[i + 1] && (ys[i] > ys[i - 1] || ys[i] > ys[i + 1])) {
            if (!best || std::abs(xs[i] - target) < std::abs(xs[*best] - target)) {
                best = i;
            }
        }
    }
    if (!best) {
        return std::nullopt;
    }
    const auto res = boost::math::tools::brent_find_minima([&](double x) { return -f(x); },
                                                           xs[*best - 1], xs[*best + 1],
                                                           std::numeric_limits<double>::digits / 2);
    return res.first;
}

std::optional<double> find_side_peak(const std::function<double(double)>& f, double detuning, double kappa)
{
    return locate_local_max(f, -detuning - 5.0 * kappa, -detuning + 5.0 * kappa, kappa / 50.0, -detuning);
}

} // namespace fdqme::baths
