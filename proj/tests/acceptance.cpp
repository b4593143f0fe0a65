// acceptance.cpp - end-to-end criteria, one PASS/FAIL line each with runtime

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "fdqme/baths.hpp"
#include "fdqme/fdme.hpp"
#include "fdqme/liouville.hpp"
#include "fdqme/measures.hpp"
#include "fdqme/oracle.hpp"
#include "fdqme/parallel.hpp"
#include "fdqme/redfield.hpp"
#include "fdqme/waveguide.hpp"
#include "oracles.hpp"

using namespace fdqme;

namespace {

struct Outcome {
    bool pass{false};
    std::string detail;
};

class Report {
public:
    std::ostringstream os;
    bool ok{true};

    template <class T>
    Report& operator<<(const T& v)
    {
        os << v;
        return *this;
    }

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            os << " [failed: " << what << "]";
        }
    }

    Outcome done() const { return {ok, os.str()}; }
};

Vec4 vec(const Mat& m)
{
    return liouville::vectorize(m);
}

double rel_err(const Mat4& a, const Mat4& b)
{
    return (a - b).norm() / std::max(b.norm(), 1e-300);
}

baths::ThermalBathParams thermal_ref(double det = 100.0, double kappa = 10.0)
{
    return {1.0, 2e5, 2e5 - det, kappa, 0.1};
}

// Least-squares line y = a + b x; returns (b, R^2).
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double b = sxy / sxx;
    return {b, sxy * sxy / (sxx * syy)};
}

// Raw FD-QME spectral density at one detuning.
std::function<double(double)> fd_density(const fdme::FrequencyPropagator& fp, const Vec4& ss)
{
    return [&fp, ss](double d) {
        return fdme::emission_spectrum(fp, qubit::sigma_minus(), ss, {d}, {false}).values[0];
    };
}

Outcome c1_steady_state()
{
    Report r;
    const fdme::FrequencyPropagator fp(baths::thermal_kernel(thermal_ref()));
    double worst = 0.0;
    for (const Mat& rho0 : {Mat(qubit::projector_e()), Mat(qubit::projector_g()), Mat(qubit::sigma_x_eigenstate(1))}) {
        const Vec4 ss = fdme::steady_state(fp, vec(rho0));
        worst = std::max({worst, std::abs(ss(0) - 11.0 / 12.0), std::abs(ss(3) - 1.0 / 12.0)});
    }
    r << "max |p - (11/12, 1/12)| = " << worst;
    r.require(worst < 1e-9, "populations within 1e-9");
    return r.done();
}

Outcome c2_closed_form()
{
    Report r;
    const auto p = thermal_ref();
    const auto model = baths::thermal_kernel(p);
    const auto x = grid::uniform(-400.0, 200.0, 1u << 14);
    const Vec4 rho0 = vec(qubit::projector_e());
    const auto rates = baths::thermal_markov_rates(p);

    const fdme::FrequencyPropagator fp(model);
    const auto s = fdme::emission_spectrum(fp, qubit::sigma_minus(), fdme::steady_state(fp, rho0), x);
    const auto ref = normalized(sample_spectrum(x, [&](double d) { return baths::thermal_closed_spectrum(p, d); }));
    const fdme::FrequencyPropagator fm(model, fdme::KernelMode::markov);
    const auto sm = fdme::emission_spectrum(fm, qubit::sigma_minus(), fdme::steady_state(fm, rho0), x);
    const auto refm = normalized(sample_spectrum(x, [&](double d) { return baths::markovian_spectrum(rates, d); }));
    double e_full = 0.0;
    double e_markov = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        e_full = std::max(e_full, std::abs(s.values[i] - ref.values[i]));
        e_markov = std::max(e_markov, std::abs(sm.values[i] - refm.values[i]));
    }
    r << "2^14 points, max |S - nested| = " << e_full << ", max |S_markov - Lorentzian| = " << e_markov;
    r.require(e_full < 1e-9, "nested Lorentzian within 1e-9");
    r.require(e_markov < 1e-9, "Markovian Lorentzian within 1e-9");
    return r.done();
}

Outcome c3_markov_identity()
{
    Report r;
    double worst = 0.0;
    for (double det : {0.0, 30.0, 100.0}) {
        const auto p = thermal_ref(det);
        const cplx k0 = baths::thermal_kernel_freq(p, 0.0)(1, 1);
        const auto rates = baths::thermal_markov_rates(p);
        for (double d : grid::uniform(-50.0, 50.0, 2001)) {
            const double a = baths::nested_lorentzian(k0, d);
            const double b = baths::markovian_spectrum(rates, d);
            worst = std::max(worst, std::abs(a - b) / b);
        }
    }
    r << "max relative deviation = " << worst;
    r.require(worst < 1e-12, "identity within 1e-12");
    return r.done();
}

Outcome c4_tails()
{
    Report r;
    const auto p = thermal_ref();
    const auto model = baths::thermal_kernel(p);
    const Vec4 rho0 = vec(qubit::projector_e());
    // Above |delta| ~ 5e3 g the density falls below ~1e-13 of the peak and the real part of the
    // resolvent is lost to roundoff, so the fit stays in [1e3, 3e3] = [10, 30] Delta.
    const auto x = grid::logspace(1e3, 3e3, 21);
    std::vector<double> lx;
    for (double v : x) lx.push_back(std::log(v));

    double dev = 0.0;
    auto slope = [&](fdme::KernelMode mode) {
        const fdme::FrequencyPropagator fp(model, mode);
        const Vec4 ss = fdme::steady_state(fp, rho0);
        const auto s = fdme::emission_spectrum(fp, qubit::sigma_minus(), ss, x, {false});
        std::vector<double> ly;
        for (std::size_t i = 0; i < x.size(); ++i) {
            ly.push_back(std::log(s.values[i]));
            if (mode == fdme::KernelMode::full) {
                const double ref = 2.0 * kPi * ss(3).real() * baths::thermal_closed_spectrum(p, x[i]);
                dev = std::max(dev, std::abs(s.values[i] / ref - 1.0));
            }
        }
        return linear_fit(lx, ly).first;
    };
    const double full = slope(fdme::KernelMode::full);
    const double markov = slope(fdme::KernelMode::markov);
    r << "tail slope FD-QME = " << full << ", Markovian = " << markov
      << " (delta in [1e3, 3e3] g; FD-QME vs closed form within " << dev << ")";
    r.require(full >= -4.2 && full <= -3.8, "FD-QME slope in [-4.2, -3.8]");
    r.require(markov >= -2.1 && markov <= -1.9, "Markovian slope in [-2.1, -1.9]");
    return r.done();
}

Outcome c5_side_peak()
{
    Report r;
    const auto p = thermal_ref(100.0, 10.0);
    const auto m = baths::thermal_markov_rates(p);
    const double tol = 0.2 * p.kappa;

    const fdme::FrequencyPropagator fp(baths::thermal_kernel(p));
    const Vec4 ss = fdme::steady_state(fp, vec(qubit::projector_e()));
    const auto fd = fd_density(fp, ss);
    const auto fd_c = baths::locate_local_max(fd, m.delta_eff - 5.0 * m.gamma_eff, m.delta_eff + 5.0 * m.gamma_eff,
                                              0.1 * m.gamma_eff, m.delta_eff);
    const auto fd_s = baths::find_side_peak(fd, p.detuning(), p.kappa);

    auto br = [&](double d) { return redfield::br_spectrum_value(p, d); };
    const auto br_c = baths::locate_local_max(br, m.delta_eff - 5.0 * m.gamma_eff, m.delta_eff + 5.0 * m.gamma_eff,
                                              0.1 * m.gamma_eff, m.delta_eff);
    const auto br_s = baths::find_side_peak(br, p.detuning(), p.kappa);

    // oracle: dense samples, cubic spline, then the same peak search
    const auto full = oracle::build_full_model(p, 10);
    const Mat chi = oracle::full_steady_state(full);
    auto spline_of = [&](double lo, double hi, std::size_t n) {
        const auto g = grid::uniform(lo, hi, n);
        const auto s = oracle::full_steady_spectrum(full, chi, g, false);
        return boost::math::interpolators::cardinal_cubic_b_spline<double>(s.values.begin(), s.values.end(), lo,
                                                                           g[1] - g[0]);
    };
    const auto or_centre = spline_of(m.delta_eff - 10.0 * m.gamma_eff, m.delta_eff + 10.0 * m.gamma_eff, 801);
    const auto or_side = spline_of(-p.detuning() - 6.0 * p.kappa, -p.detuning() + 6.0 * p.kappa, 1201);
    const auto or_c = baths::locate_local_max([&](double d) { return or_centre(d); }, m.delta_eff - 5.0 * m.gamma_eff,
                                              m.delta_eff + 5.0 * m.gamma_eff, 0.1 * m.gamma_eff, m.delta_eff);
    const auto or_s = baths::find_side_peak([&](double d) { return or_side(d); }, p.detuning(), p.kappa);

    if (!fd_c || !fd_s || !br_c || !br_s || !or_c || !or_s) {
        r.require(false, "all six peaks located");
        return r.done();
    }
    const double sep_fd = *fd_c - *fd_s;
    const double sep_br = *br_c - *br_s;
    const double sep_or = *or_c - *or_s;
    const double target = p.detuning() + 2.0 * m.delta_eff;
    r << "Delta = " << p.detuning() << ", separations FD " << sep_fd << " (target " << target << "), BR " << sep_br
      << " (target " << p.detuning() << "), oracle " << sep_or << ", tolerance " << tol;
    r.require(std::abs(sep_fd - target) <= tol, "FD separation near Delta + 2 delta_eff");
    r.require(std::abs(sep_br - p.detuning()) <= tol, "BR separation near Delta");
    r.require(std::abs(sep_or - sep_fd) <= tol, "oracle agrees with FD-QME");
    r.require(std::abs(*or_s - *fd_s) <= tol, "oracle side peak agrees with FD-QME");
    return r.done();
}

Outcome c6_scaling()
{
    Report r;
    const auto kappas = grid::logspace(20.0, 200.0, 7);
    std::vector<double> lk;
    std::vector<double> lns;
    for (double k : kappas) {
        lk.push_back(std::log(k));
        lns.push_back(std::log(measures::thermal_spectral_measure(thermal_ref(10.0, k)).value));
    }
    const double slope = linear_fit(lk, lns).first;

    const auto dets = grid::logspace(100.0, 1000.0, 11);
    std::vector<double> ld;
    std::vector<double> ns;
    for (double d : dets) {
        ld.push_back(std::log(d));
        ns.push_back(measures::thermal_spectral_measure(thermal_ref(d, 10.0)).value);
    }
    const auto [c, r2] = linear_fit(ld, ns);
    r << "kappa in [20, 200] at Delta = 10: log-log slope " << slope << "; Delta in [100, 1000] at kappa = 10: N_S = a + "
      << c << " log(Delta), R^2 = " << r2;
    r.require(std::abs(slope + 1.0) <= 0.1, "slope -1 +- 0.1");
    r.require(r2 > 0.99, "R^2 > 0.99");
    return r.done();
}

Outcome c7_squeezed()
{
    Report r;
    // r = 0 against the zero-temperature thermal bath with the same detuning
    const baths::SqueezedBathParams sq{1.0, 200.0, 320.0, 0.0, 10.0};
    const baths::ThermalBathParams th{1.0, 2e5, 2e5 - (sq.delta_q - sq.delta_c), sq.kappa, 0.0};
    const auto x = grid::uniform(-400.0, 400.0, 8001);
    const auto a = normalized(sample_spectrum(x, [&](double d) { return baths::squeezed_closed_spectrum(sq, d); }));
    const auto b = normalized(sample_spectrum(x, [&](double d) { return baths::thermal_closed_spectrum(th, d); }));
    double worst = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
        peak = std::max(peak, b.values[i]);
    }
    worst /= peak;

    const double dq = 200.0;
    const double dc = 320.0;
    const auto tilde = grid::uniform(-40.0, 40.0, 9);
    std::vector<double> ns_r(tilde.size());
    std::vector<double> ns_bare(tilde.size());
    for (std::size_t i = 0; i < tilde.size(); ++i) {
        const double eff = dq - tilde[i];
        ns_r[i] = measures::squeezed_spectral_measure({1.0, dq, dc, std::sqrt((dc - eff) * (dc + eff)), 10.0}).value;
        ns_bare[i] = measures::squeezed_spectral_measure({1.0, dq, dq - tilde[i], 0.0, 10.0}).value;
    }
    const auto min_r = static_cast<std::size_t>(std::min_element(ns_r.begin(), ns_r.end()) - ns_r.begin());
    const auto min_b = static_cast<std::size_t>(std::min_element(ns_bare.begin(), ns_bare.end()) - ns_bare.begin());
    r << "r = 0 vs thermal N = 0: max relative deviation " << worst << "; argmin Delta~ r-sweep " << tilde[min_r]
      << ", bare sweep " << tilde[min_b] << " (grid step 10)";
    r.require(worst < 1e-8, "r = 0 reduction within 1e-8");
    r.require(std::abs(tilde[min_r]) <= 10.0, "r-sweep minimum at 0");
    r.require(std::abs(tilde[min_b]) <= 10.0, "bare sweep minimum at 0");
    return r.done();
}

Outcome c8_positivity()
{
    Report r;
    const double dc = 120.0;
    const double eff = 34.0;
    const baths::SqueezedBathParams p{1.0, 200.0, dc, std::sqrt((dc - eff) * (dc + eff)), 10.0};
    const Vec4 rho0 = vec(qubit::sigma_y_eigenstate(-1));
    const auto t = grid::uniform(0.0, 4.0, 401);
    const auto br = redfield::br_evolve(p, rho0, t);
    const auto rep = redfield::purity_violation(br);
    fdme::InverseTransformReport itr;
    const auto fd = fdme::inverse_transform(fdme::FrequencyPropagator(baths::squeezed_kernel(p)), rho0, t, {}, &itr);
    double fd_max = 0.0;
    for (const auto& s : fd.states) fd_max = std::max(fd_max, fdme::purity(s));
    r << "max purity BR " << rep.max_purity << " (t = " << rep.time_of_max << "), FD-QME " << fd_max << " ("
      << itr.nodes << " nodes, truncation " << itr.truncation_estimate << ")";
    r.require(rep.max_purity > 1.0 + 1e-4, "BR purity exceeds 1 + 1e-4");
    r.require(fd_max <= 1.0 + 1e-4, "FD-QME purity stays <= 1 + 1e-4");
    return r.done();
}

Outcome c9_blp()
{
    Report r;
    const double kappa = 20.0;
    const auto ratios = grid::uniform(0.5, 20.0, 40);
    const auto t = grid::uniform(0.0, 60.0 / kappa, 3001);
    std::vector<double> blp(ratios.size());
    std::vector<double> ns(ratios.size());
    parallel_for(ratios.size(), [&](std::size_t i) {
        const auto p = thermal_ref(ratios[i] * kappa, kappa);
        const auto a = redfield::br_evolve(p, vec(qubit::projector_g()), t);
        const auto b = redfield::br_evolve(p, vec(qubit::projector_e()), t);
        blp[i] = measures::blp_measure(a, b).value;
        ns[i] = measures::thermal_spectral_measure(p).value;
    });
    double small = 0.0;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (ratios[i] <= 1.0) small = std::max(small, blp[i]);
    }
    const auto imax = static_cast<std::size_t>(std::max_element(blp.begin(), blp.end()) - blp.begin());
    std::size_t last_zero = 0;
    for (std::size_t i = 0; i < ratios.size() && blp[i] < 1e-8; ++i) last_zero = i;
    bool increasing = true;
    for (std::size_t i = 1; i < ns.size(); ++i) increasing = increasing && ns[i] > ns[i - 1];
    r << "BLP for Delta/kappa <= 1: " << small << "; zero up to Delta/kappa = " << ratios[last_zero]
      << "; maximum " << blp[imax] << " at Delta/kappa = " << ratios[imax] << "; N_S from " << ns.front() << " to "
      << ns.back() << (increasing ? ", strictly increasing" : ", not monotone");
    r.require(small < 1e-8, "BLP zero for Delta <= kappa");
    r.require(std::abs(ratios[imax] - 8.5) <= 1.0, "BLP maximum at (8.5 +- 1) kappa");
    r.require(increasing, "N_S strictly increasing");
    return r.done();
}

Outcome c10_false_positive()
{
    Report r;
    // The regime is where Born-Markov trajectories leave the Bloch ball (purity > 1 from some
    // Pauli eigenstate); it is located by a scan over r rather than assumed.
    const auto t = grid::uniform(0.0, 20.0, 2001);
    const auto rs = grid::uniform(0.0, 310.0, 32);
    std::vector<double> blp(rs.size());
    std::vector<double> purity(rs.size());
    std::vector<double> ns(rs.size());
    const std::vector<Mat> probes{qubit::sigma_x_eigenstate(1), qubit::sigma_x_eigenstate(-1),
                                  qubit::sigma_y_eigenstate(1), qubit::sigma_y_eigenstate(-1),
                                  qubit::projector_g(), qubit::projector_e()};
    parallel_for(rs.size(), [&](std::size_t i) {
        const baths::SqueezedBathParams p{1.0, 200.0, 320.0, rs[i], 10.0};
        std::vector<Trajectory> tr;
        for (const Mat& s : probes) tr.push_back(redfield::bm_evolve(p, vec(s), t));
        blp[i] = measures::blp_measure(tr[0], tr[1]).value;
        for (const auto& traj : tr) {
            for (const auto& s : traj.states) purity[i] = std::max(purity[i], fdme::purity(s));
        }
        if (rs[i] > 0.0) {
            // Markovian spectrum against itself
            const auto rates = baths::squeezed_markov_rates(p);
            const auto x = measures::spectrum_grid(rates.delta_eff, rates.gamma_eff, {}, p.kappa, 400.0);
            const auto s_m =
                normalized(sample_spectrum(x, [&](double d) { return baths::markovian_spectrum(rates, d); }));
            ns[i] = measures::spectral_measure(s_m, s_m, measures::spectral_gap(p)).value;
        }
    });
    std::vector<double> violating;
    double min_blp = 1e300;
    double max_blp_outside = 0.0;
    double max_ns = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        max_ns = std::max(max_ns, ns[i]);
        if (purity[i] > 1.0 + 1e-6) {
            violating.push_back(rs[i]);
            min_blp = std::min(min_blp, blp[i]);
        } else {
            max_blp_outside = std::max(max_blp_outside, blp[i]);
        }
    }
    r << "r in [0, 310] step 10: positivity lost for r in [" << (violating.empty() ? 0.0 : violating.front()) << ", "
      << (violating.empty() ? 0.0 : violating.back()) << "] (" << violating.size() << " values); min BLP there "
      << (violating.empty() ? 0.0 : min_blp) << "; max BLP elsewhere " << max_blp_outside << "; max Markovian N_S "
      << max_ns;
    r.require(violating.size() >= 3, "positivity-violating regime found");
    r.require(!violating.empty() && min_blp > 0.0, "BLP > 0 throughout that regime");
    r.require(max_ns == 0.0, "Markovian N_S = 0");
    return r.done();
}

Outcome c11_waveguide()
{
    Report r;
    waveguide::WaveguideParams p{500.0, 1.0, 0.95, 0.0};
    const double w = waveguide::fwhm(waveguide::waveguide_spectrum(p, waveguide::waveguide_grid(p)));
    std::vector<double> eta;
    for (int n = 0; n < 200; n += 20) eta.push_back(waveguide::resonant_eta(p, n));
    for (int n = 200; n < 3000; n += 100) eta.push_back(waveguide::resonant_eta(p, n));
    for (int n = 3000; n <= 12000; n += 500) eta.push_back(waveguide::resonant_eta(p, n));
    const auto sw = waveguide::waveguide_measure_sweep(p, eta);
    std::vector<double> v;
    for (const auto& m : sw.measure) v.push_back(m.value);
    // single interior maximum: strict rise up to it, and afterwards no secondary peak rising more
    // than the plateau tolerance (10% of the plateau) above the running minimum
    bool rising = true;
    for (std::size_t i = 1; i <= sw.argmax; ++i) rising = rising && v[i] > v[i - 1];
    double running_min = v[sw.argmax];
    double rebound = 0.0;
    for (std::size_t i = sw.argmax + 1; i < v.size(); ++i) {
        running_min = std::min(running_min, v[i]);
        rebound = std::max(rebound, v[i] - running_min);
    }
    const bool interior = sw.argmax > 0 && sw.argmax < v.size() - v.size() / 4;
    r << "eta = 0 FWHM " << w << " (expected " << 1.0 + p.beta << "); eta_max " << sw.eta_max << ", N_S max "
      << v[sw.argmax] << ", plateau " << sw.saturation << ", last-quartile spread " << sw.saturation_spread
      << ", largest rebound after the maximum " << rebound;
    r.require(std::abs(w - (1.0 + p.beta)) <= 0.01 * (1.0 + p.beta), "FWHM within 1%");
    r.require(interior && rising && rebound < 0.1 * sw.saturation, "single interior maximum");
    r.require(sw.saturation < v[sw.argmax], "decrease after the maximum");
    r.require(sw.saturation_spread < 0.1, "last-quartile spread < 10%");
    return r.done();
}

Outcome c12_kernels()
{
    Report r;
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> dist(-300.0, 300.0);
    // Lab-frame thermal kernel with omega_q = 1e3 g: the counter-rotating entries oscillate at
    // ~2 omega_q, which brute-force quadrature resolves only for moderate omega_q.
    const auto th = baths::thermal_kernel({1.0, 1000.0, 900.0, 10.0, 0.1});
    const auto sq = baths::squeezed_kernel({1.0, 200.0, 320.0, 249.8, 10.0});
    double e_th = 0.0;
    double e_sq = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double d = dist(rng);
        const Mat4 qt = oracles::fourier_quadrature([&](double t) { return th.time(t); }, th.omega_ref() + d, 3.0, 5e-4);
        const Mat4 qs = oracles::fourier_quadrature([&](double t) { return sq.time(t); }, sq.omega_ref() + d, 3.0, 4e-3);
        e_th = std::max(e_th, rel_err(th.freq(d), qt));
        e_sq = std::max(e_sq, rel_err(sq.freq(d), qs));
    }
    // The generic matrix M has eigenvalues -kappa +- i delta_c_eff and +kappa +- i delta_c_eff; the
    // growing pair cancels only through T, so the M/T route carries roundoff ~ eps e^{2 kappa t}.
    // Errors are therefore measured against the kernel scale |K(0)|.
    std::uniform_real_distribution<double> rr(0.0, 315.0);
    std::uniform_real_distribution<double> tt(0.0, 1.0);
    double e_mt = 0.0;
    double e_point = 0.0;
    for (int k = 0; k < 50; ++k) {
        const baths::SqueezedBathParams p{1.0, 200.0, 320.0, rr(rng), 10.0};
        const double t = tt(rng);
        const Mat4 a = baths::squeezed_kernel_time(p, t);
        const Mat4 b = baths::generic_kernel_time(p, t);
        e_mt = std::max(e_mt, (a - b).norm() / baths::squeezed_kernel_time(p, 0.0).norm());
        e_point = std::max(e_point, rel_err(a, b));
    }
    r << "100 frequencies: thermal " << e_th << ", squeezed " << e_sq << "; 50 (r, t) points, t in [0, 10/kappa]: "
      << "M/T vs closed form " << e_mt << " of |K(0)| (pointwise relative " << e_point << ")";
    r.require(e_th < 1e-8, "thermal transform within 1e-8");
    r.require(e_sq < 1e-8, "squeezed transform within 1e-8");
    r.require(e_mt < 1e-9, "M/T construction within 1e-9");
    return r.done();
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        Outcome (*run)();
    };
    const std::vector<Criterion> all{
        {1, "thermal steady state", 1.0, c1_steady_state},
        {2, "closed-form spectra", 10.0, c2_closed_form},
        {3, "Markov-limit identity", 10.0, c3_markov_identity},
        {4, "tail exponents", 5.0, c4_tails},
        {5, "side-peak location", 120.0, c5_side_peak},
        {6, "measure scaling", 120.0, c6_scaling},
        {7, "squeezed reduction and resonance", 120.0, c7_squeezed},
        {8, "positivity contrast", 60.0, c8_positivity},
        {9, "BLP behaviour", 300.0, c9_blp},
        {10, "squeezed false positive", 60.0, c10_false_positive},
        {11, "waveguide sweep", 120.0, c11_waveguide},
        {12, "kernel transform consistency", 60.0, c12_kernels},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_s) {
            o.pass = false;
            o.detail += " [failed: runtime limit]";
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %2d %-34s %s  %7.2f s (limit %g s)  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", secs,
                    c.limit_s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
