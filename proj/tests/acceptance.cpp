// SPDX-License-Identifier: Apache-2.0
//
// twdp-phase: phase statistics of two-wave with diffuse power fading channels
// Copyright (C) 2026 twdp-phase contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

/// Release acceptance gate. Each criterion prints exactly one
/// "criterion N: PASS/FAIL" line with the measured numbers and its wall time
/// against the budget; indented "note:" lines carry non-gating diagnostics.
/// Tolerances are pinned here on purpose: a red line means the library does
/// not meet the stated bound and the gate says so instead of loosening it.
///
/// Usage: twdp_acceptance [N]   (N in 1..12; no argument runs all twelve)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "twdp/twdp.hpp"
#include "oracles.hpp"

namespace
{

using namespace twdp;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// phi_i = -pi + 2 pi (i+1)/n, the same grid the pdf subcommand emits.
double grid_phi(int i, int n)
{
    return -pi + two_pi * (static_cast<double>(i) + 1.0) / static_cast<double>(n);
}

/// Index window wide enough that the dropped Poisson mass is far below
/// double precision; stands in for the untruncated series.
TruncationBounds converged_bounds(double nu)
{
    int hi = static_cast<int>(std::ceil(nu + 15.0 * std::sqrt(nu) + 30.0));
    return TruncationBounds{0, hi, 100.0};
}

/// Mean of the analytic density over each histogram bin (Simpson on four
/// subintervals), so finite-bin-width curvature does not masquerade as
/// Monte Carlo error.
std::vector<double> bin_averaged_density(const PhasePdfSpec &spec, int n_bins)
{
    PhaseHistogram shape(n_bins);
    std::vector<double> out(static_cast<std::size_t>(n_bins));
    for (int i = 0; i < n_bins; ++i)
    {
        double a = shape.bin_left(i);
        double h = 0.25 * shape.bin_width();
        out[static_cast<std::size_t>(i)] =
            (phase_pdf(spec, a) + 4.0 * phase_pdf(spec, a + h) +
             2.0 * phase_pdf(spec, a + 2.0 * h) + 4.0 * phase_pdf(spec, a + 3.0 * h) +
             phase_pdf(spec, a + 4.0 * h)) / 12.0;
    }
    return out;
}

/// Counts local maxima of a cyclic sequence, merging runs of bitwise-equal
/// neighbours into one candidate. The merge matters: on a grid that excludes
/// the symmetry axis, a peak at phi = 0 lands as two equal flanking samples
/// and a strict element-wise test would count it zero times.
int cyclic_mode_count(const std::vector<double> &v)
{
    int n = static_cast<int>(v.size());
    int start = -1;
    for (int i = 0; i < n; ++i)
    {
        if (v[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>((i + n - 1) % n)])
        {
            start = i;
            break;
        }
    }
    if (start < 0)
        return 0;
    std::vector<double> runs;
    double cur = v[static_cast<std::size_t>(start)];
    runs.push_back(cur);
    for (int k = 1; k < n; ++k)
    {
        double val = v[static_cast<std::size_t>((start + k) % n)];
        if (val != cur)
        {
            runs.push_back(val);
            cur = val;
        }
    }
    int r = static_cast<int>(runs.size());
    int modes = 0;
    for (int k = 0; k < r; ++k)
    {
        double prev = runs[static_cast<std::size_t>((k + r - 1) % r)];
        double next = runs[static_cast<std::size_t>((k + 1) % r)];
        if (runs[static_cast<std::size_t>(k)] > prev && runs[static_cast<std::size_t>(k)] > next)
            ++modes;
    }
    return modes;
}

double total_variation(const std::vector<double> &x)
{
    double tv = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        tv += std::fabs(x[i] - x[i - 1]);
    return tv;
}

bool report(int n, bool pass, double elapsed_s, double budget_s, const std::string &detail)
{
    pass = pass && elapsed_s < budget_s;
    std::printf("criterion %d: %s %s elapsed=%.3fs (budget %gs)\n", n,
                pass ? "PASS" : "FAIL", detail.c_str(), elapsed_s, budget_s);
    return pass;
}

std::string fmt(const char *f, ...)
{
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return std::string(buf);
}

// Bounds reproduce the published window [10, 49] at nu = 30 and come back in
// well under a millisecond.
bool criterion_1()
{
    auto t0 = Clock::now();
    TruncationBounds b = truncation_bounds(30.0, 99.9);
    double call_s = seconds_since(t0);
    bool ok = b.m_min == 10 && b.m_max == 49 && b.n_terms() == 40;
    return report(1, ok && call_s < 1e-3, seconds_since(t0), 1e-3,
                  fmt("bounds=[%d,%d] n_terms=%d call=%.1fus", b.m_min, b.m_max,
                      b.n_terms(), call_s * 1e6));
}

// Retained power-share mass inside the window must reach 99.9% for each nu.
// The brute totals confirm the mass function itself sums to one; the note
// line shows the widened window that does clear the target everywhere.
bool criterion_2()
{
    auto t0 = Clock::now();
    const double nus[] = {0.1, 1.0, 4.0, 10.0, 30.0};
    bool ok = true;
    std::string detail;
    std::string notes;
    double worst_total_dev = 0.0;
    for (double nu : nus)
    {
        TruncationBounds b = truncation_bounds(nu, 99.9);
        double total = 0.0;
        double window = 0.0;
        for (int m = 0; m <= 200; ++m)
        {
            double p = power_share_pdf(nu, m);
            total += p;
            if (m >= b.m_min && m <= b.m_max)
                window += p;
        }
        worst_total_dev = std::max(worst_total_dev, std::fabs(total - 1.0));
        double lib = retained_power(nu, b);
        bool row = window >= 0.999 && std::fabs(lib - window) < 1e-12;
        ok = ok && row;
        detail += fmt(" nu=%g:[%d,%d]=%.7f%s", nu, b.m_min, b.m_max, window,
                      row ? "" : "<0.999");

        double z = normal_quantile(0.5 + 99.9 / 200.0);
        int lo = static_cast<int>(std::floor(std::max(0.0, nu - z * std::sqrt(nu))));
        int hi = static_cast<int>(std::ceil(nu + 1.0 + z * std::sqrt(nu)));
        double widened = 0.0;
        for (int m = lo; m <= hi; ++m)
            widened += power_share_pdf(nu, m);
        notes += fmt(" nu=%g:[%d,%d]=%.7f", nu, lo, hi, widened);
    }
    bool pass = report(2, ok, seconds_since(t0), 1.0,
                       fmt("brute_total_dev=%.1e%s", worst_total_dev, detail.c_str()));
    std::printf("  note: widened window [floor(max(0,nu-Z sqrt(nu))), ceil(nu+1+Z sqrt(nu))] retains%s\n",
                notes.c_str());
    return pass;
}

// Truncated series against the quadrature oracle on the full 721-point grid.
// The note line re-runs the same comparison with a converged index window to
// show how much of any deviation is the 99.9999% truncation recipe.
bool criterion_3()
{
    auto t0 = Clock::now();
    const double ks[] = {1.0, 5.0, 10.0, 15.0};
    const double gs[] = {0.0, 0.3, 0.7, 1.0};
    bool ok = true;
    double worst = 0.0, worst_wide = 0.0;
    std::string detail;
    for (double k : ks)
        for (double g : gs)
        {
            ChannelParams p = ChannelParams::from_normalized(k, g, 1.0, 0.0);
            PhasePdfSpec spec = make_phase_pdf_spec(p, 99.9999);
            PhasePdfSpec wide = make_phase_pdf_spec(p, converged_bounds(p.nu()));
            double dev = 0.0, dev_wide = 0.0;
            for (int i = 0; i < 721; ++i)
            {
                double phi = grid_phi(i, 721);
                double ref = phase_pdf_oracle(p, phi);
                dev = std::max(dev, std::fabs(phase_pdf(spec, phi) - ref));
                dev_wide = std::max(dev_wide, std::fabs(phase_pdf(wide, phi) - ref));
            }
            if (dev > worst)
            {
                worst = dev;
                detail = fmt("worst at K=%g Gamma=%g", k, g);
            }
            worst_wide = std::max(worst_wide, dev_wide);
            ok = ok && dev <= 1e-6;
        }
    bool pass = report(3, ok, seconds_since(t0), 120.0,
                       fmt("maxdev=%.3e (tol 1e-6, %s)", worst, detail.c_str()));
    std::printf("  note: converged-window series vs oracle maxdev=%.3e; the gap above is truncation bias, not evaluation error\n",
                worst_wide);
    return pass;
}

// Single-cluster limit: the series must collapse onto the closed-form Rician
// phase density.
bool criterion_4()
{
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (double k : {1.0, 5.0, 10.0})
    {
        ChannelParams p = ChannelParams::from_normalized(k, 0.0, 1.0, 0.0);
        PhasePdfSpec spec = make_phase_pdf_spec(p, 99.9);
        double dev = 0.0;
        for (int i = 0; i < 721; ++i)
        {
            double phi = grid_phi(i, 721);
            dev = std::max(dev, std::fabs(phase_pdf(spec, phi) - rician_phase_pdf(k, phi)));
        }
        ok = ok && dev <= 1e-8;
        detail += fmt(" K=%g:%.2e", k, dev);
    }
    return report(4, ok, seconds_since(t0), 10.0, fmt("maxdev%s (tol 1e-8)", detail.c_str()));
}

// No specular clusters at all: uniform phase to near machine precision.
bool criterion_5()
{
    auto t0 = Clock::now();
    ChannelParams p = ChannelParams::from_normalized(0.0, 0.0, 1.0, 0.0);
    PhasePdfSpec spec = make_phase_pdf_spec(p, 99.9);
    double dev = 0.0;
    for (int i = 0; i < 721; ++i)
        dev = std::max(dev, std::fabs(phase_pdf(spec, grid_phi(i, 721)) - inv_two_pi));
    return report(5, dev <= 1e-12, seconds_since(t0), 1.0,
                  fmt("maxdev=%.3e (tol 1e-12)", dev));
}

// The truncated density integrates to the retained mixture mass: just below
// one, and never above it beyond quadrature noise.
bool criterion_6()
{
    auto t0 = Clock::now();
    const double ks[] = {1.0, 5.0, 10.0, 15.0};
    const double gs[] = {0.0, 0.3, 0.7, 1.0};
    bool ok = true;
    double lo = 2.0, hi = 0.0;
    double lo_k = 0.0, lo_g = 0.0;
    for (double k : ks)
        for (double g : gs)
        {
            ChannelParams p = ChannelParams::from_normalized(k, g, 1.0, 0.0);
            PhasePdfSpec spec = make_phase_pdf_spec(p, 99.9);
            double integral =
                integrate([&](double phi) { return phase_pdf(spec, phi); }, -pi, pi).value;
            if (integral < lo)
            {
                lo = integral;
                lo_k = k;
                lo_g = g;
            }
            hi = std::max(hi, integral);
            ok = ok && integral >= 0.999 && integral <= 1.0 + 1e-6;
        }
    bool pass = report(6, ok, seconds_since(t0), 30.0,
                       fmt("integral range [%.7f, %.7f] (need [0.999, 1+1e-6]), min at K=%g Gamma=%g",
                           lo, hi, lo_k, lo_g));
    {
        // Same integral for the weakest set with the widened index window;
        // the shortfall is the window recipe, not the density evaluation.
        ChannelParams p = ChannelParams::from_normalized(lo_k, lo_g, 1.0, 0.0);
        double nu = p.nu();
        double z = normal_quantile(0.5 + 99.9 / 200.0);
        TruncationBounds widened{
            static_cast<int>(std::floor(std::max(0.0, nu - z * std::sqrt(nu)))),
            static_cast<int>(std::ceil(nu + 1.0 + z * std::sqrt(nu))), 99.9};
        PhasePdfSpec spec = make_phase_pdf_spec(p, widened);
        double integral =
            integrate([&](double phi) { return phase_pdf(spec, phi); }, -pi, pi).value;
        std::printf("  note: widened window [%d,%d] integrates the same set to %.7f\n",
                    widened.m_min, widened.m_max, integral);
    }
    return pass;
}

// Closed form against the converged series. The alternating triple series is
// the fragile piece; if it ever refuses to converge at K=10 the row is
// reported and excluded rather than silently failed, per the documented
// escape clause for that instance.
bool criterion_7()
{
    auto t0 = Clock::now();
    bool ok = true;
    double worst = 0.0;
    std::string detail, notes;
    for (double k : {1.0, 3.0, 10.0})
        for (double g : {0.0, 0.5, 1.0})
        {
            ChannelParams p = ChannelParams::from_normalized(k, g, 1.0, 0.0);
            PhasePdfSpec wide = make_phase_pdf_spec(p, converged_bounds(p.nu()));
            double dev = 0.0;
            bool converged = true;
            for (int i = 0; i < 181 && converged; ++i)
            {
                double phi = grid_phi(i, 181);
                try
                {
                    double closed = phase_pdf_closed(p, phi).total();
                    dev = std::max(dev, std::fabs(closed - phase_pdf(wide, phi)));
                }
                catch (const numeric_error &e)
                {
                    converged = false;
                    if (k == 10.0)
                        notes += fmt(" K=10 Gamma=%g excluded (%s);", g, e.what());
                    else
                        ok = false;
                }
            }
            if (converged)
            {
                worst = std::max(worst, dev);
                ok = ok && dev <= 1e-6;
                detail += fmt(" (%g,%g):%.1e", k, g, dev);
            }
        }
    bool pass = report(7, ok, seconds_since(t0), 300.0,
                       fmt("maxdev=%.3e (tol 1e-6)%s", worst, detail.c_str()));
    if (!notes.empty())
        std::printf("  note: triple-series escape clause invoked:%s\n", notes.c_str());
    return pass;
}

// Ten-million-sample Monte Carlo histogram against the bin-averaged analytic
// density. The seed is pinned; the bound is a roughly three-sigma binomial
// envelope for the worst of 256 bins, so individual seeds sit near it.
bool criterion_8()
{
    auto t0 = Clock::now();
    McConfig cfg{ChannelParams::from_normalized(10.0, 0.7, 1.0, 0.0), 10000000, 4, 256};
    McResult mc = mc_phase_samples(cfg);
    PhasePdfSpec wide = make_phase_pdf_spec(cfg.params, converged_bounds(cfg.params.nu()));
    std::vector<double> analytic = bin_averaged_density(wide, cfg.n_bins);
    double dev = 0.0;
    for (int i = 0; i < cfg.n_bins; ++i)
        dev = std::max(dev, std::fabs(mc.histogram.density(i) - analytic[static_cast<std::size_t>(i)]));
    return report(8, dev <= 3e-3, seconds_since(t0), 120.0,
                  fmt("samples=1e7 bins=256 seed=%llu maxdev=%.3e (tol 3e-3)",
                      static_cast<unsigned long long>(cfg.seed), dev));
}

// Grid mode structure: one peak while the second specular component is weak,
// two once it is strong enough at high K.
bool criterion_9()
{
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    auto modes_at = [](double k, double g)
    {
        ChannelParams p = ChannelParams::from_normalized(k, g, 1.0, 0.0);
        PhasePdfSpec spec = make_phase_pdf_spec(p, 99.9);
        std::vector<double> v(721);
        for (int i = 0; i < 721; ++i)
            v[static_cast<std::size_t>(i)] = phase_pdf(spec, grid_phi(i, 721));
        return cyclic_mode_count(v);
    };
    for (double k : {1.0, 5.0, 10.0, 15.0})
    {
        int m = modes_at(k, 0.3);
        ok = ok && m == 1;
        detail += fmt(" (0.3,%g):%d", k, m);
    }
    for (double k : {10.0, 15.0})
    {
        int m = modes_at(k, 1.0);
        ok = ok && m == 2;
        detail += fmt(" (1,%g):%d", k, m);
    }
    return report(9, ok, seconds_since(t0), 10.0,
                  fmt("modes(Gamma,K):%s (need 1,1,1,1,2,2)", detail.c_str()));
}

// Geometry-driven simulator at its defaults: aggregate histogram against the
// analytic density, plus the two ray-rotation figures the geometry pins down.
bool criterion_10()
{
    auto t0 = Clock::now();
    GeoSimConfig cfg;
    PhaseHistogram h = geo_phase_histogram(cfg);
    PhasePdfSpec wide = make_phase_pdf_spec(cfg.params, converged_bounds(cfg.params.nu()));
    std::vector<double> analytic = bin_averaged_density(wide, h.n_bins());
    double dev = 0.0;
    for (int i = 0; i < h.n_bins(); ++i)
        dev = std::max(dev, std::fabs(h.density(i) - analytic[static_cast<std::size_t>(i)]));

    GeoRayPhases rays = geo_ray_phases(cfg);
    double los_deg = total_variation(rays.los) * 180.0 / pi;
    double ref_turns = total_variation(rays.reflected) / two_pi;
    bool hist_ok = dev <= 2e-2;
    bool los_ok = los_deg >= 9.0 && los_deg <= 11.0;
    bool ref_ok = ref_turns >= 4.5 && ref_turns <= 5.5;

    GeoSimConfig big = cfg;
    big.n_realizations = 3200;
    PhaseHistogram hb = geo_phase_histogram(big);
    double dev_big = 0.0;
    for (int i = 0; i < hb.n_bins(); ++i)
        dev_big = std::max(dev_big, std::fabs(hb.density(i) - analytic[static_cast<std::size_t>(i)]));

    bool pass = report(10, hist_ok && los_ok && ref_ok, seconds_since(t0), 300.0,
                       fmt("hist maxdev=%.3e (tol 2e-2)%s los=%.3fdeg%s reflected=%.3fturns%s",
                           dev, hist_ok ? "" : " FAIL", los_deg, los_ok ? "" : " FAIL",
                           ref_turns, ref_ok ? "" : " FAIL"));
    std::printf("  note: same comparison at 3200 realizations gives maxdev=%.3e; the 200-realization deviation is sampling noise, see the histogram bound analysis in the docs\n",
                dev_big);
    return pass;
}

// Phase-sync error probability: exact uniform value, collapse onto the
// Rician reference, monotonicity in K, and Monte Carlo agreement.
bool criterion_11()
{
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    ChannelParams rayleigh = ChannelParams::from_normalized(0.0, 0.0, 1.0, 0.0);
    double pe0 = pe_mpsk(rayleigh, 2);
    bool a = std::fabs(pe0 - 0.5) <= 1e-9;
    ok = ok && a;
    detail += fmt("K0,M2=%.10f%s", pe0, a ? "" : " FAIL");

    double dev_ric = 0.0;
    for (int k = 1; k <= 20; ++k)
    {
        ChannelParams p = ChannelParams::from_normalized(k, 0.0, 1.0, 0.0);
        dev_ric = std::max(dev_ric, std::fabs(pe_mpsk(p, 2) - pe_mpsk_rician(k, 2)));
    }
    bool b = dev_ric <= 1e-8;
    ok = ok && b;
    detail += fmt(" rician_dev=%.1e%s", dev_ric, b ? "" : " FAIL");

    bool mono = true;
    for (double g : {0.0, 0.3, 0.6})
    {
        double prev = 2.0;
        for (int k = 0; k <= 20; ++k)
        {
            double pe = pe_mpsk(ChannelParams::from_normalized(k, g, 1.0, 0.0), 2);
            mono = mono && pe <= prev + 1e-10;
            prev = pe;
        }
    }
    ok = ok && mono;
    detail += fmt(" monotone=%s", mono ? "yes" : "no FAIL");

    struct McCase { double k, g; int m; double target; };
    ChannelParams p47 = ChannelParams::from_normalized(10.0, 0.7, 1.0, 0.0);
    McCase cases[] = {
        {0.0, 0.0, 2, 0.5},
        {10.0, 0.7, 4, pe_mpsk(p47, 4)},
        {5.0, 0.0, 2, pe_mpsk_rician(5.0, 2)},
    };
    for (const McCase &c : cases)
    {
        McConfig mc{ChannelParams::from_normalized(c.k, c.g, 1.0, 0.0), 10000000, 0, 256};
        double est = pe_monte_carlo(mc, c.m);
        double sigma = std::sqrt(c.target * (1.0 - c.target) / static_cast<double>(mc.n_samples));
        double pulls = std::fabs(est - c.target) / sigma;
        bool row = pulls <= 3.0;
        ok = ok && row;
        detail += fmt(" mc(K%g,G%g,M%d)=%.2fsigma%s", c.k, c.g, c.m, pulls, row ? "" : " FAIL");
    }
    return report(11, ok, seconds_since(t0), 300.0, detail);
}

// Special-function self-checks against independent brute-force sums: the
// confluent second-kind / incomplete-gamma identity, and the terminating
// two-variable confluent series against its raw double sum inside the
// well-conditioned region, plus its one-index textbook rearrangement.
bool criterion_12()
{
    auto t0 = Clock::now();
    double dev_u = 0.0;
    for (int m = 0; m <= 60; ++m)
        for (double x : {0.2, 0.5, 1.0, 2.5, 5.0, 10.0, 25.0, 50.0, 100.0, 200.0, 400.0})
        {
            double lhs = tricomi_u(1.0, m + 2.0, x);
            double rhs = std::exp(x - (m + 1.0) * std::log(x) + ln_gamma(m + 1.0)) *
                         reg_gamma_q(m + 1.0, x);
            dev_u = std::max(dev_u, std::fabs(lhs - rhs) / std::fabs(rhs));
        }
    bool u_ok = dev_u <= 1e-11;

    double dev_p1 = 0.0;
    for (int m : {0, 1, 2, 5, 8, 10})
        for (double u : {0.0, 0.25, 0.5, 0.75, 1.0})
            for (double y : {0.5, 2.0, 6.0, 12.0})
            {
                double lib = humbert_phi1_terminating(m, u, y);
                double ref = static_cast<double>(oracle::phi1_double_series(m, u, y));
                dev_p1 = std::max(dev_p1, std::fabs(lib - ref) / std::fabs(ref));
            }
    bool p1_ok = dev_p1 <= 1e-9;

    double dev_lit = 0.0;
    for (int m = 0; m <= 10; ++m)
        for (double u : {0.2, 0.8})
            for (double y : {0.5, 5.0})
            {
                double lib = humbert_phi1_terminating(m, u, y);
                double ref = oracle::phi1_literal_ksum(m, u, y);
                dev_lit = std::max(dev_lit, std::fabs(lib - ref) / std::fabs(ref));
            }
    bool lit_ok = dev_lit <= 1e-7;

    return report(12, u_ok && p1_ok && lit_ok, seconds_since(t0), 10.0,
                  fmt("tricomi_identity=%.2e (tol 1e-11) phi1_brute=%.2e (tol 1e-9) phi1_onesum=%.2e (tol 1e-7)",
                      dev_u, dev_p1, dev_lit));
}

using CriterionFn = bool (*)();

} // namespace

int main(int argc, char **argv)
{
    CriterionFn fns[] = {criterion_1, criterion_2, criterion_3, criterion_4,
                         criterion_5, criterion_6, criterion_7, criterion_8,
                         criterion_9, criterion_10, criterion_11, criterion_12};
    int which = 0;
    if (argc > 1)
    {
        which = std::atoi(argv[1]);
        if (which < 1 || which > 12)
        {
            std::fprintf(stderr, "usage: %s [criterion 1..12]\n", argv[0]);
            return 2;
        }
    }
    int failed = 0;
    for (int i = 1; i <= 12; ++i)
    {
        if (which != 0 && i != which)
            continue;
        if (!fns[i - 1]())
            ++failed;
    }
    if (which == 0)
        std::printf("summary: %d/12 passed\n", 12 - failed);
    return failed == 0 ? 0 : 1;
}
