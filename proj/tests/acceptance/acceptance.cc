//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file acceptance/acceptance.cc
//! \brief Acceptance criteria 1-7, one PASS/FAIL line each.
//---------------------------------------------------------------------------//
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "qcloak/designer/Design.hh"
#include "qcloak/designer/Robustness.hh"
#include "qcloak/fields/FluxIntegrals.hh"
#include "qcloak/solver/CrossSection.hh"
#include "qcloak/specfun/SphericalBessel.hh"

#include "TestSupport.hh"

namespace
{
using namespace qcloak;
using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

struct Verdict
{
    bool pass{false};
    std::string detail;
};

struct Criterion
{
    int id;
    std::string title;
    double time_limit_s;
    std::function<Verdict()> run;
};

//---------------------------------------------------------------------------//
// Best core within +-2% of the nominal (m_c, V_c)
DesignPoint refined_reference_point()
{
    static DesignPoint const point = [] {
        auto const s = test::cloak_stack();
        auto const core = s.layers[1].medium;
        CoreSearch box;
        box.core_mass = SweepAxis::linspace(
            "m_c", 0.98 * core.mass_me, 1.02 * core.mass_me, 21);
        box.core_potential = SweepAxis::linspace(
            "V_c", 0.98 * core.potential_eV, 1.02 * core.potential_eV, 21);
        return match_core_parameters(s, s.layers[0].medium, box, DesignTargets{}, 1);
    }();
    return point;
}

FieldEvaluator field_of(LayerStack const& s)
{
    int const lmin = cross_section(s).l_max_used;
    return FieldEvaluator(solve_partial_waves(s, field_order(s, 2.0, lmin)));
}

//---------------------------------------------------------------------------//
Verdict criterion1()
{
    auto const cs = cross_section(test::cloak_stack());
    bool const window = cs.sigma_normalized >= 1e-5 && cs.sigma_normalized <= 1e-3;
    auto const p = refined_reference_point();
    bool const refined = p.objective <= 1e-4;
    return {window && refined,
            fmt::format("sigma/(pi a^2) = {:.4e} in [1e-5, 1e-3]: {}; best max(|a0|,|a1|) "
                        "within +-2% = {:.3e} at (m_c, V_c) = ({:.5f}, {:.4f}), "
                        "target <= 1e-4: {}",
                        cs.sigma_normalized, window ? "yes" : "no", p.objective,
                        p.core.mass_me, p.core.potential_eV, refined ? "yes" : "no")};
}

Verdict criterion2()
{
    auto const p = refined_reference_point();
    auto const s = with_media(test::cloak_stack(), p.shell, p.core);
    auto const field = field_of(s);
    double half = 0;
    for (int t = 0; t <= 36; ++t)
        half = std::max(half, std::norm(field.psi(0.85, pi * t / 36)));
    double const centre = std::norm(field.psi(0, 0));
    return {half <= 1e-8 && centre <= 1e-12,
            fmt::format("max_theta |psi|^2 at r = 0.5 a_c = {:.3e} (<= 1e-8), "
                        "|psi|^2 at r = 0 = {:.3e} (<= 1e-12)",
                        half, centre)};
}

Verdict criterion3()
{
    double const F = flux_through_shell_annulus(field_of(test::cloak_stack()), 1e-8);
    auto const p = refined_reference_point();
    double const F_refined = flux_through_shell_annulus(
        field_of(with_media(test::cloak_stack(), p.shell, p.core)), 1e-8);
    return {F >= 0.93 && F <= 0.97,
            fmt::format("F = {:.6f} (target [0.93, 0.97]); refined core gives {:.6f}",
                        F, F_refined)};
}

Verdict criterion4()
{
    auto const s = test::cloak_stack();
    double const ks_a = std::abs(wavenumber(s.energy_eV, s.layers[0].medium)) * 2.0;
    double const kc_ac = std::abs(wavenumber(s.energy_eV, s.layers[1].medium)) * 1.7;
    double const kc_a = std::abs(wavenumber(s.energy_eV, s.layers[1].medium)) * 2.0;
    return {std::fabs(ks_a - 6.30) <= 0.05 && std::fabs(kc_ac - 20.06) <= 0.2,
            fmt::format("|k_s| a = {:.4f} (6.30 +- 0.05), |k_c| a_c = {:.4f} "
                        "(20.06 +- 0.2); |k_c| a = {:.4f} for reference",
                        ks_a, kc_ac, kc_a)};
}

Verdict criterion5()
{
    RobustnessInput in{test::hidden_layer_stack(0.055, -9000),
                       {"m_h", {0.055, 0.5, 1.0, 5.0, 10.0}},
                       {"V_h", {-9000.0, -100.0, 0.0, 100.0, 9000.0}}};
    auto const grid = robustness_sweep(in);
    int failures = 0;
    for (auto const& c : grid.cells)
        failures += (!c.error.empty() || !std::isfinite(c.objective)) ? 1 : 0;
    double const spread = relative_spread(grid);
    return {grid.cells.size() == 25 && failures == 0 && spread < 0.01,
            fmt::format("{} cells, {} failures, relative spread = {:.3e} (< 1e-2)",
                        grid.cells.size(), failures, spread)};
}

//---------------------------------------------------------------------------//
Verdict criterion6()
{
    std::vector<std::string> notes;
    bool ok = true;
    auto note = [&](char const* name, bool pass, std::string detail) {
        ok = ok && pass;
        notes.push_back(fmt::format("    ({}) {} {}", name, pass ? "ok  " : "FAIL", detail));
    };

    // (a), (b)
    {
        std::mt19937_64 rng(20261017);
        double unit = 0, optical = 0;
        for (int i = 0; i < 100; ++i)
        {
            auto const cs = cross_section(test::random_stack(rng, 1 + i % 3, 10.0));
            unit = std::max(unit, cs.unitarity_residual());
            optical = std::max(optical, cs.optical_theorem_residual());
        }
        note("a", unit <= 1e-9, fmt::format("max ||1+2a_l|-1| = {:.2e} (1e-9)", unit));
        note("b", optical <= 1e-8, fmt::format("max optical-theorem residual = {:.2e} (1e-8)", optical));
    }
    // (c)
    {
        std::mt19937_64 rng(42);
        double worst = 0;
        for (int i = 0; i < 20; ++i)
        {
            auto const s = test::random_stack(rng, 2, 5.0);
            for (int l = 0; l <= 6; ++l)
                worst = std::max(worst, std::abs(solve_two_layer(s, l).a_scat
                                                 - test::ode_scattering_coefficient(s, l)));
        }
        note("c", worst <= 1e-6, fmt::format("max |a - a_ode| = {:.2e} (1e-6)", worst));
    }
    // (d)
    {
        double worst = 0;
        for (int i = 0; i <= 300; ++i)
        {
            double const x = 0.1 * std::pow(2000.0, i / 300.0);
            for (cplx z : {cplx{x, 0}, cplx{x, 0.5 * x}})
            {
                auto const j = sph_bessel_j_all(40, z);
                auto const h = sph_hankel1_all(40, z);
                for (int l = 0; l <= 40; ++l)
                {
                    cplx const w = (j[l].value * h[l].derivative - j[l].derivative * h[l].value)
                                   * std::exp(j[l].log_scale + h[l].log_scale);
                    cplx const expected = cplx{0, 1} / (z * z);
                    worst = std::max(worst, std::abs(w - expected) / std::abs(expected));
                }
            }
        }
        note("d", worst <= 1e-10, fmt::format("max relative Wronskian error = {:.2e} (1e-10)", worst));
    }
    // (e)
    {
        auto const s = test::identity_stack();
        auto const cs = cross_section(s);
        double const k0 = wavenumber(s.energy_eV, s.background).real();
        auto const field = FieldEvaluator(solve_partial_waves(s, field_order(s, 2 / k0, 4)));
        double worst = 0;
        for (int i = 0; i <= 20; ++i)
            for (int t = 0; t <= 12; ++t)
            {
                double const r = (2 / k0) * i / 20, th = pi * t / 12;
                worst = std::max(worst, std::abs(field.psi(r, th)
                                                 - std::exp(cplx{0, k0 * r * std::cos(th)})));
            }
        note("e", cs.sigma == 0 || (cs.sigma_normalized < 1e-25 && worst < 1e-10),
             fmt::format("sigma/(pi a^2) = {:.1e}, max |psi - e^(ikz)| = {:.1e}",
                         cs.sigma_normalized, worst));
    }
    // (f)
    {
        std::mt19937_64 rng(5);
        double worst = 0;
        for (int i = 0; i < 50; ++i)
        {
            auto const s = i == 0 ? test::cloak_stack() : test::random_stack(rng, 2, 20.0);
            for (int l = 0; l <= 8; ++l)
                worst = std::max(worst, std::abs(solve_n_layer(s, l).a_scat
                                                 - scattering_coefficient_closed_form(s, l)));
        }
        note("f", worst <= 1e-10, fmt::format("max |a_N - a_closed| = {:.2e} (1e-10)", worst));
    }
    // (g)
    {
        CoreSearch search;
        search.core_mass = SweepAxis::linspace("m_c", 0.01, 2.0, 41);
        search.core_potential = SweepAxis::linspace("V_c", 0.1, 50.0, 41);
        double worst = 0;
        int cases = 0;
        for (double ms : {0.16, 0.165, 0.17, 0.175, 0.18})
        {
            auto const p = match_core_parameters(test::cloak_stack(), {ms, -2.34}, search,
                                                 DesignTargets{}, 1);
            if (!(p.objective <= 1e-4))
                continue;
            ++cases;
            auto const s = with_media(test::cloak_stack(), p.shell, p.core);
            for (int l = 0; l <= 1; ++l)
            {
                auto const exact = shell_coefficients(solve_two_layer(s, l));
                auto const approx = shell_coefficients_approx(l, s);
                worst = std::max({worst, std::abs(exact.b - approx.b),
                                  std::abs(exact.c - approx.c)});
            }
        }
        note("g", cases > 0 && worst <= 5e-4,
             fmt::format("{} cancelled stacks, max shell coefficient difference = {:.2e} (5e-4)",
                         cases, worst));
    }

    std::string detail = "all sub-properties";
    for (auto const& n : notes)
        detail += "\n" + n;
    return {ok, detail};
}

//---------------------------------------------------------------------------//
std::string slurp(std::filesystem::path const& p)
{
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Verdict criterion7()
{
#ifdef QCLOAK_CLI_PATH
    namespace fs = std::filesystem;
    fs::path const root = fs::temp_directory_path() / "qcloak_acceptance_determinism";
    fs::remove_all(root);
    struct Job
    {
        char const* command;
        char const* config;
        std::vector<char const*> payloads;
    };
    std::vector<Job> const jobs{
        {"design", "design_relaxed.json", {"design.json", "shell_grid.csv", "shell_grid.json"}},
        {"sweep", "three_layer_sweep.json", {"sweep.csv", "sweep.json"}},
    };
    int compared = 0;
    std::string mismatch;
    for (auto const& job : jobs)
    {
        for (int run = 0; run < 2; ++run)
        {
            auto const cmd = fmt::format("{} {} --config {} --out {} --threads {} > /dev/null",
                                         QCLOAK_CLI_PATH, job.command,
                                         test::data_path(job.config),
                                         (root / fmt::format("{}{}", job.command, run)).string(),
                                         run == 0 ? 1 : 0);
            if (std::system(cmd.c_str()) != 0)
                return {false, fmt::format("'{}' failed", cmd)};
        }
        for (auto const* name : job.payloads)
        {
            ++compared;
            if (slurp(root / fmt::format("{}0", job.command) / name)
                != slurp(root / fmt::format("{}1", job.command) / name))
                mismatch += fmt::format(" {}/{}", job.command, name);
        }
    }
    fs::remove_all(root);
    return {mismatch.empty(),
            mismatch.empty()
                ? fmt::format("{} payload files byte-identical across reruns", compared)
                : "differing payloads:" + mismatch};
#else
    return {false, "command-line tool not built"};
#endif
}

}  // namespace

//---------------------------------------------------------------------------//
int main()
{
    std::vector<Criterion> const criteria{
        {1, "golden cloak case cross section", 1.0, criterion1},
        {2, "dark core after refinement", 1.0, criterion2},
        {3, "flux fraction through the shell annulus", 5.0, criterion3},
        {4, "wavenumber products", 0.1, criterion4},
        {5, "hidden-layer robustness sweep", 10.0, criterion5},
        {6, "property suite", 60.0, criterion6},
        {7, "design and sweep determinism", 120.0, criterion7},
    };

    int failed = 0;
    for (auto const& c : criteria)
    {
        auto const start = std::chrono::steady_clock::now();
        Verdict v;
        try
        {
            v = c.run();
        }
        catch (std::exception const& e)
        {
            v = {false, std::string("exception: ") + e.what()};
        }
        double const secs
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool const in_time = secs < c.time_limit_s;
        bool const pass = v.pass && in_time;
        failed += pass ? 0 : 1;
        fmt::print("{} criterion {}: {} [{:.3f} s, limit {} s{}]\n    {}\n",
                   pass ? "PASS" : "FAIL", c.id, c.title, secs, c.time_limit_s,
                   in_time ? "" : ", too slow", v.detail);
    }
    fmt::print("{} of {} acceptance criteria passed\n", criteria.size() - failed,
               criteria.size());
    return failed == 0 ? 0 : 1;
}
