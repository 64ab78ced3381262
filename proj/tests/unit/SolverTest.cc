//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file unit/SolverTest.cc
//---------------------------------------------------------------------------//
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "qcloak/Error.hh"
#include "qcloak/designer/CoreStage.hh"
#include "qcloak/solver/CrossSection.hh"
#include "qcloak/solver/PartialWave.hh"
#include "qcloak/specfun/SphericalBessel.hh"

#include "TestSupport.hh"

namespace qcloak
{
namespace
{
using cplx = std::complex<double>;

//---------------------------------------------------------------------------//
TEST(TwoLayer, IdentityMedium)
{
    auto const s = test::identity_stack();
    for (int l = 0; l <= 10; ++l)
    {
        auto const w = solve_two_layer(s, l);
        EXPECT_LT(std::abs(w.a_scat), 1e-14) << l;
        EXPECT_LT(std::abs(w.layer_coeffs.back().regular.value() - 1.0), 1e-12) << l;
        EXPECT_EQ(w.layer_coeffs.back().outgoing.value(), cplx{});
    }
}

TEST(NLayer, IdentityMedium)
{
    auto s = test::identity_stack();
    s.layers.push_back({s.background, 1.0});
    for (int l = 0; l <= 8; ++l)
        EXPECT_LT(std::abs(solve_n_layer(s, l).a_scat), 1e-14) << l;
}

TEST(TwoLayer, ReferenceCloak)
{
    auto const s = test::cloak_stack();
    auto const a0 = solve_two_layer(s, 0).a_scat;
    auto const a1 = solve_two_layer(s, 1).a_scat;
    // Cross-checked against the radial ODE oracle
    EXPECT_LT(std::abs(a0 - test::ode_scattering_coefficient(s, 0)), 1e-8);
    EXPECT_LT(std::abs(a1 - test::ode_scattering_coefficient(s, 1)), 1e-8);
    EXPECT_NEAR(std::abs(a0), 1.253218e-2, 1e-7);
    EXPECT_NEAR(std::abs(a1), 1.920913e-3, 1e-8);
    // Three-digit parameters miss the exact cancellation, so |a_0| > 1e-4
    EXPECT_GT(std::abs(a0), 1e-4);
}

TEST(TwoLayer, OdeOracle)
{
    std::mt19937_64 rng(20261017);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial)
    {
        auto const s = test::random_stack(rng, 2, 5.0);
        for (int l = 0; l <= 6; ++l)
        {
            auto const exact = solve_two_layer(s, l).a_scat;
            auto const ode = test::ode_scattering_coefficient(s, l);
            worst = std::max(worst, std::abs(exact - ode));
        }
    }
    EXPECT_LT(worst, 1e-6);
}

TEST(NLayer, OdeOracleThreeLayers)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial)
    {
        auto const s = test::random_stack(rng, 3, 5.0);
        for (int l = 0; l <= 4; ++l)
            EXPECT_LT(std::abs(solve_n_layer(s, l).a_scat
                               - test::ode_scattering_coefficient(s, l)),
                      1e-6);
    }
}

TEST(NLayer, MatchesTwoLayerAndClosedForm)
{
    std::mt19937_64 rng(99);
    std::vector<LayerStack> stacks{test::cloak_stack()};
    for (int i = 0; i < 30; ++i)
        stacks.push_back(test::random_stack(rng, 2, 20.0));
    for (auto const& s : stacks)
    {
        for (int l = 0; l <= 8; ++l)
        {
            auto const two = solve_two_layer(s, l);
            auto const n = solve_n_layer(s, l);
            auto const closed = scattering_coefficient_closed_form(s, l);
            EXPECT_LT(std::abs(two.a_scat - n.a_scat), 1e-10);
            EXPECT_LT(std::abs(two.a_scat - closed), 1e-10);
            auto const sb = shell_coefficients(two);
            auto const nb = shell_coefficients(n);
            EXPECT_LT(std::abs(sb.b - nb.b), 1e-10 * std::max(1.0, std::abs(sb.b)));
            EXPECT_LT(std::abs(sb.c - nb.c), 1e-10 * std::max(1.0, std::abs(sb.c)));
        }
    }
}

TEST(NLayer, DeepEvanescentLayersStayFinite)
{
    for (double v : {-9000.0, 9000.0, 1e5})
    {
        auto const s = test::hidden_layer_stack(10.0, v);
        for (int l = 0; l <= 6; ++l)
        {
            auto const w = solve_n_layer(s, l);
            EXPECT_TRUE(std::isfinite(std::abs(w.a_scat)));
            EXPECT_NEAR(std::abs(1.0 + 2.0 * w.a_scat), 1.0, 1e-9);
        }
    }
}

//---------------------------------------------------------------------------//
TEST(ShellApprox, IdentityShell)
{
    auto const s = test::identity_stack();
    for (int l = 0; l <= 6; ++l)
    {
        for (auto form : {DenominatorForm::direct, DenominatorForm::wronskian})
        {
            auto const c = shell_coefficients_approx(l, s, form);
            EXPECT_LT(std::abs(c.b - 1.0), 1e-12);
            EXPECT_LT(std::abs(c.c), 1e-12);
        }
    }
}

TEST(ShellApprox, StandingWaveAndForms)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial)
    {
        auto const s = test::random_stack(rng, 2, 5.0);
        if (s.layers[0].medium.potential_eV >= s.energy_eV)
            continue;  // standing waves need a propagating shell
        for (int l = 0; l <= 6; ++l)
        {
            auto const d = shell_coefficients_approx(l, s, DenominatorForm::direct);
            auto const w = shell_coefficients_approx(l, s, DenominatorForm::wronskian);
            double const scale = std::max({1.0, std::abs(d.b), std::abs(d.c)});
            EXPECT_LT(std::abs(d.b - w.b), 1e-10 * scale);
            EXPECT_LT(std::abs(d.c - w.c), 1e-10 * scale);
            EXPECT_NEAR(std::abs(w.outgoing_amplitude()),
                        std::abs(w.incoming_amplitude()),
                        1e-12 * scale);
        }
    }
}

TEST(ShellApprox, ZeroShellWavenumber)
{
    auto s = test::cloak_stack();
    s.layers[0].medium.potential_eV = s.energy_eV;
    EXPECT_THROW(shell_coefficients_approx(0, s), DegenerateInputError);
}

TEST(ShellApprox, MatchesExactAtCancellation)
{
    DesignTargets const targets;
    CoreSearch search;
    search.core_mass = SweepAxis::linspace("m_c", 0.01, 2.0, 41);
    search.core_potential = SweepAxis::linspace("V_c", 0.1, 50.0, 41);
    int checked = 0;
    for (double ms : {0.16, 0.165, 0.17, 0.18})
    {
        auto const geometry = test::cloak_stack();
        auto const p = match_core_parameters(geometry, {ms, -2.34}, search, targets, 1);
        if (!(p.objective <= 1e-4))
            continue;
        ++checked;
        auto const s = with_media(geometry, p.shell, p.core);
        for (int l = 0; l <= 1; ++l)
        {
            auto const exact = shell_coefficients(solve_two_layer(s, l));
            auto const approx = shell_coefficients_approx(l, s);
            EXPECT_LT(std::abs(exact.b - approx.b), 5e-4) << ms << " l=" << l;
            EXPECT_LT(std::abs(exact.c - approx.c), 5e-4) << ms << " l=" << l;
        }
    }
    EXPECT_GE(checked, 3);
}

//---------------------------------------------------------------------------//
TEST(CrossSection, ReferenceCloak)
{
    auto const cs = cross_section(test::cloak_stack());
    EXPECT_GE(cs.sigma_normalized, 1e-5);
    EXPECT_LE(cs.sigma_normalized, 1e-3);
    EXPECT_NEAR(cs.sigma_normalized, 9.351851e-4, 1e-9);
    EXPECT_GE(cs.l_max_used, min_truncation_order);

    double sum = 0;
    for (auto const& t : cs.per_l_terms)
    {
        EXPECT_GE(t.sigma_nm2, 0);
        sum += t.sigma_nm2;
    }
    EXPECT_DOUBLE_EQ(sum, cs.sigma);

    // Independent sum from the ODE oracle
    double const k0 = wavenumber(0.01, {0.8, 0}).real();
    double ode_sum = 0;
    for (int l = 0; l <= cs.l_max_used; ++l)
        ode_sum += (2 * l + 1)
                   * std::norm(test::ode_scattering_coefficient(test::cloak_stack(), l));
    EXPECT_NEAR(4 * std::numbers::pi / (k0 * k0) * ode_sum, cs.sigma, 1e-9);
}

TEST(CrossSection, IdentityIsZero)
{
    auto const cs = cross_section(test::identity_stack());
    EXPECT_LT(cs.sigma_normalized, 1e-25);
}

TEST(CrossSection, HiddenLayerStack)
{
    auto const cs = cross_section(test::hidden_layer_stack(0.055, -9000));
    EXPECT_GE(cs.sigma_normalized, 1e-5);
    EXPECT_LE(cs.sigma_normalized, 1e-3);
}

TEST(CrossSection, UnitarityAndOpticalTheorem)
{
    std::mt19937_64 rng(11);
    double worst_unitarity = 0;
    double worst_optical = 0;
    for (int trial = 0; trial < 100; ++trial)
    {
        auto const s = test::random_stack(rng, 1 + trial % 3, trial % 2 ? 5.0 : 50.0);
        auto const cs = cross_section(s);
        worst_unitarity = std::max(worst_unitarity, cs.unitarity_residual());
        worst_optical = std::max(worst_optical, cs.optical_theorem_residual());
    }
    EXPECT_LT(worst_unitarity, 1e-9);
    EXPECT_LT(worst_optical, 1e-8);
}

TEST(CrossSection, FieldOrderCoversRange)
{
    auto const s = test::cloak_stack();
    int const l = field_order(s, 6.0, 4);
    EXPECT_GE(l, 4);
    EXPECT_LE(l, max_order);
}

}  // namespace
}  // namespace qcloak
