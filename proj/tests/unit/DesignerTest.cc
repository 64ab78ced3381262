//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file unit/DesignerTest.cc
//---------------------------------------------------------------------------//
#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "qcloak/Error.hh"
#include "qcloak/designer/Design.hh"
#include "qcloak/designer/Robustness.hh"

#include "TestSupport.hh"

namespace qcloak
{
namespace
{
CoreSearch default_core_search()
{
    CoreSearch search;
    search.core_mass = SweepAxis::linspace("m_c", 0.01, 2.0, 41);
    search.core_potential = SweepAxis::linspace("V_c", 0.1, 50.0, 41);
    return search;
}

DesignRequest reference_request()
{
    DesignRequest req;
    req.geometry = test::cloak_stack();
    req.shell_mass = SweepAxis::linspace("m_s", 0.14, 0.18, 9);
    req.shell_potential = SweepAxis::linspace("V_s", -2.6, -2.1, 11);
    req.core = default_core_search();
    req.threads = 2;
    return req;
}

bool has_reason(std::vector<std::string> const& reasons, char const* code)
{
    return std::find(reasons.begin(), reasons.end(), code) != reasons.end();
}

//---------------------------------------------------------------------------//
TEST(ShellStage, ReferenceShellCell)
{
    auto const report = evaluate_shell_cell(test::cloak_stack(), DesignTargets{});
    ASSERT_TRUE(report.nodal.common_nodal_radius);
    EXPECT_LT(*report.nodal.common_nodal_radius, 1.7);
    // The shell-only flux estimate here is well above 1 - eps
    EXPECT_NEAR(report.flux_fraction, 1.1013, 1e-4);
    EXPECT_EQ(report.reasons,
              std::vector<std::string>{reason::flux_out_of_band});
}

TEST(ShellStage, Preconditions)
{
    ShellStageInput in{test::cloak_stack(), {"m_s", {}}, {"V_s", {-2.0}}};
    EXPECT_THROW(feasible_shell_set(in), DomainError);
    in.shell_mass.values = {0.16};
    in.targets.epsilon = 0.3;
    EXPECT_THROW(feasible_shell_set(in), DomainError);
    in.targets.epsilon = 0.0;
    EXPECT_THROW(feasible_shell_set(in), DomainError);
}

TEST(ShellStage, PositivePotentialsNeverFeasible)
{
    ShellStageInput in{test::cloak_stack(),
                       SweepAxis::linspace("m_s", 0.05, 1.0, 6),
                       SweepAxis::linspace("V_s", 0.1, 5.0, 6)};
    in.targets.shell_flux_tolerance = 0.2;
    auto const grid = feasible_shell_set(in);
    EXPECT_EQ(grid.cells.size(), 36u);
    EXPECT_EQ(grid.count_feasible(), 0u);
    for (auto const& c : grid.cells)
        EXPECT_TRUE(has_reason(c.reasons, reason::potential_sign));
}

TEST(ShellStage, RefinementKeepsFeasibleCells)
{
    ShellStageInput coarse{test::cloak_stack(),
                           SweepAxis::linspace("m_s", 0.14, 0.20, 4),
                           SweepAxis::linspace("V_s", -3.0, -1.5, 4)};
    coarse.targets.shell_flux_tolerance = 0.1;
    auto fine = coarse;
    fine.shell_mass = SweepAxis::linspace("m_s", 0.14, 0.20, 7);
    fine.shell_potential = SweepAxis::linspace("V_s", -3.0, -1.5, 7);

    auto const a = feasible_shell_set(coarse);
    auto const b = feasible_shell_set(fine);
    ASSERT_GT(a.count_feasible(), 0u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (a.at(i, j).feasible)
                EXPECT_TRUE(b.at(2 * i, 2 * j).feasible) << i << ',' << j;
}

//---------------------------------------------------------------------------//
TEST(CoreStage, ReferenceShell)
{
    auto const p = match_core_parameters(test::cloak_stack(), {0.16, -2.34},
                                         default_core_search(), DesignTargets{}, 2);
    // Exact cancellation for the rounded shell lies near (0.393, 18.95)
    EXPECT_LE(p.objective, 1e-4);
    EXPECT_NEAR(p.core.mass_me, 0.3933, 2e-3);
    EXPECT_NEAR(p.core.potential_eV, 18.953, 0.02);
    ASSERT_TRUE(p.nodal_radius);
    EXPECT_LT(*p.nodal_radius, 1.7);
    EXPECT_LT(p.max_tail_term, 1e-4);
    EXPECT_NEAR(p.flux_fraction, 1.0375, 1e-3);
    EXPECT_TRUE(has_reason(p.reasons, reason::flux_out_of_band));
}

TEST(CoreStage, UniformWellRejected)
{
    auto const s = with_media(test::cloak_stack(), {0.16, -2.34}, {0.16, -2.34});
    auto const p = check_design(s, DesignTargets{});
    EXPECT_GT(p.objective, 1e-2);
    EXPECT_FALSE(p.feasible);
    EXPECT_TRUE(has_reason(p.reasons, reason::scattering));
}

TEST(CoreStage, SensitivityToCorePotential)
{
    auto const p = match_core_parameters(test::cloak_stack(), {0.17, -2.34},
                                         default_core_search(), DesignTargets{}, 2);
    ASSERT_LE(p.objective, 1e-4);
    auto const s = with_media(test::cloak_stack(), p.shell,
                              {p.core.mass_me, 1.1 * p.core.potential_eV});
    EXPECT_GT(check_design(s, DesignTargets{}).objective, 100 * p.objective);
}

//---------------------------------------------------------------------------//
TEST(Design, BracketingBoxesStrictBand)
{
    auto const outcome = design_cloak(reference_request());
    EXPECT_FALSE(outcome.design);
    EXPECT_EQ(outcome.dominant_reason(), reason::flux_out_of_band);
}

TEST(Design, BracketingBoxesRelaxedShellStage)
{
    auto req = reference_request();
    req.targets.shell_flux_tolerance = 0.1;
    auto const outcome = design_cloak(req);
    ASSERT_TRUE(outcome.design);
    auto const& d = *outcome.design;
    EXPECT_TRUE(d.feasible);
    EXPECT_LE(d.objective, 1e-4);
    EXPECT_LE(std::fabs(d.flux_fraction - 0.95), 0.01);
    ASSERT_TRUE(d.nodal_radius);
    EXPECT_LT(*d.nodal_radius, 1.7);
    EXPECT_LT(d.max_tail_term, 1e-4);
    EXPECT_EQ(outcome.attempts.back().shell, d.shell);
}

TEST(Design, NoWellFailsOnNodes)
{
    DesignRequest req;
    req.geometry = test::cloak_stack();
    req.shell_mass = SweepAxis::linspace("m_s", 0.1, 0.5, 5);
    req.shell_potential = SweepAxis::linspace("V_s", 0.5, 5.0, 5);
    req.core = default_core_search();
    auto const outcome = design_cloak(req);
    EXPECT_FALSE(outcome.design);
    EXPECT_TRUE(outcome.attempts.empty());
    EXPECT_EQ(outcome.dominant_reason(), reason::no_common_node);
}

TEST(Design, Deterministic)
{
    auto req = reference_request();
    req.targets.shell_flux_tolerance = 0.1;
    auto const a = design_outcome_to_json(design_cloak(req)).dump();
    req.threads = 1;
    auto const b = design_outcome_to_json(design_cloak(req)).dump();
    EXPECT_EQ(a, b);
}

//---------------------------------------------------------------------------//
TEST(Robustness, HiddenLayerSweep)
{
    RobustnessInput in{test::hidden_layer_stack(0.055, -9000),
                       {"m_h", {0.1, 1.0, 10.0}},
                       {"V_h", {-9000.0, 0.0, 9000.0}}};
    auto const grid = robustness_sweep(in);
    ASSERT_EQ(grid.cells.size(), 9u);
    for (auto const& c : grid.cells)
    {
        EXPECT_TRUE(c.error.empty()) << c.error;
        EXPECT_GE(c.objective, 1e-5);
        EXPECT_LE(c.objective, 1e-3);
    }
    EXPECT_LT(relative_spread(grid), 0.01);
}

TEST(Robustness, ThinSecondaryLayerIsSensitive)
{
    auto spread_for = [](double a_h) {
        auto s = test::hidden_layer_stack(0.055, -9000);
        s.layers.back().outer_radius_nm = a_h;
        return relative_spread(robustness_sweep(
            {s, {"m_h", {0.1, 1.0, 10.0}}, {"V_h", {-100.0, 0.0, 100.0}}}));
    };
    EXPECT_GT(spread_for(1.65), 10 * spread_for(1.0));
}

TEST(Robustness, CellErrorsAreRecorded)
{
    RobustnessInput in{test::hidden_layer_stack(0.055, -9000),
                       {"m_h", {0.0, 1.0}},
                       {"V_h", {0.0}}};
    auto const grid = robustness_sweep(in);
    EXPECT_FALSE(grid.cells[0].error.empty());
    EXPECT_TRUE(grid.cells[1].error.empty());
    EXPECT_TRUE(std::isfinite(relative_spread(grid)));
}

TEST(SweepGrid, Export)
{
    RobustnessInput in{test::hidden_layer_stack(0.055, -9000),
                       {"m_h", {0.1, 1.0}},
                       {"V_h", {0.0, 5.0, 10.0}},
                       1,
                       "0123456789abcdef"};
    auto const grid = robustness_sweep(in);
    std::ostringstream os;
    write_sweep_csv(grid, os);
    auto const text = os.str();
    EXPECT_EQ(text.rfind("# config_hash=0123456789abcdef\n", 0), 0u);
    EXPECT_NE(text.find("m_h,V_h,sigma_normalized"), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 8);
    auto const doc = sweep_to_json(grid);
    EXPECT_EQ(doc["cells"].size(), 6u);
    EXPECT_EQ(doc["provenance"], "0123456789abcdef");
    EXPECT_EQ(doc["cells"][5]["objective"].get<double>(), grid.cells[5].objective);
}

}  // namespace
}  // namespace qcloak
