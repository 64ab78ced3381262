//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file designer/CoreStage.cc
//---------------------------------------------------------------------------//
#include "qcloak/designer/CoreStage.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qcloak/Error.hh"
#include "qcloak/fields/FluxIntegrals.hh"
#include "qcloak/solver/CrossSection.hh"
#include "qcloak/util/Parallel.hh"

#include "NelderMead.hh"

namespace qcloak
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

double low_order_scattering(LayerStack const& stack)
{
    try
    {
        return std::max(std::abs(solve_two_layer(stack, 0).a_scat),
                        std::abs(solve_two_layer(stack, 1).a_scat));
    }
    catch (Error const&)
    {
        return inf;
    }
}

detail::Box2 bounding_box(CoreSearch const& search)
{
    auto [m_lo, m_hi] = std::minmax_element(search.core_mass.values.begin(),
                                            search.core_mass.values.end());
    auto [v_lo, v_hi] = std::minmax_element(
        search.core_potential.values.begin(), search.core_potential.values.end());
    return {{*m_lo, *v_lo}, {*m_hi, *v_hi}};
}
}  // namespace

//---------------------------------------------------------------------------//
DesignPoint check_design(LayerStack const& stack, DesignTargets const& targets)
{
    DesignPoint point;
    point.shell = stack.layers.at(0).medium;
    point.core = stack.layers.at(1).medium;
    try
    {
        auto const cs = cross_section(stack);
        point.sigma_normalized = cs.sigma_normalized;
        for (auto const& wave : cs.waves)
        {
            double const a = std::abs(wave.a_scat);
            point.abs_a.push_back(a);
            if (wave.l >= 2)
                point.max_tail_term
                    = std::max(point.max_tail_term, (2 * wave.l + 1) * a * a);
        }
        point.objective = cs.max_abs_a(0, 1);
        if (!(point.objective <= targets.scattering_tolerance))
            point.reasons.emplace_back(reason::scattering);

        std::vector<ShellCoefficients> shells;
        for (int l = 0; l < targets.shell_channels; ++l)
            shells.push_back(shell_coefficients(solve_partial_wave(stack, l)));
        auto const nodal
            = find_nodal_point(stack, shells, targets.common_node_fraction);
        point.nodal_radius = nodal.common_nodal_radius;
        if (!point.nodal_radius)
            point.reasons.emplace_back(reason::no_common_node);
        else if (!(*point.nodal_radius < stack.layers[1].outer_radius_nm))
            point.reasons.emplace_back(reason::node_outside_core);

        int const lmax
            = field_order(stack, stack.particle_radius(), cs.l_max_used);
        FieldEvaluator const field(solve_partial_waves(stack, lmax));
        point.flux_fraction = flux_through_shell_annulus(field);
        if (!(std::fabs(point.flux_fraction - (1 - targets.epsilon))
              <= targets.flux_tolerance))
            point.reasons.emplace_back(reason::flux_out_of_band);
    }
    catch (Error const&)
    {
        point.reasons.emplace_back(reason::solver_error);
    }
    point.feasible = point.reasons.empty();
    return point;
}

//---------------------------------------------------------------------------//
DesignPoint match_core_parameters(LayerStack const& geometry,
                                  Medium const& shell,
                                  CoreSearch const& search,
                                  DesignTargets const& targets,
                                  unsigned threads)
{
    targets.validate();
    auto const& masses = search.core_mass.values;
    auto const& potentials = search.core_potential.values;
    if (masses.empty() || potentials.empty())
        throw DomainError("core search grid is empty");

    auto objective = [&](detail::Point2 const& p) {
        return low_order_scattering(
            with_media(geometry, shell, Medium{p[0], p[1]}));
    };

    std::size_t const n1 = potentials.size();
    std::vector<double> coarse(masses.size() * n1);
    parallel_for(coarse.size(), threads, [&](std::size_t i) {
        coarse[i] = objective({masses[i / n1], potentials[i % n1]});
    });

    std::vector<std::size_t> order(coarse.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return coarse[a] < coarse[b];
    });
    std::size_t const starts = std::min<std::size_t>(
        order.size(), std::max(1, search.refine_starts));

    auto const box = bounding_box(search);
    detail::Point2 const step{
        masses.size() > 1 ? (box.hi[0] - box.lo[0]) / (masses.size() - 1)
                          : 0.01 * std::max(1.0, std::fabs(box.lo[0])),
        n1 > 1 ? (box.hi[1] - box.lo[1]) / (n1 - 1)
               : 0.01 * std::max(1.0, std::fabs(box.lo[1]))};

    std::vector<detail::MinimizeResult> refined(starts);
    parallel_for(starts, threads, [&](std::size_t s) {
        std::size_t const i = order[s];
        refined[s] = detail::nelder_mead(objective,
                                         {masses[i / n1], potentials[i % n1]},
                                         step,
                                         box,
                                         search.parameter_tolerance,
                                         search.max_iterations);
    });
    auto const best = std::min_element(
        refined.begin(), refined.end(),
        [](auto const& a, auto const& b) { return a.value < b.value; });

    return check_design(
        with_media(geometry, shell, Medium{best->x[0], best->x[1]}), targets);
}

//---------------------------------------------------------------------------//
nlohmann::json design_point_to_json(DesignPoint const& point)
{
    nlohmann::json doc{
        {"shell", {{"mass_me", point.shell.mass_me},
                   {"potential_eV", point.shell.potential_eV}}},
        {"core", {{"mass_me", point.core.mass_me},
                  {"potential_eV", point.core.potential_eV}}},
        {"max_abs_a01", point.objective},
        {"abs_a", point.abs_a},
        {"max_tail_term", point.max_tail_term},
        {"flux_fraction", point.flux_fraction},
        {"sigma_normalized", point.sigma_normalized},
        {"feasible", point.feasible},
        {"reasons", point.reasons},
    };
    doc["nodal_radius_nm"] = point.nodal_radius
                                 ? nlohmann::json(*point.nodal_radius)
                                 : nlohmann::json(nullptr);
    return doc;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
