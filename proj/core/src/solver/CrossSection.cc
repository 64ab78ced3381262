//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file solver/CrossSection.cc
//---------------------------------------------------------------------------//
#include "qcloak/solver/CrossSection.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "qcloak/Error.hh"
#include "qcloak/specfun/SphericalBessel.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
double CrossSectionResult::max_abs_a(int lmin, int lmax) const
{
    double result = 0;
    for (auto const& w : waves)
    {
        if (w.l >= lmin && w.l <= lmax)
            result = std::max(result, std::abs(w.a_scat));
    }
    return result;
}

double CrossSectionResult::unitarity_residual() const
{
    double result = 0;
    for (auto const& w : waves)
        result = std::max(result, std::abs(std::abs(1.0 + 2.0 * w.a_scat) - 1.0));
    return result;
}

double CrossSectionResult::optical_theorem_residual() const
{
    double quadratic = 0;
    double linear = 0;
    double magnitude = 0;
    for (auto const& w : waves)
    {
        double const g = 2 * w.l + 1;
        quadratic += g * std::norm(w.a_scat);
        linear += g * w.a_scat.real();
        magnitude += g * std::abs(w.a_scat);
    }
    double const diff = std::abs(quadratic + linear);
    // Below the rounding level of the linear sum, compare against that sum
    double const floor = std::numeric_limits<double>::epsilon() * magnitude;
    if (quadratic > floor)
        return diff / quadratic;
    return magnitude > 0 ? diff / magnitude : 0.0;
}

//---------------------------------------------------------------------------//
/*!
 * sigma = 4 pi / k0^2 sum_l (2l+1) |a_l|^2.
 *
 * Orders are added until (2l+1)|a_l|^2 < 1e-5 for two consecutive l, with
 * l = 0..4 always included.
 */
CrossSectionResult cross_section(LayerStack const& stack)
{
    require_valid(stack);
    double const k0 = wavenumber(stack.energy_eV, stack.background).real();
    double const prefactor = 4 * std::numbers::pi / (k0 * k0);

    CrossSectionResult result;
    int below = 0;
    for (int l = 0;; ++l)
    {
        if (l > max_order)
        {
            throw TruncationError(fmt::format(
                "partial-wave series not converged by l = {}", max_order));
        }
        auto wave = solve_partial_wave(stack, l);
        double const weight = (2 * l + 1) * std::norm(wave.a_scat);
        result.per_l_terms.push_back({l, prefactor * weight});
        result.sigma += prefactor * weight;
        result.waves.push_back(std::move(wave));
        result.l_max_used = l;

        below = weight < truncation_threshold ? below + 1 : 0;
        if (l >= min_truncation_order && below >= 2)
            break;
    }
    double const a = stack.particle_radius();
    result.sigma_normalized = result.sigma / (std::numbers::pi * a * a);
    return result;
}

//---------------------------------------------------------------------------//
ScatteringSolution solve_partial_waves(LayerStack const& stack, int lmax)
{
    if (lmax < 0 || lmax > max_order)
        throw DomainError(fmt::format("lmax {} outside [0, {}]", lmax, max_order));
    require_valid(stack);
    ScatteringSolution sol;
    sol.stack = stack;
    sol.k = region_wavenumbers(stack);
    for (int l = 0; l <= lmax; ++l)
        sol.waves.push_back(solve_partial_wave(stack, l));
    return sol;
}

//---------------------------------------------------------------------------//
/*!
 * Smallest order such that the incident partial waves are below 1e-12 at
 * r_max, plus a margin of four orders, and not below l_min.
 */
int field_order(LayerStack const& stack, double r_max, int l_min)
{
    double const k0 = wavenumber(stack.energy_eV, stack.background).real();
    double const x = k0 * std::max(r_max, stack.particle_radius());
    int const probe = std::min(max_order, static_cast<int>(x) + 40);
    auto const j = sph_bessel_j_all(probe, x);
    int needed = probe;
    for (int l = static_cast<int>(x); l <= probe; ++l)
    {
        if ((2 * l + 1) * std::abs(j[l].unscaled_value()) < 1e-12)
        {
            needed = l;
            break;
        }
    }
    return std::min(max_order, std::max(l_min, needed + 4));
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
