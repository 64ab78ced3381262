//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file model/LayerStack.cc
//---------------------------------------------------------------------------//
#include "qcloak/model/LayerStack.hh"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "qcloak/Error.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
double LayerStack::region_outer_radius(int region) const
{
    if (region == 0)
        return std::numeric_limits<double>::infinity();
    return layers[region - 1].outer_radius_nm;
}

double LayerStack::region_inner_radius(int region) const
{
    if (region == 0)
        return this->particle_radius();
    if (region == static_cast<int>(layers.size()))
        return 0.0;
    return layers[region].outer_radius_nm;
}

int LayerStack::region_of(double r) const
{
    int region = 0;
    for (auto const& layer : layers)
    {
        if (r >= layer.outer_radius_nm)
            break;
        ++region;
    }
    return region;
}

//---------------------------------------------------------------------------//
/*!
 * Wavenumber sqrt(m (E - V) / C) with the branch Im k >= 0.
 *
 * Above the potential the result is real and positive; below it is purely
 * imaginary with positive imaginary part, so the outgoing Hankel function
 * decays. E == V gives exactly zero.
 */
wavenumber_type wavenumber(double energy_eV, Medium const& medium)
{
    double const k2 = medium.mass_me * (energy_eV - medium.potential_eV)
                      / hbar2_over_2me;
    if (k2 >= 0)
        return {std::sqrt(k2), 0.0};
    return {0.0, std::sqrt(-k2)};
}

std::vector<wavenumber_type> region_wavenumbers(LayerStack const& stack)
{
    std::vector<wavenumber_type> k;
    k.reserve(stack.num_regions());
    for (int region = 0; region < stack.num_regions(); ++region)
    {
        k.push_back(wavenumber(stack.energy_eV, stack.region_medium(region)));
    }
    return k;
}

//---------------------------------------------------------------------------//
std::vector<Violation> validate(LayerStack const& stack)
{
    std::vector<Violation> result;
    auto check_medium = [&result](Medium const& m, std::string const& where) {
        if (!std::isfinite(m.mass_me) || !std::isfinite(m.potential_eV))
            result.push_back({where, "values must be finite"});
        else if (!(m.mass_me > 0))
            result.push_back({where + ".mass_me", "mass must be positive"});
    };

    check_medium(stack.background, "background");
    if (stack.background.potential_eV != 0)
    {
        result.push_back({"background.potential_eV",
                          "background potential must be zero"});
    }
    if (!std::isfinite(stack.energy_eV))
    {
        result.push_back({"energy_eV", "values must be finite"});
    }
    else if (!(stack.energy_eV > stack.background.potential_eV))
    {
        result.push_back(
            {"energy_eV", "energy must exceed background potential"});
    }
    if (stack.layers.empty())
    {
        result.push_back({"layers", "at least one layer required"});
    }

    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < stack.layers.size(); ++i)
    {
        auto const& layer = stack.layers[i];
        std::string const where = fmt::format("layers[{}]", i);
        check_medium(layer.medium, where);
        double const r = layer.outer_radius_nm;
        if (!std::isfinite(r) || !(r > 0))
        {
            result.push_back(
                {where + ".outer_radius_nm", "radius must be positive"});
        }
        else if (!(r < previous))
        {
            result.push_back(
                {where + ".outer_radius_nm", "radii not decreasing"});
        }
        if (std::isfinite(r))
            previous = r;
    }
    return result;
}

void require_valid(LayerStack const& stack)
{
    auto const violations = validate(stack);
    if (violations.empty())
        return;
    std::string msg = "invalid layer stack:";
    for (auto const& v : violations)
    {
        msg += fmt::format(" [{}: {}]", v.field, v.rule);
    }
    throw ConfigError(msg);
}

//---------------------------------------------------------------------------//
std::vector<WavenumberProduct> wavenumber_products(LayerStack const& stack)
{
    std::vector<WavenumberProduct> out;
    double const a = stack.particle_radius();
    for (int region = 0; region < stack.num_regions(); ++region)
    {
        WavenumberProduct p;
        p.region = region;
        p.k = wavenumber(stack.energy_eV, stack.region_medium(region));
        double const outer = region == 0 ? a
                                         : stack.region_outer_radius(region);
        p.k_times_outer_radius = std::abs(p.k) * outer;
        p.k_times_particle_radius = std::abs(p.k) * a;
        out.push_back(p);
    }
    return out;
}

//---------------------------------------------------------------------------//
ReducedStack reduce(LayerStack const& stack)
{
    ReducedStack out;
    out.energy_eV = stack.energy_eV;
    out.background_potential_eV = stack.background.potential_eV;
    auto const k = region_wavenumbers(stack);
    for (std::size_t i = 0; i < stack.layers.size(); ++i)
    {
        double const r = stack.layers[i].outer_radius_nm;
        Medium const& outer = stack.region_medium(static_cast<int>(i));
        Medium const& inner = stack.layers[i].medium;
        out.interfaces.push_back(
            {r, k[i] * r, outer.mass_me * r, k[i + 1] * r, inner.mass_me * r});
    }
    return out;
}

namespace
{
Medium restore_medium(double energy, std::complex<double> x, double y, double r)
{
    double const mass = y / r;
    std::complex<double> const k = x / r;
    double const k2 = (k * k).real();
    return {mass, energy - hbar2_over_2me * k2 / mass};
}
}  // namespace

LayerStack restore(ReducedStack const& reduced)
{
    LayerStack out;
    out.energy_eV = reduced.energy_eV;
    if (reduced.interfaces.empty())
        return out;
    auto const& first = reduced.interfaces.front();
    out.background = restore_medium(
        reduced.energy_eV, first.x_outer, first.y_outer, first.radius);
    out.background.potential_eV = reduced.background_potential_eV;
    for (auto const& iface : reduced.interfaces)
    {
        out.layers.push_back({restore_medium(reduced.energy_eV,
                                             iface.x_inner,
                                             iface.y_inner,
                                             iface.radius),
                              iface.radius});
    }
    return out;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
