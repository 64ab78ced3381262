//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields/FluxIntegrals.cc
//---------------------------------------------------------------------------//
#include "qcloak/fields/FluxIntegrals.hh"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "qcloak/Error.hh"

namespace qcloak
{
namespace
{
//---------------------------------------------------------------------------//
template<class F>
double integrate(F&& f, double lo, double hi, double tolerance, char const* what)
{
    using boost::math::quadrature::gauss_kronrod;
    double error = 0;
    double l1 = 0;
    double const value = gauss_kronrod<double, 31>::integrate(
        f, lo, hi, 20, tolerance, &error, &l1);
    if (error > tolerance * std::max(l1, 1e-300) && error > 1e-15)
    {
        throw QuadratureError(
            fmt::format("{} quadrature reached only {:.3e} (target {:.1e})",
                        what,
                        error / std::max(l1, 1e-300),
                        tolerance),
            error);
    }
    return value;
}

//! Interface radii strictly inside (lo, hi), ascending, with the end points
std::vector<double> breakpoints(LayerStack const& stack, double lo, double hi)
{
    std::vector<double> pts{lo};
    for (auto it = stack.layers.rbegin(); it != stack.layers.rend(); ++it)
    {
        if (it->outer_radius_nm > lo && it->outer_radius_nm < hi)
            pts.push_back(it->outer_radius_nm);
    }
    pts.push_back(hi);
    return pts;
}

double geometric_area(LayerStack const& stack)
{
    double const a = stack.particle_radius();
    return std::numbers::pi * a * a;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
double flux_through_disk(FieldEvaluator const& field,
                         double r_lo,
                         double r_hi,
                         double tolerance)
{
    if (!(r_lo >= 0 && r_hi >= r_lo))
        throw DomainError("invalid disk radii");
    constexpr double equator = std::numbers::pi / 2;
    auto const pts = breakpoints(field.stack(), r_lo, r_hi);
    double total = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    {
        // open rule: the end points (interfaces) are never sampled
        total += integrate(
            [&field](double r) { return field.flux_z(r, equator) * r; },
            pts[i],
            pts[i + 1],
            tolerance,
            "disk flux");
    }
    return 2 * std::numbers::pi * total / geometric_area(field.stack());
}

double flux_through_shell_annulus(FieldEvaluator const& field, double tolerance)
{
    auto const& stack = field.stack();
    if (stack.layers.size() < 2)
        throw DomainError("shell annulus needs at least two layers");
    return flux_through_disk(field,
                             stack.layers[1].outer_radius_nm,
                             stack.layers[0].outer_radius_nm,
                             tolerance);
}

double flux_through_hemisphere(FieldEvaluator const& field,
                               double radius,
                               bool upper,
                               double tolerance)
{
    if (!(radius > 0))
        throw DomainError("hemisphere radius must be positive");
    constexpr double half = std::numbers::pi / 2;
    double const lo = upper ? 0.0 : half;
    double const hi = upper ? half : std::numbers::pi;
    double const value = integrate(
        [&](double theta) {
            return field.flux(radius, theta).radial * std::sin(theta);
        },
        lo,
        hi,
        tolerance,
        "hemisphere flux");
    return 2 * std::numbers::pi * radius * radius * value
           / geometric_area(field.stack());
}

double
net_flux_through_sphere(FieldEvaluator const& field, double radius, double tolerance)
{
    return flux_through_hemisphere(field, radius, true, tolerance)
           + flux_through_hemisphere(field, radius, false, tolerance);
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
