//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file solver/NLayer.cc
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "RadialBasis.hh"
#include "qcloak/solver/PartialWave.hh"

namespace qcloak
{
namespace
{
//---------------------------------------------------------------------------//
/*!
 * Radial state (R, (1/m) dR/dr) at an interface, times exp(log_scale).
 *
 * Both quantities are continuous across every interface.
 */
struct RadialState
{
    complex_type value{};
    complex_type flux{};
    double log_scale{0};

    void normalize()
    {
        double const n = std::max(std::abs(value), std::abs(flux));
        if (n > 0 && std::isfinite(n))
        {
            value /= n;
            flux /= n;
            log_scale += std::log(n);
        }
    }
};

//! exp(e) * m with e possibly very negative
complex_type weighted(complex_type m, double e)
{
    if (m == complex_type{} || e < -745.0)
        return {};
    return m * std::exp(e);
}

//---------------------------------------------------------------------------//
/*!
 * Expand a state in the (j, h) basis of a homogeneous region at radius r.
 *
 * The 2x2 basis matrix has the analytic determinant
 * (k/m) (j h' - j' h) = (k/m) i / (k r)^2, so no pivoting is needed.
 */
RegionCoefficients expand(RadialState const& s,
                          detail::RadialBasis const& basis,
                          complex_type k,
                          complex_type kappa,
                          double r)
{
    complex_type const x = k * r;
    complex_type const det = kappa * complex_type{0, 1} / (x * x);
    RegionCoefficients c;
    c.regular = {(kappa * basis.dh * s.value - basis.h * s.flux) / det,
                 basis.h_scale + s.log_scale};
    c.outgoing = {(-kappa * basis.dj * s.value + basis.j * s.flux) / det,
                  basis.j_scale + s.log_scale};
    return c;
}

//! Evaluate coefficients c in the basis at the given radius
RadialState evaluate(RegionCoefficients const& c,
                     detail::RadialBasis const& basis,
                     complex_type kappa)
{
    double const e1 = c.regular.mantissa == complex_type{}
                          ? -std::numeric_limits<double>::infinity()
                          : c.regular.log_scale + basis.j_scale;
    double const e2 = c.outgoing.mantissa == complex_type{}
                          ? -std::numeric_limits<double>::infinity()
                          : c.outgoing.log_scale + basis.h_scale;
    double const top = std::max(e1, e2);
    complex_type const p = weighted(c.regular.mantissa, e1 - top);
    complex_type const q = weighted(c.outgoing.mantissa, e2 - top);
    RadialState s;
    s.value = p * basis.j + q * basis.h;
    s.flux = kappa * (p * basis.dj + q * basis.dh);
    s.log_scale = top;
    s.normalize();
    return s;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Propagate the regular solution from the origin outward.
 *
 * The innermost region starts with d_l = 1. At each interface the continuous
 * state is re-expanded in the next region's basis; all exponents are carried
 * separately so that layers with |E - V| of thousands of eV neither overflow
 * nor lose the subdominant component where it still matters. At r = a the
 * state is expanded in (j, h) of the background and every coefficient is
 * divided by the incident amplitude.
 */
PartialWaveSolution solve_n_layer(LayerStack const& stack, int l)
{
    require_valid(stack);
    int const n = static_cast<int>(stack.layers.size());
    auto const k = region_wavenumbers(stack);
    for (auto const& ki : k)
        detail::require_nonzero(ki, "layer stack");

    auto kappa = [&](int region) {
        return k[region] / stack.region_medium(region).mass_me;
    };

    std::vector<RegionCoefficients> coeffs(n);
    // innermost region n
    coeffs[n - 1].regular = {1.0, 0.0};
    coeffs[n - 1].outgoing = {};
    double r = stack.layers[n - 1].outer_radius_nm;
    RadialState state
        = evaluate(coeffs[n - 1], detail::radial_basis(l, k[n], r), kappa(n));

    for (int region = n - 1; region >= 1; --region)
    {
        // expand at the inner radius r of this region, evaluate at its outer
        auto const inner
            = detail::radial_basis(l, k[region], r);
        coeffs[region - 1] = expand(state, inner, k[region], kappa(region), r);
        r = stack.layers[region - 1].outer_radius_nm;
        state = evaluate(coeffs[region - 1],
                         detail::radial_basis(l, k[region], r),
                         kappa(region));
    }

    // background at r = a
    auto const outside = detail::radial_basis(l, k[0], r);
    RegionCoefficients const bg = expand(state, outside, k[0], kappa(0), r);
    if (bg.regular.mantissa == complex_type{})
    {
        throw NumericalDegeneracyError(
            fmt::format("incident amplitude vanished for l={}", l),
            std::numeric_limits<double>::infinity());
    }

    PartialWaveSolution sol;
    sol.l = l;
    sol.a_scat = bg.outgoing.mantissa / bg.regular.mantissa
                 * std::exp(bg.outgoing.log_scale - bg.regular.log_scale);

    auto normalize = [&bg](ScaledComplex c) {
        if (c.mantissa == complex_type{})
            return c;
        return ScaledComplex{c.mantissa / bg.regular.mantissa,
                             c.log_scale - bg.regular.log_scale};
    };
    for (auto& c : coeffs)
    {
        c.regular = normalize(c.regular);
        c.outgoing = normalize(c.outgoing);
    }
    sol.layer_coeffs = std::move(coeffs);
    return sol;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
