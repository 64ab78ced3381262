//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields/Nodal.cc
//---------------------------------------------------------------------------//
#include "qcloak/fields/Nodal.hh"

#include <cmath>
#include <limits>

#include "qcloak/Error.hh"
#include "qcloak/specfun/Legendre.hh"
#include "qcloak/specfun/SphericalBessel.hh"

namespace qcloak
{
namespace
{
constexpr int scan_points = 400;
constexpr double window_start = 0.2;

//---------------------------------------------------------------------------//
/*!
 * Phase that makes b j + c h real for real arguments.
 *
 * b j + c h = (b/2 + c) h1 + (b/2) h2 with |b/2 + c| = |b/2|, so rotating by
 * the mean of the two phases leaves 2 |b/2| Re(e^{i delta} h1).
 */
double standing_wave_phase(ShellCoefficients const& s)
{
    auto const out = s.outgoing_amplitude();
    auto const in = s.incoming_amplitude();
    if (std::abs(in) == 0)
        return std::arg(out);
    if (std::abs(out) == 0)
        return std::arg(in);
    return 0.5 * (std::arg(out) + std::arg(in));
}

std::optional<double> first_inward_zero(int l,
                                        LayerStack const& stack,
                                        ShellCoefficients const& s,
                                        double r_hi)
{
    if (s.b == std::complex<double>{} && s.c == std::complex<double>{})
        return std::nullopt;
    std::complex<double> const rot = std::polar(1.0, -standing_wave_phase(s));
    auto f = [&](double r) {
        return (rot * shell_radial_function(l, stack, s, r)).real();
    };

    double const r_lo = window_start * r_hi;
    double const dr = (r_hi - r_lo) / scan_points;
    double upper = r_hi;
    double f_upper = f(upper);
    if (f_upper == 0)
        return upper;
    for (int i = 1; i <= scan_points; ++i)
    {
        double lower = r_hi - i * dr;
        if (i == scan_points)
            lower = r_lo * (1 + 1e-12);
        double const f_lower = f(lower);
        if (f_lower == 0)
            return lower;
        if ((f_lower < 0) != (f_upper < 0))
        {
            double lo = lower;
            double hi = upper;
            double f_lo = f_lower;
            for (int it = 0; it < 200 && hi - lo > 1e-13; ++it)
            {
                double const mid = 0.5 * (lo + hi);
                double const f_mid = f(mid);
                if ((f_mid < 0) == (f_lo < 0))
                {
                    lo = mid;
                    f_lo = f_mid;
                }
                else
                {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        upper = lower;
        f_upper = f_lower;
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::complex<double> shell_radial_function(int l,
                                           LayerStack const& stack,
                                           ShellCoefficients const& shell,
                                           double r)
{
    if (stack.layers.empty())
        throw DomainError("channel function needs a shell layer");
    if (!(r > 0))
        throw DomainError("channel function needs r > 0");
    auto const ks = wavenumber(stack.energy_eV, stack.layers.front().medium);
    auto const j = sph_bessel_j(l, ks * r);
    auto const h = sph_hankel1(l, ks * r);
    return shell.b * j.unscaled_value() + shell.c * h.unscaled_value();
}

std::complex<double> channel_function(int l,
                                      LayerStack const& stack,
                                      ShellCoefficients const& shell,
                                      double r,
                                      double theta)
{
    std::complex<double> il{1, 0};
    for (int i = 0; i < l % 4; ++i)
        il *= std::complex<double>{0, 1};
    return il * static_cast<double>(2 * l + 1)
           * shell_radial_function(l, stack, shell, r)
           * legendre_p(l, std::cos(theta));
}

//---------------------------------------------------------------------------//
NodalReport find_nodal_point(LayerStack const& stack,
                             std::span<ShellCoefficients const> shell,
                             double common_fraction)
{
    if (stack.layers.size() < 2)
        throw DomainError("nodal search needs a shell and a core");
    if (shell.size() < 2)
        throw DomainError("nodal search needs shell coefficients for l = 0, 1");

    double const ac = stack.layers[1].outer_radius_nm;
    NodalReport report;
    report.tolerance = common_fraction * ac;
    for (std::size_t l = 0; l < shell.size(); ++l)
    {
        report.r_n.push_back(
            first_inward_zero(static_cast<int>(l), stack, shell[l], ac));
    }
    if (report.r_n[0] && report.r_n[1])
    {
        report.residual_spread = std::abs(*report.r_n[0] - *report.r_n[1]);
        if (report.residual_spread <= report.tolerance)
        {
            report.common_nodal_radius
                = 0.5 * (*report.r_n[0] + *report.r_n[1]);
        }
    }
    else
    {
        report.residual_spread = std::numeric_limits<double>::infinity();
    }
    return report;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
