//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/specfun/SphericalBessel.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace qcloak
{
using complex_type = std::complex<double>;

//---------------------------------------------------------------------------//
//! Hard cap on angular momentum order throughout the library.
inline constexpr int max_order = 64;

//! Above this |Im z| the spherical functions are returned exponentially scaled.
inline constexpr double scaling_threshold = 30.0;

//---------------------------------------------------------------------------//
/*!
 * A spherical Bessel/Hankel function value and its derivative.
 *
 * The true values are \c value*exp(log_scale) and
 * \c derivative*exp(log_scale). For moderate arguments \c log_scale is zero;
 * for strongly evanescent arguments it absorbs the \f$e^{|\mathrm{Im}\,z|}\f$
 * growth (or decay) so neither field overflows.
 */
struct SphericalBasisEval
{
    int order{0};
    complex_type argument{};
    complex_type value{};
    complex_type derivative{};
    double log_scale{0};

    complex_type unscaled_value() const
    {
        return value * std::exp(log_scale);
    }
    complex_type unscaled_derivative() const
    {
        return derivative * std::exp(log_scale);
    }
};

//---------------------------------------------------------------------------//
// Regular function j_l(z) for l = 0..lmax (downward Miller recurrence)
std::vector<SphericalBasisEval> sph_bessel_j_all(int lmax, complex_type z);

// Outgoing Hankel function h_l^(1)(z) for l = 0..lmax (upward recurrence)
std::vector<SphericalBasisEval> sph_hankel1_all(int lmax, complex_type z);

// Incoming Hankel function h_l^(2)(z) = 2 j_l(z) - h_l^(1)(z)
std::vector<SphericalBasisEval> sph_hankel2_all(int lmax, complex_type z);

// Single-order conveniences
SphericalBasisEval sph_bessel_j(int l, complex_type z);
SphericalBasisEval sph_hankel1(int l, complex_type z);
SphericalBasisEval sph_hankel2(int l, complex_type z);

//---------------------------------------------------------------------------//
}  // namespace qcloak
