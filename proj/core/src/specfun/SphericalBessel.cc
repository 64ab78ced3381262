//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file specfun/SphericalBessel.cc
//---------------------------------------------------------------------------//
#include "qcloak/specfun/SphericalBessel.hh"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcloak/Error.hh"

namespace qcloak
{
namespace
{
//---------------------------------------------------------------------------//
constexpr complex_type imag_unit{0, 1};

void check_order(int lmax)
{
    if (lmax < 0 || lmax > 4 * max_order)
    {
        throw DomainError("spherical function order out of range: "
                          + std::to_string(lmax));
    }
}

//! Exponent absorbed into the regular function for argument z
double regular_scale(complex_type z)
{
    double const im = std::abs(z.imag());
    return im > scaling_threshold ? im : 0.0;
}

//! Exponent absorbed into h^(1) for argument z
double outgoing_scale(complex_type z)
{
    return std::abs(z.imag()) > scaling_threshold ? -z.imag() : 0.0;
}

//! sin(z) * exp(-s) without intermediate overflow when s >= |Im z|
complex_type scaled_sin(complex_type z, double s)
{
    return (std::exp(imag_unit * z - s) - std::exp(-imag_unit * z - s))
           / (2.0 * imag_unit);
}

complex_type scaled_cos(complex_type z, double s)
{
    return (std::exp(imag_unit * z - s) + std::exp(-imag_unit * z - s)) / 2.0;
}

//---------------------------------------------------------------------------//
/*!
 * Ascending series for |z| <= 1, orders 0..nmax.
 *
 * Every term has the same sign pattern and |z|^2 is small, so there is no
 * cancellation and no scaling is required.
 */
std::vector<complex_type> regular_series(int nmax, complex_type z)
{
    std::vector<complex_type> out(nmax + 1);
    complex_type const mz2half = -z * z / 2.0;
    complex_type prefactor = 1.0;  // z^l / (2l+1)!!
    for (int l = 0; l <= nmax; ++l)
    {
        if (l > 0)
        {
            prefactor *= z / static_cast<double>(2 * l + 1);
        }
        complex_type sum = 1.0;
        complex_type term = 1.0;
        for (int k = 1; k < 60; ++k)
        {
            term *= mz2half / (static_cast<double>(k) * (2 * l + 2 * k + 1));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum))
                break;
        }
        out[l] = prefactor * sum;
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Miller downward recurrence for orders 0..nmax, normalized to the closed
 * form of j_0 or j_1 (whichever is larger), scaled by exp(-s).
 */
std::vector<complex_type> regular_miller(int nmax, complex_type z, double s)
{
    double const az = std::abs(z);
    int const m = std::max(nmax, static_cast<int>(std::ceil(az)));
    int const start = m + static_cast<int>(std::sqrt(160.0 * m)) + 12;

    std::vector<complex_type> f(nmax + 2);
    complex_type above = 0.0;  // f_{l+1}
    complex_type cur = 1e-30;  // f_l
    for (int l = start; l > 0; --l)
    {
        complex_type below = static_cast<double>(2 * l + 1) / z * cur - above;
        if (l - 1 > nmax)
        {
            double const mag = std::abs(below);
            if (mag > 1e100)
            {
                below /= mag;
                cur /= mag;
            }
        }
        else if (l - 1 == nmax)
        {
            double const mag = std::abs(below);
            below /= mag;
            cur /= mag;
        }
        if (l <= nmax + 1)
        {
            f[l] = cur;
        }
        above = cur;
        cur = below;
    }
    f[0] = cur;

    complex_type const j0 = scaled_sin(z, s) / z;
    complex_type const j1 = (j0 - scaled_cos(z, s)) / z;
    complex_type norm;
    if (std::abs(j0) >= std::abs(j1) || az < 1.0)
        norm = j0 / f[0];
    else
        norm = j1 / f[1];

    f.resize(nmax + 1);
    for (auto& v : f)
        v *= norm;
    return f;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Regular spherical Bessel functions for all orders up to \p lmax.
 *
 * Derivatives use j_l' = (l/z) j_l - j_{l+1}, which is free of cancellation
 * for small arguments.
 */
std::vector<SphericalBasisEval> sph_bessel_j_all(int lmax, complex_type z)
{
    check_order(lmax);
    std::vector<SphericalBasisEval> out(lmax + 1);

    if (z == complex_type{0, 0})
    {
        for (int l = 0; l <= lmax; ++l)
        {
            out[l].order = l;
            out[l].argument = z;
            out[l].value = (l == 0) ? 1.0 : 0.0;
            out[l].derivative = (l == 1) ? 1.0 / 3.0 : 0.0;
        }
        return out;
    }

    double const s = regular_scale(z);
    std::vector<complex_type> const f = std::abs(z) <= 1.0
                                            ? regular_series(lmax + 1, z)
                                            : regular_miller(lmax + 1, z, s);
    for (int l = 0; l <= lmax; ++l)
    {
        auto& e = out[l];
        e.order = l;
        e.argument = z;
        e.value = f[l];
        e.derivative = static_cast<double>(l) / z * f[l] - f[l + 1];
        e.log_scale = s;
    }
    return out;
}

//---------------------------------------------------------------------------//
/*!
 * Outgoing spherical Hankel functions for all orders up to \p lmax.
 *
 * The upward recurrence is stable for this dominant family. Entries are
 * rescaled individually when high orders at small argument would overflow.
 */
std::vector<SphericalBasisEval> sph_hankel1_all(int lmax, complex_type z)
{
    check_order(lmax);
    if (z == complex_type{0, 0})
    {
        throw DomainError("spherical Hankel function has a pole at z = 0");
    }

    double run = outgoing_scale(z);
    // exp(i z) * exp(-run)
    complex_type const phase = std::exp(imag_unit * z - run);
    complex_type prev = -imag_unit * phase / z;               // h_0
    complex_type cur = -phase * (z + imag_unit) / (z * z);  // h_1

    std::vector<SphericalBasisEval> out(lmax + 1);
    out[0].order = 0;
    out[0].argument = z;
    out[0].value = prev;
    out[0].derivative = -cur;
    out[0].log_scale = run;

    for (int l = 1; l <= lmax; ++l)
    {
        auto& e = out[l];
        e.order = l;
        e.argument = z;
        e.value = cur;
        e.derivative = prev - static_cast<double>(l + 1) / z * cur;
        e.log_scale = run;

        complex_type next = static_cast<double>(2 * l + 1) / z * cur - prev;
        double const mag = std::abs(next);
        if (mag > 1e250)
        {
            next /= mag;
            cur /= mag;
            run += std::log(mag);
        }
        prev = cur;
        cur = next;
    }
    return out;
}

//---------------------------------------------------------------------------//
std::vector<SphericalBasisEval> sph_hankel2_all(int lmax, complex_type z)
{
    auto const j = sph_bessel_j_all(lmax, z);
    auto const h1 = sph_hankel1_all(lmax, z);
    std::vector<SphericalBasisEval> out(lmax + 1);
    for (int l = 0; l <= lmax; ++l)
    {
        double const common = std::max(j[l].log_scale, h1[l].log_scale);
        double const wj = std::exp(j[l].log_scale - common);
        double const wh = std::exp(h1[l].log_scale - common);
        auto& e = out[l];
        e.order = l;
        e.argument = z;
        e.value = 2.0 * wj * j[l].value - wh * h1[l].value;
        e.derivative = 2.0 * wj * j[l].derivative - wh * h1[l].derivative;
        e.log_scale = common;
    }
    return out;
}

//---------------------------------------------------------------------------//
SphericalBasisEval sph_bessel_j(int l, complex_type z)
{
    check_order(l);
    return sph_bessel_j_all(l, z)[l];
}

SphericalBasisEval sph_hankel1(int l, complex_type z)
{
    check_order(l);
    return sph_hankel1_all(l, z)[l];
}

SphericalBasisEval sph_hankel2(int l, complex_type z)
{
    check_order(l);
    return sph_hankel2_all(l, z)[l];
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
