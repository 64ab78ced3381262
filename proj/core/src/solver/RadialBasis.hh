//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file solver/RadialBasis.hh
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

#include "qcloak/Error.hh"
#include "qcloak/specfun/SphericalBessel.hh"

namespace qcloak
{
namespace detail
{
//---------------------------------------------------------------------------//
//! j_l(kr), h_l(kr) and their x-derivatives, each with its own exponent.
struct RadialBasis
{
    complex_type j{};
    complex_type dj{};
    double j_scale{0};
    complex_type h{};
    complex_type dh{};
    double h_scale{0};
};

inline RadialBasis radial_basis(int l, complex_type k, double r)
{
    complex_type const x = k * r;
    auto const j = sph_bessel_j_all(l, x)[l];
    auto const h = sph_hankel1_all(l, x)[l];
    return {j.value, j.derivative, j.log_scale,
            h.value, h.derivative, h.log_scale};
}

inline void require_nonzero(complex_type k, char const* where)
{
    if (k == complex_type{})
    {
        throw DegenerateInputError(
            std::string("zero wavenumber (E equals V) in ") + where);
    }
}

//---------------------------------------------------------------------------//
}  // namespace detail
}  // namespace qcloak
