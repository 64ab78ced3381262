//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file specfun/Legendre.cc
//---------------------------------------------------------------------------//
#include "qcloak/specfun/Legendre.hh"

#include <cmath>
#include <string>

#include "qcloak/Error.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
std::vector<double> legendre_p_all(int lmax, double x)
{
    if (lmax < 0)
        throw DomainError("Legendre order must be non-negative");
    if (!(std::abs(x) <= 1.0))
        throw DomainError("Legendre argument outside [-1, 1]: "
                          + std::to_string(x));

    std::vector<double> p(lmax + 1);
    p[0] = 1.0;
    if (lmax >= 1)
        p[1] = x;
    for (int l = 2; l <= lmax; ++l)
    {
        p[l] = ((2 * l - 1) * x * p[l - 1] - (l - 1) * p[l - 2]) / l;
    }
    return p;
}

double legendre_p(int l, double x)
{
    return legendre_p_all(l, x)[l];
}

//---------------------------------------------------------------------------//
std::vector<double> legendre_dtheta_all(int lmax, double theta)
{
    if (lmax < 0)
        throw DomainError("Legendre order must be non-negative");

    double const x = std::cos(theta);
    double const s = std::sin(theta);
    std::vector<double> d(lmax + 1, 0.0);
    if (lmax >= 1)
        d[1] = -s;
    if (lmax >= 2)
        d[2] = -3.0 * x * s;
    // (l-1) P_l^1 = (2l-1) x P_{l-1}^1 - l P_{l-2}^1
    for (int l = 3; l <= lmax; ++l)
    {
        d[l] = ((2 * l - 1) * x * d[l - 1] - l * d[l - 2]) / (l - 1);
    }
    return d;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
