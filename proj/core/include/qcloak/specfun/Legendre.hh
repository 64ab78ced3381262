//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/specfun/Legendre.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

namespace qcloak
{
//---------------------------------------------------------------------------//
// Legendre polynomial P_l(x), |x| <= 1
double legendre_p(int l, double x);

// P_0(x)..P_lmax(x)
std::vector<double> legendre_p_all(int lmax, double x);

/*!
 * Polar derivatives dP_l(cos theta)/d theta for l = 0..lmax.
 *
 * This equals the associated function P_l^1(cos theta) with the
 * Condon-Shortley phase, computed by its own three-term recurrence.
 */
std::vector<double> legendre_dtheta_all(int lmax, double theta);

//---------------------------------------------------------------------------//
}  // namespace qcloak
