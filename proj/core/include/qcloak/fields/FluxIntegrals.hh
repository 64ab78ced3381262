//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/fields/FluxIntegrals.hh
//---------------------------------------------------------------------------//
#pragma once

#include "FieldEvaluator.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Default relative tolerance of the adaptive flux quadratures.
inline constexpr double default_flux_tolerance = 1e-8;

//! Shell-stage design target is F = 1 - epsilon.
inline constexpr double default_flux_loss = 0.05;

/*!
 * Fraction F of the incident flux through pi a^2 that crosses the annulus
 * a_c <= r <= a of the equatorial plane:
 * \f[
 *   2\pi \int_{a_c}^{a} \hat z\cdot\vec J(r, \pi/2)\, r\,dr = \pi a^2 F .
 * \f]
 * For a bare plane wave F = (a^2 - a_c^2) / a^2.
 */
double flux_through_shell_annulus(FieldEvaluator const& field,
                                  double tolerance = default_flux_tolerance);

/*!
 * Flux through the equatorial disk r_lo <= r <= r_hi, in the same units.
 *
 * The integral is split at every interface inside the range.
 */
double flux_through_disk(FieldEvaluator const& field,
                         double r_lo,
                         double r_hi,
                         double tolerance = default_flux_tolerance);

/*!
 * Outward flux through a hemisphere of radius R (upper: z > 0), in units
 * of the incident flux through pi a^2.
 */
double flux_through_hemisphere(FieldEvaluator const& field,
                               double radius,
                               bool upper,
                               double tolerance = default_flux_tolerance);

//! Net outward flux through the full sphere of radius R (zero if elastic).
double net_flux_through_sphere(FieldEvaluator const& field,
                               double radius,
                               double tolerance = default_flux_tolerance);

//---------------------------------------------------------------------------//
}  // namespace qcloak
