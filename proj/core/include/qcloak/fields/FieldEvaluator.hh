//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/fields/FieldEvaluator.hh
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

#include "qcloak/solver/CrossSection.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Wavefunction and its spherical gradient components at one point.
struct FieldPoint
{
    int region{0};
    std::complex<double> psi{};
    std::complex<double> dpsi_dr{};      //!< radial derivative
    std::complex<double> dpsi_dtheta{};  //!< polar derivative (not / r)
};

/*!
 * Probability flux in units of the incident flux hbar k0 / m0.
 *
 * The azimuthal component vanishes identically for an incident wave along z.
 */
struct FluxVector
{
    double radial{0};
    double polar{0};
};

//---------------------------------------------------------------------------//
/*!
 * Sums the partial-wave series of a solved stack at arbitrary points.
 *
 * Radial derivatives come from the analytic derivatives of the spherical
 * functions, and polar derivatives from the associated Legendre recurrence.
 * At the origin only the l = 0 term survives in Psi and only l = 1 in the
 * gradient; the gradient there is reported along +z.
 */
class FieldEvaluator
{
  public:
    explicit FieldEvaluator(ScatteringSolution solution);

    // Evaluate at radius r (nm) and polar angle theta
    FieldPoint evaluate(double r, double theta) const;

    std::complex<double> psi(double r, double theta) const
    {
        return this->evaluate(r, theta).psi;
    }

    // Normalized flux at (r, theta)
    FluxVector flux(double r, double theta) const;

    // z component of the normalized flux
    double flux_z(double r, double theta) const;

    ScatteringSolution const& solution() const { return solution_; }
    LayerStack const& stack() const { return solution_.stack; }

  private:
    ScatteringSolution solution_;
    double k0_;
};

//---------------------------------------------------------------------------//
// Free-function forms
std::complex<double>
wavefunction(ScatteringSolution const& solution, double r, double theta);
FluxVector flux(ScatteringSolution const& solution, double r, double theta);

//---------------------------------------------------------------------------//
}  // namespace qcloak
