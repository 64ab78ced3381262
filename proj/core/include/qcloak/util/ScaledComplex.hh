//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/util/ScaledComplex.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace qcloak
{
//---------------------------------------------------------------------------//
/*!
 * Complex number stored as mantissa * exp(log_scale).
 *
 * Coefficients of evanescent layers can be far outside double range; this
 * keeps them representable until they are multiplied by a basis function
 * with the opposite scale.
 */
struct ScaledComplex
{
    std::complex<double> mantissa{};
    double log_scale{0};

    //! Plain value; may overflow to infinity or underflow to zero
    std::complex<double> value() const
    {
        if (mantissa == std::complex<double>{})
            return {};
        return mantissa * std::exp(log_scale);
    }

    //! Natural log of the magnitude (-inf for zero)
    double log_abs() const
    {
        double const m = std::abs(mantissa);
        if (m == 0)
            return -std::numeric_limits<double>::infinity();
        return std::log(m) + log_scale;
    }

    //! Product with a value carrying its own exponent
    std::complex<double>
    times(std::complex<double> other, double other_log_scale) const
    {
        if (mantissa == std::complex<double>{}
            || other == std::complex<double>{})
            return {};
        return mantissa * other * std::exp(log_scale + other_log_scale);
    }
};

//---------------------------------------------------------------------------//
}  // namespace qcloak
