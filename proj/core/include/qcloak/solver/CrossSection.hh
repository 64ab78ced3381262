//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/solver/CrossSection.hh
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "PartialWave.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Series truncation: stop once (2l+1)|a_l|^2 falls below this twice in a row
inline constexpr double truncation_threshold = 1e-5;
//! Orders 0..min_truncation_order are always evaluated
inline constexpr int min_truncation_order = 4;

struct CrossSectionTerm
{
    int l{0};
    double sigma_nm2{0};  //!< 4 pi / k0^2 (2l+1) |a_l|^2
};

struct CrossSectionResult
{
    double sigma{0};             //!< nm^2
    double sigma_normalized{0};  //!< sigma / (pi a^2)
    std::vector<CrossSectionTerm> per_l_terms;
    int l_max_used{0};
    std::vector<PartialWaveSolution> waves;

    //! max |a_l| over the given orders
    double max_abs_a(int lmin, int lmax) const;
    //! max_l ||1 + 2 a_l| - 1|
    double unitarity_residual() const;
    //! |sum (2l+1)|a|^2 + sum (2l+1) Re a| relative to the first sum
    double optical_theorem_residual() const;
};

// Total cross section with adaptive truncation
CrossSectionResult cross_section(LayerStack const& stack);

//---------------------------------------------------------------------------//
/*!
 * Partial waves 0..lmax of one stack, ready for field evaluation.
 */
struct ScatteringSolution
{
    LayerStack stack;
    std::vector<wavenumber_type> k;  //!< per region
    std::vector<PartialWaveSolution> waves;

    int lmax() const { return static_cast<int>(waves.size()) - 1; }
};

ScatteringSolution solve_partial_waves(LayerStack const& stack, int lmax);

// Order needed to resolve fields out to r_max at 1e-12 (at least l_min)
int field_order(LayerStack const& stack, double r_max, int l_min);

//---------------------------------------------------------------------------//
}  // namespace qcloak
