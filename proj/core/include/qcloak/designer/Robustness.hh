//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/designer/Robustness.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>

#include "SweepGrid.hh"
#include "qcloak/model/LayerStack.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
/*!
 * Sweep of the innermost layer's medium.
 *
 * The stack's innermost layer is replaced by each (mass, potential) pair and
 * sigma / (pi a^2) recorded. A failing cell keeps its error message and the
 * sweep continues.
 */
struct RobustnessInput
{
    LayerStack stack;
    SweepAxis hidden_mass{"m_h", {}};
    SweepAxis hidden_potential{"V_h", {}};
    unsigned threads{0};
    std::string provenance;
};

SweepGrid robustness_sweep(RobustnessInput const& input);

//---------------------------------------------------------------------------//
}  // namespace qcloak
