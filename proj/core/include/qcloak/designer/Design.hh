//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/designer/Design.hh
//---------------------------------------------------------------------------//
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CoreStage.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
struct DesignRequest
{
    LayerStack geometry;
    SweepAxis shell_mass{"m_s", {}};
    SweepAxis shell_potential{"V_s", {}};
    CoreSearch core;
    DesignTargets targets;
    int max_attempts{-1};  //!< shell cells tried; negative means all
    unsigned threads{0};
    std::string provenance;
};

struct DesignOutcome
{
    std::optional<DesignPoint> design;
    SweepGrid shell_grid;
    std::vector<DesignPoint> attempts;
    std::map<std::string, int> reason_histogram;

    //! Most frequent failure reason, empty if none
    std::string dominant_reason() const;
};

/*!
 * Two-stage design: feasible shells, then a matched core for each.
 *
 * Feasible shell cells are tried in row-major order and the first design
 * passing every exact check is returned.
 */
DesignOutcome design_cloak(DesignRequest const& request);

nlohmann::json design_outcome_to_json(DesignOutcome const& outcome);

//---------------------------------------------------------------------------//
}  // namespace qcloak
