//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/ToolConfig.hh
//! \brief Tool-specific sections of a configuration file.
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qcloak/designer/Design.hh"
#include "qcloak/designer/Robustness.hh"
#include "qcloak/fields/FieldGrid.hh"

namespace qcloak::app
{
//---------------------------------------------------------------------------//
//! Bad or empty search box or sweep axis
class UsageError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct FieldSection
{
    PlaneSpec plane{PlaneAxis::x, 0, 0};
    int resolution{101};
    int streamlines{21};
};

FieldSection field_section(nlohmann::json const& doc);

/*!
 * Axis from either an explicit list or {"min", "max", "count"}.
 *
 * An absent key yields \c fallback.
 */
SweepAxis axis_from_json(nlohmann::json const& section,
                         std::string const& key,
                         std::string const& name,
                         SweepAxis const& fallback);

DesignRequest design_request(LayerStack const& stack, nlohmann::json const& doc);

RobustnessInput sweep_input(LayerStack const& stack, nlohmann::json const& doc);

//---------------------------------------------------------------------------//
}  // namespace qcloak::app
