//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/model/Config.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "LayerStack.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
/*!
 * A parsed JSON configuration together with its exact source text.
 *
 * Stack keys:
 * \code
 * {
 *   "energy_eV": 0.01,
 *   "background": {"mass_me": 0.8, "potential_eV": 0.0},
 *   "layers": [{"mass_me": 0.16, "potential_eV": -2.34,
 *               "outer_radius_nm": 2.0}, ...]
 * }
 * \endcode
 * Other top-level keys are kept in \c document for the tool sections.
 */
struct ParsedConfig
{
    LayerStack stack;
    nlohmann::json document;
    std::string text;

    //! Source text, byte for byte
    std::string const& echo() const { return text; }
};

// Parse config text; ConfigError carries the byte offset on syntax errors
ParsedConfig parse_config(std::string_view text);

// Read a file and parse it
ParsedConfig load_config(std::string const& path);

// Stack <-> JSON using the keys above
LayerStack stack_from_json(nlohmann::json const& doc);
nlohmann::json stack_to_json(LayerStack const& stack);

//---------------------------------------------------------------------------//
}  // namespace qcloak
