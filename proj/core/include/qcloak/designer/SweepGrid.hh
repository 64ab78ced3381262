//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/designer/SweepGrid.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Named list of parameter values along one sweep axis.
struct SweepAxis
{
    std::string name;
    std::vector<double> values;

    static SweepAxis linspace(std::string name, double lo, double hi, int count);
    std::size_t size() const { return values.size(); }
};

//! Result for one (axis0, axis1) cell.
struct SweepCell
{
    std::array<double, 2> params{};
    double objective{0};
    bool feasible{false};
    std::vector<std::string> reasons;
    std::vector<double> extras;  //!< named by SweepGrid::extra_names
    std::string error;           //!< non-empty if evaluation threw
};

/*!
 * Rectangular parameter sweep; cell index = i0 * axes[1].size() + i1.
 */
struct SweepGrid
{
    std::array<SweepAxis, 2> axes;
    std::string objective_name{"objective"};
    std::vector<std::string> extra_names;
    std::vector<SweepCell> cells;
    std::string provenance;  //!< hash of the generating configuration

    SweepCell const& at(std::size_t i0, std::size_t i1) const
    {
        return cells[i0 * axes[1].size() + i1];
    }
    std::size_t count_feasible() const;
};

//! (max - min) / mean of the objective over cells without errors.
double relative_spread(SweepGrid const& grid);

// CSV with a header row; reasons are ';'-joined
void write_sweep_csv(SweepGrid const& grid, std::ostream& os);

nlohmann::json sweep_to_json(SweepGrid const& grid);

//---------------------------------------------------------------------------//
}  // namespace qcloak
