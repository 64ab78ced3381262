//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file designer/Design.cc
//---------------------------------------------------------------------------//
#include "qcloak/designer/Design.hh"

#include <algorithm>

namespace qcloak
{
//---------------------------------------------------------------------------//
std::string DesignOutcome::dominant_reason() const
{
    auto it = std::max_element(
        reason_histogram.begin(), reason_histogram.end(),
        [](auto const& a, auto const& b) { return a.second < b.second; });
    return it == reason_histogram.end() ? std::string{} : it->first;
}

DesignOutcome design_cloak(DesignRequest const& request)
{
    DesignOutcome outcome;
    outcome.shell_grid = feasible_shell_set(ShellStageInput{request.geometry,
                                                            request.shell_mass,
                                                            request.shell_potential,
                                                            request.targets,
                                                            request.threads,
                                                            request.provenance});
    for (auto const& cell : outcome.shell_grid.cells)
        for (auto const& r : cell.reasons)
            ++outcome.reason_histogram[r];

    int tried = 0;
    for (auto const& cell : outcome.shell_grid.cells)
    {
        if (!cell.feasible)
            continue;
        if (request.max_attempts >= 0 && tried >= request.max_attempts)
            break;
        ++tried;
        auto point = match_core_parameters(request.geometry,
                                           Medium{cell.params[0], cell.params[1]},
                                           request.core,
                                           request.targets,
                                           request.threads);
        for (auto const& r : point.reasons)
            ++outcome.reason_histogram[r];
        outcome.attempts.push_back(point);
        if (point.feasible)
        {
            outcome.design = std::move(point);
            break;
        }
    }
    return outcome;
}

nlohmann::json design_outcome_to_json(DesignOutcome const& outcome)
{
    nlohmann::json doc;
    doc["found"] = outcome.design.has_value();
    doc["design"] = outcome.design ? design_point_to_json(*outcome.design)
                                   : nlohmann::json(nullptr);
    doc["feasible_shell_cells"] = outcome.shell_grid.count_feasible();
    doc["shell_cells"] = outcome.shell_grid.cells.size();
    doc["attempts"] = nlohmann::json::array();
    for (auto const& p : outcome.attempts)
        doc["attempts"].push_back(design_point_to_json(p));
    doc["reason_histogram"] = outcome.reason_histogram;
    doc["dominant_reason"] = outcome.dominant_reason();
    doc["provenance"] = outcome.shell_grid.provenance;
    return doc;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
