//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file designer/SweepGrid.cc
//---------------------------------------------------------------------------//
#include "qcloak/designer/SweepGrid.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "qcloak/Error.hh"
#include "qcloak/util/Hash.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
SweepAxis SweepAxis::linspace(std::string name, double lo, double hi, int count)
{
    if (count < 1)
        throw DomainError("sweep axis '" + name + "' needs at least one value");
    SweepAxis axis{std::move(name), {}};
    axis.values.reserve(count);
    for (int i = 0; i < count; ++i)
    {
        axis.values.push_back(count == 1 ? lo
                                         : lo + (hi - lo) * i / (count - 1));
    }
    return axis;
}

std::size_t SweepGrid::count_feasible() const
{
    return static_cast<std::size_t>(std::count_if(
        cells.begin(), cells.end(), [](auto const& c) { return c.feasible; }));
}

double relative_spread(SweepGrid const& grid)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0;
    int n = 0;
    for (auto const& c : grid.cells)
    {
        if (!c.error.empty())
            continue;
        lo = std::min(lo, c.objective);
        hi = std::max(hi, c.objective);
        sum += c.objective;
        ++n;
    }
    if (n == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return (hi - lo) / (sum / n);
}

//---------------------------------------------------------------------------//
namespace
{
std::string join(std::vector<std::string> const& items)
{
    std::string out;
    for (auto const& s : items)
    {
        if (!out.empty())
            out += ';';
        out += s;
    }
    return out;
}
}  // namespace

void write_sweep_csv(SweepGrid const& grid, std::ostream& os)
{
    if (!grid.provenance.empty())
        os << "# config_hash=" << grid.provenance << '\n';
    double const spread = relative_spread(grid);
    os << grid.axes[0].name << ',' << grid.axes[1].name << ','
       << grid.objective_name;
    for (auto const& name : grid.extra_names)
        os << ',' << name;
    os << ",feasible,reasons,relative_spread,error\n";
    for (auto const& c : grid.cells)
    {
        os << format_double(c.params[0]) << ',' << format_double(c.params[1])
           << ',' << format_double(c.objective);
        for (double e : c.extras)
            os << ',' << format_double(e);
        os << ',' << (c.feasible ? 1 : 0) << ',' << join(c.reasons) << ','
           << format_double(spread) << ',' << c.error << '\n';
    }
}

nlohmann::json sweep_to_json(SweepGrid const& grid)
{
    nlohmann::json doc;
    doc["provenance"] = grid.provenance;
    doc["axes"] = nlohmann::json::array();
    for (auto const& axis : grid.axes)
        doc["axes"].push_back({{"name", axis.name}, {"values", axis.values}});
    doc["objective_name"] = grid.objective_name;
    doc["extra_names"] = grid.extra_names;
    doc["relative_spread"] = relative_spread(grid);
    doc["feasible_count"] = grid.count_feasible();
    auto& cells = doc["cells"] = nlohmann::json::array();
    for (auto const& c : grid.cells)
    {
        nlohmann::json cell{{"params", c.params},
                            {"objective", c.objective},
                            {"feasible", c.feasible},
                            {"reasons", c.reasons},
                            {"extras", c.extras}};
        if (!c.error.empty())
            cell["error"] = c.error;
        cells.push_back(std::move(cell));
    }
    return doc;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
