//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/ToolConfig.cc
//---------------------------------------------------------------------------//
#include "ToolConfig.hh"

#include <fmt/format.h>

namespace qcloak::app
{
namespace
{
nlohmann::json const& section(nlohmann::json const& doc, char const* key)
{
    static nlohmann::json const empty = nlohmann::json::object();
    auto it = doc.find(key);
    if (it == doc.end())
        return empty;
    if (!it->is_object())
        throw UsageError(fmt::format("section '{}' must be an object", key));
    return *it;
}

template<class T>
T get_or(nlohmann::json const& obj, char const* key, T fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    try
    {
        return it->get<T>();
    }
    catch (nlohmann::json::exception const&)
    {
        throw UsageError(fmt::format("key '{}' has the wrong type", key));
    }
}
}  // namespace

//---------------------------------------------------------------------------//
FieldSection field_section(nlohmann::json const& doc)
{
    auto const& s = section(doc, "field");
    FieldSection out;
    if (s.contains("plane"))
        out.plane = PlaneSpec::parse(get_or<std::string>(s, "plane", "x=0"));
    out.plane.extent_nm = get_or(s, "extent_nm", 0.0);
    out.resolution = get_or(s, "resolution", out.resolution);
    out.streamlines = get_or(s, "streamlines", out.streamlines);
    return out;
}

SweepAxis axis_from_json(nlohmann::json const& sec,
                         std::string const& key,
                         std::string const& name,
                         SweepAxis const& fallback)
{
    auto it = sec.find(key);
    if (it == sec.end())
        return fallback;
    SweepAxis axis{name, {}};
    if (it->is_array())
    {
        for (auto const& v : *it)
        {
            if (!v.is_number())
                throw UsageError(fmt::format("axis '{}' values must be numbers", key));
            axis.values.push_back(v.get<double>());
        }
    }
    else if (it->is_object())
    {
        double const lo = get_or(*it, "min", 0.0);
        double const hi = get_or(*it, "max", 0.0);
        int const count = get_or(*it, "count", 0);
        if (count < 1 || !(lo <= hi))
            throw UsageError(fmt::format("axis '{}' is an empty range", key));
        axis = SweepAxis::linspace(name, lo, hi, count);
    }
    else
    {
        throw UsageError(fmt::format("axis '{}' must be a list or a range", key));
    }
    if (axis.values.empty())
        throw UsageError(fmt::format("axis '{}' is empty", key));
    return axis;
}

DesignRequest design_request(LayerStack const& stack, nlohmann::json const& doc)
{
    auto const& s = section(doc, "design");
    DesignRequest req;
    req.geometry = stack;

    auto& t = req.targets;
    t.epsilon = get_or(s, "epsilon", t.epsilon);
    t.flux_tolerance = get_or(s, "flux_tolerance", t.flux_tolerance);
    t.shell_flux_tolerance
        = get_or(s, "shell_flux_tolerance", t.shell_flux_tolerance);
    t.scattering_tolerance
        = get_or(s, "scattering_tolerance", t.scattering_tolerance);
    t.common_node_fraction
        = get_or(s, "common_node_fraction", t.common_node_fraction);

    req.shell_mass = axis_from_json(
        s, "shell_mass", "m_s", SweepAxis::linspace("m_s", 0.01, 1.0, 200));
    req.shell_potential = axis_from_json(
        s, "shell_potential", "V_s", SweepAxis::linspace("V_s", -10.0, -0.1, 200));
    req.core.core_mass = axis_from_json(
        s, "core_mass", "m_c", SweepAxis::linspace("m_c", 0.01, 2.0, 41));
    req.core.core_potential = axis_from_json(
        s, "core_potential", "V_c", SweepAxis::linspace("V_c", 0.1, 50.0, 41));
    req.core.refine_starts = get_or(s, "refine_starts", req.core.refine_starts);
    req.max_attempts = get_or(s, "max_attempts", req.max_attempts);
    return req;
}

RobustnessInput sweep_input(LayerStack const& stack, nlohmann::json const& doc)
{
    auto const& s = section(doc, "sweep");
    RobustnessInput in;
    in.stack = stack;
    Medium const hidden = stack.layers.back().medium;
    in.hidden_mass = axis_from_json(
        s, "hidden_mass", "m_h", SweepAxis{"m_h", {hidden.mass_me}});
    in.hidden_potential = axis_from_json(
        s, "hidden_potential", "V_h", SweepAxis{"V_h", {hidden.potential_eV}});
    return in;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak::app
