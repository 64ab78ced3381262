//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields/FieldGrid.cc
//---------------------------------------------------------------------------//
#include "qcloak/fields/FieldGrid.hh"

#include <charconv>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "qcloak/Error.hh"
#include "qcloak/model/Config.hh"
#include "qcloak/util/Hash.hh"
#include "qcloak/util/Parallel.hh"

namespace qcloak
{
namespace
{
//---------------------------------------------------------------------------//
//! Map in-plane (u, v) to Cartesian (x, y, z)
std::array<double, 3> to_cartesian(PlaneSpec const& plane, double u, double v)
{
    switch (plane.axis)
    {
        case PlaneAxis::x:
            return {plane.offset_nm, u, v};
        case PlaneAxis::y:
            return {u, plane.offset_nm, v};
        case PlaneAxis::z:
        default:
            return {u, v, plane.offset_nm};
    }
}

//! Project a Cartesian vector onto the in-plane axes
std::array<double, 2>
to_plane(PlaneSpec const& plane, std::array<double, 3> const& vec)
{
    switch (plane.axis)
    {
        case PlaneAxis::x:
            return {vec[1], vec[2]};
        case PlaneAxis::y:
            return {vec[0], vec[2]};
        case PlaneAxis::z:
        default:
            return {vec[0], vec[1]};
    }
}

FieldSample sample_point(FieldEvaluator const& field,
                         PlaneSpec const& plane,
                         double u,
                         double v)
{
    auto const p = to_cartesian(plane, u, v);
    double const rho = std::hypot(p[0], p[1]);
    double const r = std::hypot(rho, p[2]);
    double const theta = std::atan2(rho, p[2]);
    double const phi = std::atan2(p[1], p[0]);

    auto const pt = field.evaluate(r, theta);
    auto const j = field.flux(r, theta);

    std::array<double, 3> cart;
    if (r == 0)
    {
        cart = {0, 0, j.radial};
    }
    else
    {
        double const st = std::sin(theta);
        double const ct = std::cos(theta);
        double const cp = std::cos(phi);
        double const sp = std::sin(phi);
        cart = {j.radial * st * cp + j.polar * ct * cp,
                j.radial * st * sp + j.polar * ct * sp,
                j.radial * ct - j.polar * st};
    }
    auto const in_plane = to_plane(plane, cart);
    return {u, v, pt.region, pt.psi, in_plane[0], in_plane[1]};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
PlaneSpec PlaneSpec::parse(std::string_view text)
{
    auto const eq = text.find('=');
    if (eq != 1 || text.size() < 3)
        throw DomainError("plane must look like 'x=0', got '"
                          + std::string(text) + "'");
    PlaneSpec plane;
    switch (text[0])
    {
        case 'x':
            plane.axis = PlaneAxis::x;
            break;
        case 'y':
            plane.axis = PlaneAxis::y;
            break;
        case 'z':
            plane.axis = PlaneAxis::z;
            break;
        default:
            throw DomainError("plane axis must be x, y or z");
    }
    auto const value = text.substr(2);
    auto const [ptr, ec] = std::from_chars(
        value.data(), value.data() + value.size(), plane.offset_nm);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw DomainError("invalid plane offset '" + std::string(value) + "'");
    return plane;
}

std::array<char const*, 2> PlaneSpec::axis_names() const
{
    switch (axis)
    {
        case PlaneAxis::x:
            return {"y", "z"};
        case PlaneAxis::y:
            return {"x", "z"};
        case PlaneAxis::z:
        default:
            return {"x", "y"};
    }
}

std::string PlaneSpec::to_string() const
{
    char const name = axis == PlaneAxis::x ? 'x' : axis == PlaneAxis::y ? 'y' : 'z';
    return fmt::format("{}={}", name, format_double(offset_nm));
}

//---------------------------------------------------------------------------//
FieldGrid export_field_grid(FieldEvaluator const& field,
                            PlaneSpec plane,
                            int resolution,
                            unsigned threads)
{
    if (resolution < 2)
        throw DomainError("field grid resolution must be at least 2");

    FieldGrid grid;
    grid.stack = field.stack();
    grid.plane = plane;
    grid.extent_nm = plane.extent_nm > 0 ? plane.extent_nm
                                         : 3 * field.stack().particle_radius();
    grid.plane.extent_nm = grid.extent_nm;
    grid.resolution = resolution;
    grid.samples.resize(static_cast<std::size_t>(resolution) * resolution);

    parallel_for(grid.samples.size(), threads, [&](std::size_t idx) {
        int const iu = static_cast<int>(idx % resolution);
        int const iv = static_cast<int>(idx / resolution);
        grid.samples[idx] = sample_point(
            field, plane, grid.coordinate(iu), grid.coordinate(iv));
    });
    return grid;
}

double max_probability_inside(FieldGrid const& grid, double radius)
{
    double result = 0;
    for (auto const& s : grid.samples)
    {
        auto const p = to_cartesian(grid.plane, s.u, s.v);
        double const r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        if (r < radius)
            result = std::max(result, std::norm(s.psi));
    }
    return result;
}

//---------------------------------------------------------------------------//
void write_field_csv(FieldGrid const& grid,
                     std::ostream& os,
                     std::string const& config_hash)
{
    if (!config_hash.empty())
        os << "# config_hash=" << config_hash << '\n';
    auto const names = grid.plane.axis_names();
    os << names[0] << "_nm," << names[1]
       << "_nm,region,re_psi,im_psi,abs_psi,j_1,j_2\n";
    for (auto const& s : grid.samples)
    {
        os << format_double(s.u) << ',' << format_double(s.v) << ','
           << s.region << ',' << format_double(s.psi.real()) << ','
           << format_double(s.psi.imag()) << ','
           << format_double(std::abs(s.psi)) << ',' << format_double(s.j1)
           << ',' << format_double(s.j2) << '\n';
    }
}

nlohmann::json field_grid_to_json(FieldGrid const& grid)
{
    nlohmann::json doc;
    doc["stack"] = stack_to_json(grid.stack);
    doc["plane"] = grid.plane.to_string();
    doc["extent_nm"] = grid.extent_nm;
    doc["resolution"] = grid.resolution;
    auto const names = grid.plane.axis_names();
    doc["columns"] = {std::string(names[0]) + "_nm",
                      std::string(names[1]) + "_nm",
                      "region",
                      "re_psi",
                      "im_psi",
                      "j_1",
                      "j_2"};
    auto& rows = doc["samples"] = nlohmann::json::array();
    for (auto const& s : grid.samples)
    {
        rows.push_back(
            {s.u, s.v, s.region, s.psi.real(), s.psi.imag(), s.j1, s.j2});
    }
    return doc;
}

FieldGrid field_grid_from_json(nlohmann::json const& doc)
{
    try
    {
        FieldGrid grid;
        grid.stack = stack_from_json(doc.at("stack"));
        grid.plane = PlaneSpec::parse(doc.at("plane").get<std::string>());
        grid.extent_nm = doc.at("extent_nm").get<double>();
        grid.plane.extent_nm = grid.extent_nm;
        grid.resolution = doc.at("resolution").get<int>();
        for (auto const& row : doc.at("samples"))
        {
            FieldSample s;
            s.u = row.at(0).get<double>();
            s.v = row.at(1).get<double>();
            s.region = row.at(2).get<int>();
            s.psi = {row.at(3).get<double>(), row.at(4).get<double>()};
            s.j1 = row.at(5).get<double>();
            s.j2 = row.at(6).get<double>();
            grid.samples.push_back(s);
        }
        if (grid.samples.size()
            != static_cast<std::size_t>(grid.resolution) * grid.resolution)
        {
            throw ConfigError("field grid sample count does not match resolution");
        }
        return grid;
    }
    catch (nlohmann::json::exception const& e)
    {
        throw ConfigError(std::string("malformed field grid JSON: ") + e.what());
    }
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
