//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/fields/FieldGrid.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "FieldEvaluator.hh"

namespace qcloak
{
//---------------------------------------------------------------------------//
enum class PlaneAxis
{
    x,
    y,
    z
};

/*!
 * Axis-aligned slice through the particle, e.g. "x=0".
 *
 * The in-plane axes are the two remaining Cartesian axes in (x, y, z) order;
 * the square extent is centred on the origin. An extent of zero means three
 * particle radii.
 */
struct PlaneSpec
{
    PlaneAxis axis{PlaneAxis::x};
    double offset_nm{0};
    double extent_nm{0};

    // Parse "<axis>=<value>"
    static PlaneSpec parse(std::string_view text);

    std::array<char const*, 2> axis_names() const;
    std::string to_string() const;
};

//! One grid cell: in-plane position, region, wavefunction, in-plane flux.
struct FieldSample
{
    double u{0};
    double v{0};
    int region{0};
    std::complex<double> psi{};
    double j1{0};
    double j2{0};
};

//---------------------------------------------------------------------------//
/*!
 * Row-major samples of a plane: index = iv * resolution + iu.
 */
struct FieldGrid
{
    LayerStack stack;
    PlaneSpec plane;
    double extent_nm{0};
    int resolution{0};
    std::vector<FieldSample> samples;

    FieldSample const& at(int iu, int iv) const
    {
        return samples[static_cast<std::size_t>(iv) * resolution + iu];
    }
    double coordinate(int i) const
    {
        return -0.5 * extent_nm + extent_nm * i / (resolution - 1);
    }
    double spacing() const { return extent_nm / (resolution - 1); }
};

// Sample Psi and flux on a plane; threads = 0 picks the hardware count
FieldGrid export_field_grid(FieldEvaluator const& field,
                            PlaneSpec plane,
                            int resolution,
                            unsigned threads = 1);

// Largest |Psi|^2 among samples with r < radius
double max_probability_inside(FieldGrid const& grid, double radius);

// CSV: u_nm, v_nm (named by plane axes), region, re/im/abs psi, j_1, j_2
void write_field_csv(FieldGrid const& grid,
                     std::ostream& os,
                     std::string const& config_hash = {});

nlohmann::json field_grid_to_json(FieldGrid const& grid);
FieldGrid field_grid_from_json(nlohmann::json const& doc);

//---------------------------------------------------------------------------//
}  // namespace qcloak
