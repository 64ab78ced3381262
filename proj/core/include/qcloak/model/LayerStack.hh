//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/model/LayerStack.hh
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qcloak
{
//---------------------------------------------------------------------------//
/*!
 * hbar^2 / (2 m_e) in eV nm^2 (CODATA 2018).
 *
 * This is the only dimensional constant in the library: energies are in eV,
 * lengths in nm, and effective masses in units of the free electron mass.
 */
inline constexpr double hbar2_over_2me = 0.0380998212;

//---------------------------------------------------------------------------//
//! Homogeneous material: effective mass (units of m_e) and potential (eV).
struct Medium
{
    double mass_me{1};
    double potential_eV{0};

    bool operator==(Medium const&) const = default;
};

//! Spherical layer bounded outside by \c outer_radius_nm.
struct Layer
{
    Medium medium;
    double outer_radius_nm{0};

    bool operator==(Layer const&) const = default;
};

//---------------------------------------------------------------------------//
/*!
 * Concentric layers, outermost first, embedded in a background medium.
 *
 * Region 0 is the background; region i (i >= 1) is \c layers[i-1]. The
 * background potential is zero by convention.
 */
struct LayerStack
{
    Medium background{1, 0};
    std::vector<Layer> layers;
    double energy_eV{0};

    bool operator==(LayerStack const&) const = default;

    int num_regions() const { return static_cast<int>(layers.size()) + 1; }

    //! Radius a of the whole particle (zero with no layers)
    double particle_radius() const
    {
        return layers.empty() ? 0.0 : layers.front().outer_radius_nm;
    }

    Medium const& region_medium(int region) const
    {
        return region == 0 ? background : layers[region - 1].medium;
    }

    //! Outer radius of a region (infinite for the background)
    double region_outer_radius(int region) const;

    //! Inner radius of a region (zero for the innermost layer)
    double region_inner_radius(int region) const;

    //! Region containing radius r; interfaces belong to the outer region
    int region_of(double r) const;
};

//---------------------------------------------------------------------------//
using wavenumber_type = std::complex<double>;

// Wavenumber in nm^-1 on the branch Im k >= 0
wavenumber_type wavenumber(double energy_eV, Medium const& medium);

// Wavenumbers for every region of a stack
std::vector<wavenumber_type> region_wavenumbers(LayerStack const& stack);

//---------------------------------------------------------------------------//
//! A failed invariant: which field, and which rule.
struct Violation
{
    std::string field;
    std::string rule;
};

// Check all stack invariants; never throws
std::vector<Violation> validate(LayerStack const& stack);

// Throw ConfigError listing all violations, if any
void require_valid(LayerStack const& stack);

//---------------------------------------------------------------------------//
/*!
 * Size parameters |k|*R for a region.
 *
 * Both the region's own outer radius and the particle radius are reported,
 * since "k a" is sometimes taken at either.
 */
struct WavenumberProduct
{
    int region{0};
    wavenumber_type k{};
    double k_times_outer_radius{0};
    double k_times_particle_radius{0};
};

std::vector<WavenumberProduct> wavenumber_products(LayerStack const& stack);

//---------------------------------------------------------------------------//
/*!
 * Dimensionless matching parameters at one interface.
 *
 * With R the interface radius, x = k R and y = m R on either side; these are
 * the natural variables of the closed-form matching formulas.
 */
struct InterfaceShorthand
{
    double radius{0};
    std::complex<double> x_outer{};
    double y_outer{0};
    std::complex<double> x_inner{};
    double y_inner{0};
};

struct ReducedStack
{
    double energy_eV{0};
    double background_potential_eV{0};
    std::vector<InterfaceShorthand> interfaces;  // outermost first
};

ReducedStack reduce(LayerStack const& stack);
LayerStack restore(ReducedStack const& reduced);

//---------------------------------------------------------------------------//
}  // namespace qcloak
