//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file solver/TwoLayer.cc
//---------------------------------------------------------------------------//
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "RadialBasis.hh"
#include "qcloak/solver/PartialWave.hh"

namespace qcloak
{
namespace
{
//---------------------------------------------------------------------------//
//! Matrix entry held as mantissa * exp(scale) until column equilibration.
struct Entry
{
    complex_type mantissa{};
    double scale{0};

    double log_abs() const
    {
        double const m = std::abs(mantissa);
        return m == 0 ? -std::numeric_limits<double>::infinity()
                      : std::log(m) + scale;
    }
};

void require_two_layers(LayerStack const& stack)
{
    if (stack.layers.size() != 2)
    {
        throw DomainError(fmt::format(
            "two-layer solver called with {} layers", stack.layers.size()));
    }
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
/*!
 * Solve the four matching conditions for unknowns (a, b, c, d).
 *
 * Rows: continuity of the radial function and of (1/m) dR/dr at r = a and at
 * r = a_c. Each column is equilibrated in log space so that evanescent
 * layers never overflow; row scaling removes the k/m units of the flux rows.
 */
PartialWaveSolution solve_two_layer(LayerStack const& stack, int l)
{
    require_two_layers(stack);
    require_valid(stack);

    double const a = stack.layers[0].outer_radius_nm;
    double const ac = stack.layers[1].outer_radius_nm;
    auto const k = region_wavenumbers(stack);
    for (int i = 0; i < 3; ++i)
        detail::require_nonzero(k[i], "two-layer stack");

    std::array<complex_type, 3> kappa;
    for (int i = 0; i < 3; ++i)
        kappa[i] = k[i] / stack.region_medium(i).mass_me;

    auto const out_a = detail::radial_basis(l, k[0], a);
    auto const shell_a = detail::radial_basis(l, k[1], a);
    auto const shell_c = detail::radial_basis(l, k[1], ac);
    auto const core_c = detail::radial_basis(l, k[2], ac);

    double const row1 = 1.0 / std::max(std::abs(kappa[0]), std::abs(kappa[1]));
    double const row3 = 1.0 / std::max(std::abs(kappa[1]), std::abs(kappa[2]));

    std::array<std::array<Entry, 4>, 4> m{};
    // column a (outgoing wave outside)
    m[0][0] = {out_a.h, out_a.h_scale};
    m[1][0] = {kappa[0] * out_a.dh * row1, out_a.h_scale};
    // column b (shell regular)
    m[0][1] = {-shell_a.j, shell_a.j_scale};
    m[1][1] = {-kappa[1] * shell_a.dj * row1, shell_a.j_scale};
    m[2][1] = {shell_c.j, shell_c.j_scale};
    m[3][1] = {kappa[1] * shell_c.dj * row3, shell_c.j_scale};
    // column c (shell outgoing)
    m[0][2] = {-shell_a.h, shell_a.h_scale};
    m[1][2] = {-kappa[1] * shell_a.dh * row1, shell_a.h_scale};
    m[2][2] = {shell_c.h, shell_c.h_scale};
    m[3][2] = {kappa[1] * shell_c.dh * row3, shell_c.h_scale};
    // column d (core regular)
    m[2][3] = {-core_c.j, core_c.j_scale};
    m[3][3] = {-kappa[2] * core_c.dj * row3, core_c.j_scale};

    std::array<double, 4> col_scale;
    Eigen::Matrix4cd mat;
    for (int col = 0; col < 4; ++col)
    {
        double s = -std::numeric_limits<double>::infinity();
        for (int row = 0; row < 4; ++row)
            s = std::max(s, m[row][col].log_abs());
        col_scale[col] = s;
        for (int row = 0; row < 4; ++row)
        {
            auto const& e = m[row][col];
            mat(row, col) = e.mantissa == complex_type{}
                                ? complex_type{}
                                : e.mantissa * std::exp(e.scale - s);
        }
    }

    Eigen::Vector4cd rhs;
    rhs << -out_a.j * std::exp(out_a.j_scale),
        -kappa[0] * out_a.dj * row1 * std::exp(out_a.j_scale), 0.0, 0.0;

    Eigen::PartialPivLU<Eigen::Matrix4cd> lu(mat);
    double const rcond = lu.rcond();
    double const condition = rcond > 0 ? 1.0 / rcond
                                       : std::numeric_limits<double>::infinity();
    if (!(condition <= max_condition_number))
    {
        throw NumericalDegeneracyError(
            fmt::format("two-layer matching system is singular for l={} "
                        "(condition ~ {:.3e})",
                        l,
                        condition),
            condition);
    }
    Eigen::Vector4cd const y = lu.solve(rhs);

    PartialWaveSolution sol;
    sol.l = l;
    sol.a_scat = ScaledComplex{y(0), -col_scale[0]}.value();
    sol.layer_coeffs.resize(2);
    sol.layer_coeffs[0].regular = {y(1), -col_scale[1]};
    sol.layer_coeffs[0].outgoing = {y(2), -col_scale[2]};
    sol.layer_coeffs[1].regular = {y(3), -col_scale[3]};
    sol.layer_coeffs[1].outgoing = {};
    return sol;
}

//---------------------------------------------------------------------------//
/*!
 * Closed-form two-layer scattering coefficient.
 *
 * With x1 = k0 a, y1 = m0 a, x2 = ks a, y2 = ms a, x3 = ks ac, y3 = ms ac,
 * x4 = kc ac, y4 = mc ac:
 * \code
 *   A = y2 x3 y4 j(x4) [j(x2) h'(x3) - h(x2) j'(x3)]
 *   B = y2 y3 x4 j'(x4) [h(x2) j(x3) - j(x2) h(x3)]
 *   C = x2 x3 y4 j(x4) [h'(x2) j'(x3) - h'(x3) j'(x2)]
 *   D = x2 y3 x4 j'(x4) [j'(x2) h(x3) - h'(x2) j(x3)]
 *   a = -(x1 j'(x1)(A+B) + y1 j(x1)(C+D)) / (x1 h'(x1)(A+B) + y1 h(x1)(C+D))
 * \endcode
 * Evaluated with unscaled functions, so only valid where they fit in double.
 */
complex_type scattering_coefficient_closed_form(LayerStack const& stack, int l)
{
    require_two_layers(stack);
    double const a = stack.layers[0].outer_radius_nm;
    double const ac = stack.layers[1].outer_radius_nm;
    auto const k = region_wavenumbers(stack);

    complex_type const x1 = k[0] * a;
    complex_type const x2 = k[1] * a;
    complex_type const x3 = k[1] * ac;
    complex_type const x4 = k[2] * ac;
    double const y1 = stack.background.mass_me * a;
    double const y2 = stack.layers[0].medium.mass_me * a;
    double const y3 = stack.layers[0].medium.mass_me * ac;
    double const y4 = stack.layers[1].medium.mass_me * ac;

    auto eval = [l](complex_type x) {
        auto const j = sph_bessel_j(l, x);
        auto const h = sph_hankel1(l, x);
        return std::array<complex_type, 4>{j.unscaled_value(),
                                           j.unscaled_derivative(),
                                           h.unscaled_value(),
                                           h.unscaled_derivative()};
    };
    auto const [j1, dj1, h1, dh1] = eval(x1);
    auto const [j2, dj2, h2, dh2] = eval(x2);
    auto const [j3, dj3, h3, dh3] = eval(x3);
    auto const f4 = eval(x4);
    complex_type const j4 = f4[0];
    complex_type const dj4 = f4[1];

    complex_type const A = y2 * x3 * y4 * j4 * (j2 * dh3 - h2 * dj3);
    complex_type const B = y2 * y3 * x4 * dj4 * (h2 * j3 - j2 * h3);
    complex_type const C = x2 * x3 * y4 * j4 * (dh2 * dj3 - dh3 * dj2);
    complex_type const D = x2 * y3 * x4 * dj4 * (dj2 * h3 - dh2 * j3);

    return -(x1 * dj1 * (A + B) + y1 * j1 * (C + D))
           / (x1 * dh1 * (A + B) + y1 * h1 * (C + D));
}

//---------------------------------------------------------------------------//
PartialWaveSolution solve_partial_wave(LayerStack const& stack, int l)
{
    if (stack.layers.size() == 2)
        return solve_two_layer(stack, l);
    return solve_n_layer(stack, l);
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
