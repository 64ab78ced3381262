//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file designer/NelderMead.hh
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace qcloak
{
namespace detail
{
//---------------------------------------------------------------------------//
using Point2 = std::array<double, 2>;

struct Box2
{
    Point2 lo;
    Point2 hi;

    Point2 clamp(Point2 p) const
    {
        for (int d = 0; d < 2; ++d)
            p[d] = std::clamp(p[d], lo[d], hi[d]);
        return p;
    }
};

struct MinimizeResult
{
    Point2 x;
    double value;
    int iterations;
};

/*!
 * Two-dimensional Nelder-Mead with standard coefficients.
 *
 * Trial points are clamped into the box. Stops when every vertex lies within
 * \c tol of the best one in each coordinate.
 */
template<class F>
MinimizeResult nelder_mead(
    F&& f, Point2 start, Point2 step, Box2 const& box, double tol, int max_iter)
{
    std::array<Point2, 3> x;
    std::array<double, 3> fx;
    x[0] = box.clamp(start);
    for (int d = 0; d < 2; ++d)
    {
        Point2 p = x[0];
        p[d] += step[d];
        if (box.clamp(p) == x[0])
            p[d] = x[0][d] - step[d];
        x[d + 1] = box.clamp(p);
    }
    for (int i = 0; i < 3; ++i)
        fx[i] = f(x[i]);

    auto combine = [&](Point2 const& a, Point2 const& b, double t) {
        return box.clamp(Point2{a[0] + t * (b[0] - a[0]),
                                a[1] + t * (b[1] - a[1])});
    };

    int iter = 0;
    for (; iter < max_iter; ++iter)
    {
        std::array<int, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return fx[a] < fx[b]; });
        int const best = order[0], mid = order[1], worst = order[2];

        bool converged = true;
        for (int i = 0; i < 3; ++i)
            for (int d = 0; d < 2; ++d)
                converged = converged
                            && std::fabs(x[i][d] - x[best][d]) <= tol;
        if (converged)
            break;

        Point2 const centroid{(x[best][0] + x[mid][0]) / 2,
                              (x[best][1] + x[mid][1]) / 2};
        Point2 const xr = combine(centroid, x[worst], -1.0);
        double const fr = f(xr);
        if (fr < fx[best])
        {
            Point2 const xe = combine(centroid, x[worst], -2.0);
            double const fe = f(xe);
            x[worst] = fe < fr ? xe : xr;
            fx[worst] = std::min(fe, fr);
            continue;
        }
        if (fr < fx[mid])
        {
            x[worst] = xr;
            fx[worst] = fr;
            continue;
        }
        bool const outside = fr < fx[worst];
        Point2 const xc = outside ? combine(centroid, xr, 0.5)
                                  : combine(centroid, x[worst], 0.5);
        double const fc = f(xc);
        if (fc < std::min(fr, fx[worst]))
        {
            x[worst] = xc;
            fx[worst] = fc;
            continue;
        }
        for (int i : {mid, worst})
        {
            x[i] = combine(x[best], x[i], 0.5);
            fx[i] = f(x[i]);
        }
    }
    int const best = static_cast<int>(
        std::min_element(fx.begin(), fx.end()) - fx.begin());
    return {x[best], fx[best], iter};
}

//---------------------------------------------------------------------------//
}  // namespace detail
}  // namespace qcloak
