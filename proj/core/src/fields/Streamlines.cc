//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file fields/Streamlines.cc
//---------------------------------------------------------------------------//
#include "qcloak/fields/Streamlines.hh"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qcloak/util/Parallel.hh"

namespace qcloak
{
namespace
{
//---------------------------------------------------------------------------//
class FluxInterpolator
{
  public:
    explicit FluxInterpolator(FieldGrid const& grid)
        : grid_(grid)
        , lo_(grid.coordinate(0))
        , hi_(grid.coordinate(grid.resolution - 1))
        , h_(grid.spacing())
    {
    }

    bool contains(PlanePoint const& p) const
    {
        return p[0] >= lo_ && p[0] <= hi_ && p[1] >= lo_ && p[1] <= hi_;
    }

    PlanePoint operator()(PlanePoint const& p) const
    {
        int const last = grid_.resolution - 2;
        double const fu = (p[0] - lo_) / h_;
        double const fv = (p[1] - lo_) / h_;
        int const iu = std::clamp(static_cast<int>(std::floor(fu)), 0, last);
        int const iv = std::clamp(static_cast<int>(std::floor(fv)), 0, last);
        double const tu = fu - iu;
        double const tv = fv - iv;
        auto const& s00 = grid_.at(iu, iv);
        auto const& s10 = grid_.at(iu + 1, iv);
        auto const& s01 = grid_.at(iu, iv + 1);
        auto const& s11 = grid_.at(iu + 1, iv + 1);
        auto blend = [&](double a, double b, double c, double d) {
            return (1 - tu) * (1 - tv) * a + tu * (1 - tv) * b
                   + (1 - tu) * tv * c + tu * tv * d;
        };
        return {blend(s00.j1, s10.j1, s01.j1, s11.j1),
                blend(s00.j2, s10.j2, s01.j2, s11.j2)};
    }

  private:
    FieldGrid const& grid_;
    double lo_;
    double hi_;
    double h_;
};

std::optional<PlanePoint>
direction(FluxInterpolator const& interp, PlanePoint const& p, double min_flux)
{
    if (!interp.contains(p))
        return std::nullopt;
    auto const j = interp(p);
    double const mag = std::hypot(j[0], j[1]);
    if (!(mag >= min_flux))
        return std::nullopt;
    return PlanePoint{j[0] / mag, j[1] / mag};
}

Polyline trace_one(FluxInterpolator const& interp,
                   PlanePoint seed,
                   double h,
                   StreamlineOptions const& opt)
{
    Polyline line;
    if (!direction(interp, seed, opt.min_flux))
        return line;
    line.push_back(seed);
    PlanePoint p = seed;
    auto offset = [](PlanePoint const& a, PlanePoint const& d, double s) {
        return PlanePoint{a[0] + s * d[0], a[1] + s * d[1]};
    };
    for (int step = 0; step < opt.max_steps; ++step)
    {
        auto const k1 = direction(interp, p, opt.min_flux);
        if (!k1)
            break;
        auto const k2 = direction(interp, offset(p, *k1, h / 2), opt.min_flux);
        if (!k2)
            break;
        auto const k3 = direction(interp, offset(p, *k2, h / 2), opt.min_flux);
        if (!k3)
            break;
        auto const k4 = direction(interp, offset(p, *k3, h), opt.min_flux);
        if (!k4)
            break;
        PlanePoint const next{
            p[0] + h / 6 * ((*k1)[0] + 2 * (*k2)[0] + 2 * (*k3)[0] + (*k4)[0]),
            p[1] + h / 6 * ((*k1)[1] + 2 * (*k2)[1] + 2 * (*k3)[1] + (*k4)[1])};
        if (!interp.contains(next))
            break;
        p = next;
        line.push_back(p);
    }
    return line;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::vector<Polyline> trace_streamlines(FieldGrid const& grid,
                                        std::span<PlanePoint const> seeds,
                                        StreamlineOptions const& options)
{
    FluxInterpolator const interp(grid);
    double const h = options.step_nm > 0 ? options.step_nm
                                         : 0.25 * grid.spacing();
    std::vector<Polyline> lines(seeds.size());
    parallel_for(seeds.size(), options.threads, [&](std::size_t i) {
        lines[i] = trace_one(interp, seeds[i], h, options);
    });
    return lines;
}

std::vector<PlanePoint> upstream_seeds(FieldGrid const& grid, int count)
{
    std::vector<PlanePoint> seeds;
    double const lo = grid.coordinate(0);
    double const hi = grid.coordinate(grid.resolution - 1);
    double const margin = 0.5 * grid.spacing();
    for (int i = 0; i < count; ++i)
    {
        double const t = (i + 0.5) / count;
        seeds.push_back({lo + margin + t * (hi - lo - 2 * margin), lo + margin});
    }
    return seeds;
}

FieldGrid reversed_flux(FieldGrid grid)
{
    for (auto& s : grid.samples)
    {
        s.j1 = -s.j1;
        s.j2 = -s.j2;
    }
    return grid;
}

nlohmann::json streamlines_to_json(std::vector<Polyline> const& lines,
                                   FieldGrid const& grid)
{
    nlohmann::json doc;
    doc["plane"] = grid.plane.to_string();
    auto const names = grid.plane.axis_names();
    doc["axes"] = {names[0], names[1]};
    auto& out = doc["streamlines"] = nlohmann::json::array();
    for (auto const& line : lines)
    {
        auto pts = nlohmann::json::array();
        for (auto const& p : line)
            pts.push_back({p[0], p[1]});
        out.push_back(std::move(pts));
    }
    return doc;
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
