//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file model/Config.cc
//---------------------------------------------------------------------------//
#include "qcloak/model/Config.hh"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "qcloak/Error.hh"

namespace qcloak
{
namespace
{
using nlohmann::json;

double require_number(json const& obj, char const* key, std::string const& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigError(fmt::format("missing key '{}' in {}", key, where));
    if (!it->is_number())
        throw ConfigError(fmt::format("key '{}' in {} must be a number", key, where));
    return it->get<double>();
}

Medium medium_from_json(json const& obj, std::string const& where)
{
    if (!obj.is_object())
        throw ConfigError(where + " must be an object");
    Medium m;
    m.mass_me = require_number(obj, "mass_me", where);
    m.potential_eV = require_number(obj, "potential_eV", where);
    return m;
}
}  // namespace

//---------------------------------------------------------------------------//
LayerStack stack_from_json(json const& doc)
{
    if (!doc.is_object())
        throw ConfigError("configuration root must be an object");

    LayerStack stack;
    stack.energy_eV = require_number(doc, "energy_eV", "root");
    auto bg = doc.find("background");
    if (bg == doc.end())
        throw ConfigError("missing key 'background' in root");
    stack.background = medium_from_json(*bg, "background");

    auto layers = doc.find("layers");
    if (layers == doc.end() || !layers->is_array())
        throw ConfigError("key 'layers' must be an array");
    for (std::size_t i = 0; i < layers->size(); ++i)
    {
        std::string const where = fmt::format("layers[{}]", i);
        auto const& item = (*layers)[i];
        Layer layer;
        layer.medium = medium_from_json(item, where);
        layer.outer_radius_nm = require_number(item, "outer_radius_nm", where);
        stack.layers.push_back(layer);
    }
    return stack;
}

json stack_to_json(LayerStack const& stack)
{
    json doc;
    doc["energy_eV"] = stack.energy_eV;
    doc["background"] = {{"mass_me", stack.background.mass_me},
                         {"potential_eV", stack.background.potential_eV}};
    doc["layers"] = json::array();
    for (auto const& layer : stack.layers)
    {
        doc["layers"].push_back({{"mass_me", layer.medium.mass_me},
                                 {"potential_eV", layer.medium.potential_eV},
                                 {"outer_radius_nm", layer.outer_radius_nm}});
    }
    return doc;
}

//---------------------------------------------------------------------------//
ParsedConfig parse_config(std::string_view text)
{
    ParsedConfig out;
    out.text = std::string(text);
    try
    {
        out.document = json::parse(out.text);
    }
    catch (json::parse_error const& e)
    {
        throw ConfigError(fmt::format("JSON parse error at byte {}: {}",
                                      e.byte, e.what()),
                          static_cast<long>(e.byte));
    }
    out.stack = stack_from_json(out.document);
    return out;
}

ParsedConfig load_config(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open configuration file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

//---------------------------------------------------------------------------//
}  // namespace qcloak
