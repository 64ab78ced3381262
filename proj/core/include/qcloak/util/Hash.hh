//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/util/Hash.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qcloak
{
// 64-bit FNV-1a of a byte string
std::uint64_t fnv1a64(std::string_view bytes);

// FNV-1a as 16 lowercase hex digits
std::string hash_hex(std::string_view bytes);

// Seventeen significant digits, enough for an exact double round trip
std::string format_double(double value);
}  // namespace qcloak
