//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 the qcloak developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file qcloak/Error.hh
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace qcloak
{
//---------------------------------------------------------------------------//
//! Base class for all library errors.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Argument outside the mathematical domain of an operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

//! Input is legal but physically degenerate (e.g. zero wavenumber).
class DegenerateInputError : public Error
{
  public:
    using Error::Error;
};

//! Boundary-matching system is numerically singular.
class NumericalDegeneracyError : public Error
{
  public:
    NumericalDegeneracyError(std::string const& what, double condition)
        : Error(what), condition_(condition)
    {
    }

    double condition_estimate() const { return condition_; }

  private:
    double condition_;
};

//! Partial-wave series did not converge below the hard order cap.
class TruncationError : public Error
{
  public:
    using Error::Error;
};

//! Adaptive quadrature failed to reach its tolerance.
class QuadratureError : public Error
{
  public:
    QuadratureError(std::string const& what, double achieved)
        : Error(what), achieved_(achieved)
    {
    }

    double achieved_tolerance() const { return achieved_; }

  private:
    double achieved_;
};

//! Configuration text could not be parsed or has the wrong schema.
class ConfigError : public Error
{
  public:
    explicit ConfigError(std::string const& what, long byte_offset = -1)
        : Error(what), offset_(byte_offset)
    {
    }

    //! Byte offset of a parse failure, or -1 for schema errors
    long byte_offset() const { return offset_; }

  private:
    long offset_;
};

//---------------------------------------------------------------------------//
}  // namespace qcloak
