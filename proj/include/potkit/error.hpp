#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potkit {

/// Base of every exception thrown by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error
{
public:
  parse_error( const std::string& what, std::size_t position )
      : error( what + " at position " + std::to_string( position ) ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class unknown_atom_error : public error
{
public:
  explicit unknown_atom_error( const std::string& atom )
      : error( "unknown atom '" + atom + "'" ), atom_( atom )
  {
  }

  const std::string& atom() const noexcept { return atom_; }

private:
  std::string atom_;
};

class world_range_error : public error
{
public:
  using error::error;
};

class arity_error : public error
{
public:
  using error::error;
};

/// An exhaustive search would exceed its configured size limit.
class budget_exceeded : public error
{
public:
  budget_exceeded( const std::string& what, double required )
      : error( what ), required_( required )
  {
  }

  /// Size of the enumeration that was refused (may be approximate for huge values).
  double required() const noexcept { return required_; }

private:
  double required_;
};

class invalid_structure : public error
{
public:
  using error::error;
};

} // namespace potkit
