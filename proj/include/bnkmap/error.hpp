#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnkmap
{

/// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An operation would produce an object larger than the configured cap.
class size_limit_error : public error
{
public:
  using error::error;
};

/// Operand dimensions are incompatible.
class dimension_error : public error
{
public:
  using error::error;
};

/// A node, variable or matrix index lies outside its valid range.
class index_error : public error
{
public:
  using error::error;
};

/// Malformed textual input. Line and column are 1-based.
class parse_error : public error
{
public:
  parse_error( const std::string& what, std::size_t line, std::size_t column )
      : error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + what ),
        line_( line ), column_( column ), message_( what )
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

} // namespace bnkmap
