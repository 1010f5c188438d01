#pragma once

#include <stdexcept>
#include <string>

namespace tss {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (bad JSON, bad rational literal, unknown key, ...).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation requiring a valid surface was given an invalid one.
class InvalidSurfaceError : public Error {
 public:
  explicit InvalidSurfaceError(const std::string& what) : Error(what) {}
};

/// Brute-force search refused: input exceeds the configured size cap.
class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

/// A mapping class group value was requested outside the catalog.
class UncatalogedError : public Error {
 public:
  explicit UncatalogedError(const std::string& what) : Error(what) {}
};

/// Operand mismatch, unknown id, out-of-domain point, and similar misuse.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace tss
