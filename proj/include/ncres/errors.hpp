#pragma once

#include <stdexcept>
#include <string>

namespace ncres {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

class IncompleteAssignment : public Error {
public:
  explicit IncompleteAssignment(const std::string& symbol)
      : Error("assignment does not cover symbol " + symbol) {}
};

/// Raised when a projection or contour integral receives a function with a
/// nonzero polynomial part.
class NonDecayingInput : public Error {
public:
  explicit NonDecayingInput(const std::string& what) : Error(what) {}
};

class InsufficientDecay : public Error {
public:
  explicit InsufficientDecay(const std::string& what) : Error(what) {}
};

class UnsupportedWord : public Error {
public:
  explicit UnsupportedWord(const std::string& what) : Error(what) {}
};

class UndefinedPairing : public Error {
public:
  explicit UndefinedPairing(const std::string& what) : Error(what) {}
};

class UnsupportedSymbol : public Error {
public:
  explicit UnsupportedSymbol(const std::string& what) : Error(what) {}
};

class InvalidCase : public Error {
public:
  explicit InvalidCase(const std::string& what) : Error(what) {}
};

class ConstructionError : public Error {
public:
  explicit ConstructionError(const std::string& what) : Error(what) {}
};

class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace ncres
