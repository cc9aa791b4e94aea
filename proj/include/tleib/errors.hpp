#pragma once

#include <stdexcept>
#include <string>

namespace tleib {

// Base for every error this library throws deliberately.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- scalar tower -----------------------------------------------------------
struct InvalidRoot : Error {
  using Error::Error;
};  // root 0 or 1 (after squarefree reduction)
struct DuplicateRoot : Error {
  using Error::Error;
};  // same squarefree core listed twice
struct DependentRoots : Error {
  using Error::Error;
};  // e.g. {2,3,6}: product of two roots is a square times the third
struct FieldMismatch : Error {
  using Error::Error;
};  // mixing values from different towers
struct DivisionByZero : Error {
  using Error::Error;
};
struct DenominatorVanishes : Error {
  using Error::Error;
};  // substitution lands on a zero denominator
struct MissingParameter : Error {
  using Error::Error;
};  // substitution without a binding for a live parameter

// --- finite-field reduction -------------------------------------------------
struct UnsupportedPrime : Error {
  using Error::Error;
};
struct RootHasNoResidue : Error {
  using Error::Error;
};  // adjoined root is a quadratic non-residue mod p
struct NonInvertibleDenominator : Error {
  using Error::Error;
};

// --- structures and operators -----------------------------------------------
struct DimensionMismatch : Error {
  using Error::Error;
};
struct WrongTupleArity : Error {
  using Error::Error;
};  // operator tuple length does not match the class
struct SingularMatrix : Error {
  using Error::Error;
};
struct NonlinearClass : Error {
  using Error::Error;
};  // linear solver asked for a quadratic identity
struct ParametricAlgebra : Error {
  using Error::Error;
};  // numeric routine on a structure with free parameters
struct SearchSpaceTooLarge : Error {
  using Error::Error;
};

// --- constructions ----------------------------------------------------------
struct PreconditionFailed : Error {
  using Error::Error;
};  // construction hypothesis violated (and not overridden)

// --- documents / CLI --------------------------------------------------------
struct SchemaError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct UndeclaredParameter : Error {
  using Error::Error;
};
struct UndeclaredRoot : Error {
  using Error::Error;
};
struct UnknownEntry : Error {
  using Error::Error;
};  // catalog id lookup failure

}  // namespace tleib
