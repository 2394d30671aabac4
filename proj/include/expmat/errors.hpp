#ifndef EXPMAT_ERRORS_HPP
#define EXPMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expmat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different fields.
class FieldMismatch : public Error {
   public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

/// Invalid field parameters (non-prime characteristic, overflow, ...).
class BadField : public Error {
   public:
    using Error::Error;
};

class SizeMismatch : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero") {}
};

/// det(A) is not a nonzero constant, so A has no inverse over k[T].
class NotUnimodular : public Error {
   public:
    NotUnimodular() : Error("determinant is not a nonzero constant") {}
};

class NotNilpotent : public Error {
   public:
    using Error::Error;
};

/// Matrices of a tuple fail to commute.
class NotCommuting : public Error {
   public:
    using Error::Error;
};

/// Layer peeling found an inconsistent residue; the input was not exponential.
class FactorResidue : public Error {
   public:
    using Error::Error;
};

class DetNotUnit : public Error {
   public:
    DetNotUnit() : Error("determinant is not a unit of k[T]") {}
};

/// A projective representative is not a scalar matrix at T = 0.
class NotScalarAtZero : public Error {
   public:
    NotScalarAtZero() : Error("representative is not a nonzero scalar matrix at T = 0") {}
};

class SingularWitness : public Error {
   public:
    SingularWitness() : Error("witness matrix is singular") {}
};

class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

class LengthMismatch : public Error {
   public:
    using Error::Error;
};

/// Requested computation needs a finite field.
class NeedsFiniteField : public Error {
   public:
    using Error::Error;
};

}  // namespace expmat

#endif  // EXPMAT_ERRORS_HPP
