#pragma once

#include <stdexcept>
#include <string>

namespace obls {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NonFiniteInput : public Error {
public:
    using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

/// A triangular factor has a diagonal entry too small to divide by.
class SingularFactor : public Error {
public:
    using Error::Error;
};

/// Gauss-Jordan inversion hit a pivot below threshold.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

class InvalidDimension : public Error {
public:
    using Error::Error;
};

class InvalidLambda : public Error {
public:
    using Error::Error;
};

class InvalidDecay : public Error {
public:
    using Error::Error;
};

/// Label index outside [0, num_classes) or a target vector that is not one-hot.
class InvalidLabel : public Error {
public:
    using Error::Error;
};

class EmptyMatrix : public Error {
public:
    using Error::Error;
};

class EmptyHistory : public Error {
public:
    using Error::Error;
};

class FileNotFound : public Error {
public:
    using Error::Error;
};

class SchemaMismatch : public Error {
public:
    using Error::Error;
};

class EmptyAfterCleaning : public Error {
public:
    using Error::Error;
};

class IncompatibleConfigs : public Error {
public:
    using Error::Error;
};

/// One or more trials of an experiment failed; message lists them.
class PartialFailure : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace obls
