#pragma once

#include <stdexcept>
#include <string>

namespace mgr {

// Base for everything the pipeline can throw on bad input or bad state.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input files (bad line, bad date, bad record).
class ParseError : public Error {
public:
    using Error::Error;
};

// Semantically invalid data (violated invariants, empty datasets, id clashes).
class DataError : public Error {
public:
    using Error::Error;
};

// Shape or coverage mismatches between declared and actual dimensions.
class DimensionError : public DataError {
public:
    using DataError::DataError;
};

// A required lookup key is absent.
class KeyError : public DataError {
public:
    using DataError::DataError;
};

// Non-finite values where finite ones are required (training aborts).
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace mgr
