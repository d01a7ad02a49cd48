#pragma once

#include <stdexcept>
#include <string>

namespace ytcc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file (CSV/JSONL); message carries the offending row.
struct ParseError : Error {
    using Error::Error;
};

/// Violated data contract (unknown label, duplicate id, dimension mismatch).
struct SchemaError : Error {
    using Error::Error;
};

/// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

/// Persisted artifact has an unsupported format version.
struct VersionError : Error {
    using Error::Error;
};

/// Model/vocabulary fingerprint mismatch: refusing to predict.
struct FingerprintError : Error {
    using Error::Error;
};

/// Hyperparameter combination the implementation does not support
/// (e.g. l1/elasticnet penalties); grid search records these as skipped.
struct UnsupportedSpecError : Error {
    using Error::Error;
};

/// API rejected the credentials (HTTP 401/403).
struct CredentialError : Error {
    using Error::Error;
};

/// Retryable rate/quota error from the API.
struct QuotaError : Error {
    using Error::Error;
};

}  // namespace ytcc
