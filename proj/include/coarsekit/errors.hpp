#pragma once

#include <stdexcept>
#include <string>

namespace coarsekit {

/// Precondition violations: a caller handed us data outside the contract.
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was hit; the message names the cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An elementary homotopy move failed its side condition in the stated regime.
struct MoveRejectedError : std::runtime_error {
    explicit MoveRejectedError(const std::string& what) : std::runtime_error(what) {}
};

/// A serialized or replayed certificate does not check out.
struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

/// A combinator needed a table entry that was not supplied; names the element.
struct IncompleteDataError : std::runtime_error {
    explicit IncompleteDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coarsekit
