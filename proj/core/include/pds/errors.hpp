#pragma once

#include <stdexcept>
#include <string>

namespace pds {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// group construction / quotient machinery
struct NotAGroupError : Error { using Error::Error; };
struct NotNormalError : Error { using Error::Error; };
struct NotElementaryAbelianError : Error { using Error::Error; };

// group-ring checks
struct LengthMismatchError : Error { using Error::Error; };
struct BadCardinalityError : Error { using Error::Error; };
struct NotInverseClosedError : Error { using Error::Error; };
struct NotDisjointError : Error { using Error::Error; };
struct NonIntegerLambdaError : Error { using Error::Error; };

// parameter validation
struct NonIntegerRootsError : Error { using Error::Error; };
struct BadParametersError : Error { using Error::Error; };

// search
struct NoElementaryAbelianImageError : Error { using Error::Error; };

// classification
struct PdsNotVerifiedError : Error { using Error::Error; };
struct AutGroupTooLargeError : Error { using Error::Error; };

// codecs and persistence
struct MalformedGraph6Error : Error { using Error::Error; };
struct MalformedHeaderError : Error { using Error::Error; };
struct RowLengthMismatchError : Error { using Error::Error; };
struct MissingManifestError : Error { using Error::Error; };
struct CorruptRecordError : Error { using Error::Error; };
struct InvalidActionError : Error { using Error::Error; };

} // namespace pds
