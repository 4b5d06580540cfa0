#pragma once

#include <stdexcept>
#include <string>

namespace deforma {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linear algebra
struct SubspaceNotContained : Error { using Error::Error; };

// graded core
struct LengthMismatch : Error { using Error::Error; };
struct BadRange : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };

// hochschild
struct DimMismatch : Error { using Error::Error; };
struct BadPosition : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };

// deformations
struct NotAssociativeBase : Error { using Error::Error; };
struct InvalidDeformation : Error { using Error::Error; };
struct NotACocycle : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct BaseMismatch : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };
struct BaseNotCommutative : Error { using Error::Error; };
struct OrderTooLow : Error { using Error::Error; };

// homotopy algebras
struct NotAntisymmetric : Error { using Error::Error; };
struct TruncationTooSmall : Error { using Error::Error; };
struct FlavorMismatch : Error { using Error::Error; };
struct SourceNotMC : Error { using Error::Error; };

// serialization
struct SchemaError : Error { using Error::Error; };
struct FileNotFound : Error { using Error::Error; };

} // namespace deforma
