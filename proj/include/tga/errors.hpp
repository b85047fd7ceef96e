#pragma once

#include <stdexcept>
#include <string>

namespace tga {

// Base class for all validation and input errors raised by the library.
// Every subclass message names the offending element, pair, or triple.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// groupoid construction
struct MissingComposite : Error { using Error::Error; };
struct NonAssociative : Error { using Error::Error; };
struct BadUnit : Error { using Error::Error; };
struct BadInverse : Error { using Error::Error; };
struct BadTable : Error { using Error::Error; };
struct BadAction : Error { using Error::Error; };
struct UnknownElement : Error { using Error::Error; };
struct UnknownUnit : Error { using Error::Error; };
struct NotASubgroupoid : Error { using Error::Error; };

// cocycles and twists
struct CocycleIdentityViolation : Error { using Error::Error; };
struct NormalizationViolation : Error { using Error::Error; };
struct NonComposablePair : Error { using Error::Error; };
struct NonComposable : Error { using Error::Error; };

// convolution algebra
struct ContextMismatch : Error { using Error::Error; };
struct SupportViolation : Error { using Error::Error; };

// representations and homomorphisms
struct ClosureFailure : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct ToleranceAmbiguity : Error { using Error::Error; };
struct RelationViolation : Error { using Error::Error; };
struct NotAGroup : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct UnvalidatedHom : Error { using Error::Error; };

// states
struct NotAState : Error { using Error::Error; };
struct NotASubalgebra : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };

// file formats
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column = 0)
        : Error(what + " (line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : "") + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

} // namespace tga
