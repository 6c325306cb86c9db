#ifndef CYCLECOVER_ERRORS_HPP
#define CYCLECOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclecover {

// Common base so the CLI can map failures to exit codes in one place.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// graph-core
struct VertexNotOnHost : Error { using Error::Error; };
struct DegenerateSegment : Error { using Error::Error; };
struct BadIntersection : Error { using Error::Error; };
struct OrientationConflict : Error { using Error::Error; };
struct VertexAbsent : Error { using Error::Error; };
struct WouldCreateLoop : Error { using Error::Error; };

// bridges
struct HostNotACycle : Error { using Error::Error; };
struct NoSpanningTreeWithLeaves : Error { using Error::Error; };

// partition-digraph
struct InvalidPartition : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// tree-cover
struct PartitionMismatch : Error { using Error::Error; };

// cycle-family.  PreconditionViolated carries a short machine-readable reason
// token ("overlap-not-tree", "bridge-not-tree", ...) next to the prose message;
// the CLI prints the token so scripts do not have to parse sentences.
struct PreconditionViolated : Error {
    std::string reason;
    PreconditionViolated(std::string reason_token, const std::string& what)
        : Error(what), reason(std::move(reason_token)) {}
};
struct InternalRecursionInvariantBroken : Error { using Error::Error; };
struct BlockStructureNotFound : Error { using Error::Error; };
struct NoLeafSegment : Error { using Error::Error; };
struct WitnessScanFailed : Error { using Error::Error; };
struct ClaimCycleNotFound : Error { using Error::Error; };
struct GadgetOrientationConflict : Error { using Error::Error; };
struct XChoiceInvalid : Error { using Error::Error; };

// verifier
struct NotCertified : Error { using Error::Error; };

// instance-gen
struct GenerationFailed : Error { using Error::Error; };

// cli / serialization
struct MalformedDocument : Error { using Error::Error; };

}  // namespace cyclecover

#endif
