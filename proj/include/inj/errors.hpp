#ifndef INJ_ERRORS_HPP
#define INJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace inj {

enum class Errc {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    EmptyGraph,
    SameEdge,
    PartialColoring,
    NotInjective,
    NotStarColoring,
    NoEdges,
    TooLarge,
    NotPathOrCycle,
    NotForest,
    NotBipartite,
    IsolatedVertex,
    DegreeTooLarge,
    DegreeTooSmall,
    PreconditionViolated,
    ReductionStalled,
    UnknownName,
    ParseError,
    FormatViolation,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::SameEdge: return "SameEdge";
    case Errc::PartialColoring: return "PartialColoring";
    case Errc::NotInjective: return "NotInjective";
    case Errc::NotStarColoring: return "NotStarColoring";
    case Errc::NoEdges: return "NoEdges";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotPathOrCycle: return "NotPathOrCycle";
    case Errc::NotForest: return "NotForest";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ReductionStalled: return "ReductionStalled";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ParseError: return "ParseError";
    case Errc::FormatViolation: return "FormatViolation";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace inj

#endif
