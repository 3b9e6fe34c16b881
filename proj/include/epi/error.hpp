#pragma once

#include <stdexcept>
#include <string>

namespace epi {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define EPI_DECLARE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {} \
    }

EPI_DECLARE_ERROR(DanglingWorldRef);
EPI_DECLARE_ERROR(DuplicateWorld);
EPI_DECLARE_ERROR(UnknownWorld);
EPI_DECLARE_ERROR(UnknownAgent);
EPI_DECLARE_ERROR(AgentMismatch);
EPI_DECLARE_ERROR(DanglingEventRef);
EPI_DECLARE_ERROR(NotApplicable);
EPI_DECLARE_ERROR(UnknownActionName);
EPI_DECLARE_ERROR(NotAMatch);
EPI_DECLARE_ERROR(IllegalFlavor);
EPI_DECLARE_ERROR(UnknownShorthand);
EPI_DECLARE_ERROR(InvalidProblem);
EPI_DECLARE_ERROR(NotEuclidean);
EPI_DECLARE_ERROR(NotSingleAgent);
EPI_DECLARE_ERROR(FormatError);

#undef EPI_DECLARE_ERROR

/// Raised by the formula parser; carries the byte offset of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string &msg, std::size_t pos)
        : Error("SyntaxError at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// An event precondition exceeds the event model's depth bound.
class DepthExceeded : public Error {
public:
    DepthExceeded(const std::string &event, int depth)
        : Error("DepthExceeded: event " + event + " has modal depth " + std::to_string(depth)),
          event_(event), depth_(depth) {}
    const std::string &event() const noexcept { return event_; }
    int depth() const noexcept { return depth_; }

private:
    std::string event_;
    int depth_;
};

} // namespace epi
