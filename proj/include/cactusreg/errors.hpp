#ifndef CACTUSREG_ERRORS_HPP
#define CACTUSREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cactusreg {

// Argument or input violates a documented precondition.
struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list text or a builder spec could not be parsed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A block is neither an edge, a clique, nor an induced cycle, so the
// bound formulas do not apply.
struct BlockKindUnsupported : std::runtime_error {
    explicit BlockKindUnsupported(const std::string& what) : std::runtime_error(what) {}
};

// Requested a peripheral cycle of a graph without cycle blocks of length >= 4.
struct NoBigCycle : std::runtime_error {
    explicit NoBigCycle(const std::string& what) : std::runtime_error(what) {}
};

// The block graph B(G) is not a path.
struct NotAChain : std::runtime_error {
    explicit NotAChain(const std::string& what) : std::runtime_error(what) {}
};

// Graph is outside the class a closed-form regularity formula covers.
struct ClassMismatch : std::runtime_error {
    explicit ClassMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds an oracle's vertex cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cactusreg

#endif  // CACTUSREG_ERRORS_HPP
