#ifndef RESFIELD_ERRORS_HPP
#define RESFIELD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resfield {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DescriptorMismatch : Error {
    DescriptorMismatch() : Error("operands belong to different coefficient fields") {}
    explicit DescriptorMismatch(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct NotInValuationRing : Error {
    explicit NotInValuationRing(const std::string& what = "element has negative valuation")
        : Error(what) {}
};

struct InfiniteEnumeration : Error {
    explicit InfiniteEnumeration(const std::string& what = "cannot enumerate an infinite field")
        : Error(what) {}
};

struct NotInfinitesimal : Error {
    explicit NotInfinitesimal(const std::string& what = "second argument must have positive valuation")
        : Error(what) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error(what) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable: " + name) {}
};

struct UnsupportedQuantifier : Error {
    explicit UnsupportedQuantifier(const std::string& what) : Error(what) {}
};

// Parse-time diagnostics carry a byte offset into the source text.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct SortError : Error {
    explicit SortError(const std::string& what) : Error(what) {}
};

}  // namespace resfield

#endif
