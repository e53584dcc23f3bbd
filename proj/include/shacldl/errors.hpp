#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shacldl/name.hpp"

namespace shacldl {

struct SourceLocation {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
    friend auto operator<=>(const SourceLocation&, const SourceLocation&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceLocation loc, const std::string& message)
        : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
                             ": " + message),
          loc_(loc) {}

    SourceLocation location() const { return loc_; }

private:
    SourceLocation loc_;
};

// Raised when shape definitions depend on each other in a cycle. Recursive
// schemas are deliberately rejected everywhere.
class CyclicSchema : public std::runtime_error {
public:
    explicit CyclicSchema(std::vector<Name> cycle)
        : std::runtime_error(describe(cycle)), cycle_(std::move(cycle)) {}

    const std::vector<Name>& cycle() const { return cycle_; }

private:
    static std::string describe(const std::vector<Name>& cycle) {
        std::string s = "cyclic shape definitions:";
        for (const auto& n : cycle) s += " " + n.text;
        return s;
    }
    std::vector<Name> cycle_;
};

class UnsupportedConstruct : public std::runtime_error {
public:
    UnsupportedConstruct(std::string term, SourceLocation loc)
        : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
                             ": unsupported construct " + term),
          term_(std::move(term)),
          loc_(loc) {}

    const std::string& term() const { return term_; }
    SourceLocation location() const { return loc_; }

private:
    std::string term_;
    SourceLocation loc_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundShapeName : public EvalError {
public:
    explicit UnboundShapeName(const Name& s)
        : EvalError("shape name has no interpretation: " + s.text), name_(s) {}
    const Name& name() const { return name_; }

private:
    Name name_;
};

class ConstantNotInterpreted : public EvalError {
public:
    explicit ConstantNotInterpreted(const Name& c)
        : EvalError("constant has no interpretation: " + c.text), name_(c) {}
    const Name& name() const { return name_; }

private:
    Name name_;
};

class ElementNotInDomain : public EvalError {
public:
    explicit ElementNotInDomain(const DomainElement& e)
        : EvalError("element not in domain: " + e.text()) {}
};

}  // namespace shacldl
