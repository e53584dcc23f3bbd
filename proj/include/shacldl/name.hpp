#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace shacldl {

enum class NameKind { Node, Shape, Property };

// An identifier from one of the three symbol universes. Equality and
// ordering are on (text, kind); the kind never changes after creation.
struct Name {
    std::string text;
    NameKind kind;

    friend auto operator<=>(const Name&, const Name&) = default;
};

inline Name node_name(std::string text) { return {std::move(text), NameKind::Node}; }
inline Name shape_name(std::string text) { return {std::move(text), NameKind::Shape}; }
inline Name property_name(std::string text) { return {std::move(text), NameKind::Property}; }

// An element of a finite interpretation domain: either a node name or the
// distinguished symbolic element standing for "any fresh node". The symbolic
// element sorts after every name, so violation listings put it last.
class DomainElement {
public:
    static DomainElement star() { return DomainElement(); }
    explicit DomainElement(Name n) : name_(std::move(n)) {}

    bool is_star() const { return !name_.has_value(); }
    const Name& name() const { return *name_; }

    // Rendering used in reports; the symbolic element is never a valid node name.
    std::string text() const { return is_star() ? "*" : name_->text; }

    friend bool operator==(const DomainElement& a, const DomainElement& b) {
        return a.name_ == b.name_;
    }
    friend std::strong_ordering operator<=>(const DomainElement& a, const DomainElement& b) {
        if (a.is_star() != b.is_star())
            return a.is_star() ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.is_star()) return std::strong_ordering::equal;
        return *a.name_ <=> *b.name_;
    }

private:
    DomainElement() = default;
    std::optional<Name> name_;
};

}  // namespace shacldl
