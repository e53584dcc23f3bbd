#include <cctype>
#include <set>
#include <sstream>

#include "shacldl/dsl.hpp"

namespace shacldl {

namespace {

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words{
        "shape", "target", "targetNode", "targetSubjectsOf", "targetObjectsOf",
        "targetClass", "top", "exists", "forall", "eq", "disj", "closed"};
    return words;
}

bool bare_printable(const std::string& text) {
    if (text.empty() || reserved_words().count(text)) return false;
    if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_') return false;
    for (char c : text)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != ':' && c != '-')
            return false;
    return true;
}

std::string render_name(const Name& n) {
    return bare_printable(n.text) ? n.text : "<" + n.text + ">";
}

// Path precedence levels: 0 union, 1 compose, 2 postfix/primary.
void print_path(std::ostream& out, const PathExpr& path, int min_level) {
    int level;
    switch (path.op) {
        case PathExpr::Op::Union: level = 0; break;
        case PathExpr::Op::Compose: level = 1; break;
        default: level = 2; break;
    }
    bool parens = level < min_level;
    if (parens) out << "(";
    switch (path.op) {
        case PathExpr::Op::Prop:
            out << render_name(path.prop);
            break;
        case PathExpr::Op::Inverse:
            out << "^" << render_name(path.prop);
            break;
        case PathExpr::Op::Union:
            print_path(out, *path.left, 0);
            out << " | ";
            print_path(out, *path.right, 1);
            break;
        case PathExpr::Op::Compose:
            print_path(out, *path.left, 1);
            out << "/";
            print_path(out, *path.right, 2);
            break;
        case PathExpr::Op::Star:
            print_path(out, *path.left, 2);
            // a postfix chain like p*? reprints without extra parens
            out << "*";
            break;
        case PathExpr::Op::Optional:
            print_path(out, *path.left, 2);
            out << "?";
            break;
    }
    if (parens) out << ")";
}

// Shape precedence levels: 0 or, 1 and, 2 unary/atom.
void print_shape(std::ostream& out, const ShapeExpr& shape, int min_level) {
    int level;
    switch (shape.op) {
        case ShapeExpr::Op::Or: level = 0; break;
        case ShapeExpr::Op::And: level = 1; break;
        default: level = 2; break;
    }
    bool parens = level < min_level;
    if (parens) out << "(";
    switch (shape.op) {
        case ShapeExpr::Op::Top:
            out << "top";
            break;
        case ShapeExpr::Op::Ref:
            out << render_name(shape.name);
            break;
        case ShapeExpr::Op::Constant:
            out << "{" << render_name(shape.name) << "}";
            break;
        case ShapeExpr::Op::Or:
            print_shape(out, *shape.left, 0);
            out << " | ";
            print_shape(out, *shape.right, 1);
            break;
        case ShapeExpr::Op::And:
            print_shape(out, *shape.left, 1);
            out << " & ";
            print_shape(out, *shape.right, 2);
            break;
        case ShapeExpr::Op::Not:
            out << "!";
            print_shape(out, *shape.left, 2);
            break;
        case ShapeExpr::Op::AtLeast:
            out << ">= " << shape.count << " ";
            print_path(out, *shape.path, 0);
            out << " . ";
            print_shape(out, *shape.left, 2);
            break;
        case ShapeExpr::Op::Eq:
        case ShapeExpr::Op::Disj:
            out << (shape.op == ShapeExpr::Op::Eq ? "eq(" : "disj(")
                << render_name(shape.name) << ", ";
            print_path(out, *shape.path, 0);
            out << ")";
            break;
        case ShapeExpr::Op::Closed: {
            out << "closed(";
            bool first = true;
            for (const auto& p : shape.closed_props) {
                if (!first) out << ", ";
                out << render_name(p);
                first = false;
            }
            out << ")";
            break;
        }
        case ShapeExpr::Op::Forall:
        case ShapeExpr::Op::Exists:
            // serializer emits core syntax only
            print_shape(out, *desugar(std::make_shared<const ShapeExpr>(shape)), min_level);
            return;
    }
    if (parens) out << ")";
}

}  // namespace

std::string serialize_path(const PathExpr& path) {
    std::ostringstream out;
    print_path(out, path, 0);
    return out.str();
}

std::string serialize_shape(const ShapeExpr& shape) {
    std::ostringstream out;
    print_shape(out, shape, 0);
    return out.str();
}

std::string serialize_schema(const ShapeSchema& schema) {
    std::ostringstream out;
    for (const auto& [s, body] : schema.definitions()) {
        out << "shape " << render_name(s) << " := ";
        print_shape(out, *desugar(body), 0);
        out << " .\n";
    }
    for (const auto& t : schema.targets()) {
        out << "target ";
        print_shape(out, *desugar(t.lhs), 0);
        out << " <= ";
        print_shape(out, *desugar(t.rhs), 0);
        out << " .\n";
    }
    return out.str();
}

}  // namespace shacldl
