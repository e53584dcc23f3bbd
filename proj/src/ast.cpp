#include "shacldl/ast.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace shacldl {

namespace {

PathPtr make_path(PathExpr e) { return std::make_shared<const PathExpr>(std::move(e)); }
ShapePtr make_shape(ShapeExpr e) { return std::make_shared<const ShapeExpr>(std::move(e)); }

}  // namespace

PathPtr path_prop(Name p) {
    assert(p.kind == NameKind::Property);
    return make_path({PathExpr::Op::Prop, std::move(p), nullptr, nullptr});
}

PathPtr path_inverse(Name p) {
    assert(p.kind == NameKind::Property);
    return make_path({PathExpr::Op::Inverse, std::move(p), nullptr, nullptr});
}

PathPtr path_union(PathPtr a, PathPtr b) {
    return make_path({PathExpr::Op::Union, {}, std::move(a), std::move(b)});
}

PathPtr path_compose(PathPtr a, PathPtr b) {
    return make_path({PathExpr::Op::Compose, {}, std::move(a), std::move(b)});
}

PathPtr path_star(PathPtr e) {
    return make_path({PathExpr::Op::Star, {}, std::move(e), nullptr});
}

PathPtr path_optional(PathPtr e) {
    return make_path({PathExpr::Op::Optional, {}, std::move(e), nullptr});
}

bool equal(const PathExpr& a, const PathExpr& b) {
    if (a.op != b.op) return false;
    switch (a.op) {
        case PathExpr::Op::Prop:
        case PathExpr::Op::Inverse:
            return a.prop == b.prop;
        case PathExpr::Op::Union:
        case PathExpr::Op::Compose:
            return equal(*a.left, *b.left) && equal(*a.right, *b.right);
        case PathExpr::Op::Star:
        case PathExpr::Op::Optional:
            return equal(*a.left, *b.left);
    }
    return false;
}

ShapePtr shape_top() {
    static const ShapePtr top = make_shape({ShapeExpr::Op::Top});
    return top;
}

ShapePtr shape_ref(Name s) {
    assert(s.kind == NameKind::Shape);
    ShapeExpr e{ShapeExpr::Op::Ref};
    e.name = std::move(s);
    return make_shape(std::move(e));
}

ShapePtr shape_constant(Name c) {
    assert(c.kind == NameKind::Node);
    ShapeExpr e{ShapeExpr::Op::Constant};
    e.name = std::move(c);
    return make_shape(std::move(e));
}

ShapePtr shape_and(ShapePtr a, ShapePtr b) {
    ShapeExpr e{ShapeExpr::Op::And};
    e.left = std::move(a);
    e.right = std::move(b);
    return make_shape(std::move(e));
}

ShapePtr shape_or(ShapePtr a, ShapePtr b) {
    ShapeExpr e{ShapeExpr::Op::Or};
    e.left = std::move(a);
    e.right = std::move(b);
    return make_shape(std::move(e));
}

ShapePtr shape_not(ShapePtr a) {
    ShapeExpr e{ShapeExpr::Op::Not};
    e.left = std::move(a);
    return make_shape(std::move(e));
}

ShapePtr shape_at_least(std::uint32_t n, PathPtr path, ShapePtr body) {
    if (n == 0) throw std::invalid_argument("counting quantifier requires n >= 1");
    ShapeExpr e{ShapeExpr::Op::AtLeast};
    e.count = n;
    e.path = std::move(path);
    e.left = std::move(body);
    return make_shape(std::move(e));
}

ShapePtr shape_eq(Name p, PathPtr path) {
    assert(p.kind == NameKind::Property);
    ShapeExpr e{ShapeExpr::Op::Eq};
    e.name = std::move(p);
    e.path = std::move(path);
    return make_shape(std::move(e));
}

ShapePtr shape_disj(Name p, PathPtr path) {
    assert(p.kind == NameKind::Property);
    ShapeExpr e{ShapeExpr::Op::Disj};
    e.name = std::move(p);
    e.path = std::move(path);
    return make_shape(std::move(e));
}

ShapePtr shape_closed(std::vector<Name> props) {
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    ShapeExpr e{ShapeExpr::Op::Closed};
    e.closed_props = std::move(props);
    return make_shape(std::move(e));
}

ShapePtr shape_forall(PathPtr path, ShapePtr body) {
    ShapeExpr e{ShapeExpr::Op::Forall};
    e.path = std::move(path);
    e.left = std::move(body);
    return make_shape(std::move(e));
}

ShapePtr shape_exists(PathPtr path, ShapePtr body) {
    ShapeExpr e{ShapeExpr::Op::Exists};
    e.path = std::move(path);
    e.left = std::move(body);
    return make_shape(std::move(e));
}

bool equal(const ShapeExpr& a, const ShapeExpr& b) {
    if (a.op != b.op) return false;
    switch (a.op) {
        case ShapeExpr::Op::Top:
            return true;
        case ShapeExpr::Op::Ref:
        case ShapeExpr::Op::Constant:
            return a.name == b.name;
        case ShapeExpr::Op::And:
        case ShapeExpr::Op::Or:
            return equal(*a.left, *b.left) && equal(*a.right, *b.right);
        case ShapeExpr::Op::Not:
            return equal(*a.left, *b.left);
        case ShapeExpr::Op::AtLeast:
            return a.count == b.count && equal(*a.path, *b.path) && equal(*a.left, *b.left);
        case ShapeExpr::Op::Eq:
        case ShapeExpr::Op::Disj:
            return a.name == b.name && equal(*a.path, *b.path);
        case ShapeExpr::Op::Closed:
            return a.closed_props == b.closed_props;
        case ShapeExpr::Op::Forall:
        case ShapeExpr::Op::Exists:
            return equal(*a.path, *b.path) && equal(*a.left, *b.left);
    }
    return false;
}

ShapePtr desugar(const ShapePtr& shape) {
    switch (shape->op) {
        case ShapeExpr::Op::Top:
        case ShapeExpr::Op::Ref:
        case ShapeExpr::Op::Constant:
        case ShapeExpr::Op::Eq:
        case ShapeExpr::Op::Disj:
        case ShapeExpr::Op::Closed:
            return shape;
        case ShapeExpr::Op::And: {
            auto l = desugar(shape->left);
            auto r = desugar(shape->right);
            if (l == shape->left && r == shape->right) return shape;
            return shape_and(std::move(l), std::move(r));
        }
        case ShapeExpr::Op::Or: {
            auto l = desugar(shape->left);
            auto r = desugar(shape->right);
            if (l == shape->left && r == shape->right) return shape;
            return shape_or(std::move(l), std::move(r));
        }
        case ShapeExpr::Op::Not: {
            auto l = desugar(shape->left);
            if (l == shape->left) return shape;
            return shape_not(std::move(l));
        }
        case ShapeExpr::Op::AtLeast: {
            auto body = desugar(shape->left);
            if (body == shape->left) return shape;
            return shape_at_least(shape->count, shape->path, std::move(body));
        }
        case ShapeExpr::Op::Forall:
            return shape_not(shape_at_least(1, shape->path, shape_not(desugar(shape->left))));
        case ShapeExpr::Op::Exists:
            return shape_at_least(1, shape->path, desugar(shape->left));
    }
    return shape;
}

}  // namespace shacldl
