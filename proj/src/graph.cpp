#include "shacldl/graph.hpp"

#include <cassert>

namespace shacldl {

void Graph::add_fact(Name p, Name subject, Name object) {
    assert(p.kind == NameKind::Property);
    assert(subject.kind == NameKind::Node && object.kind == NameKind::Node);
    auto [it, inserted] = facts_.insert(Fact{p, subject, object});
    if (!inserted) return;
    nodes_.insert(subject);
    nodes_.insert(object);
    forward_[p][subject].insert(object);
    backward_[p][object].insert(subject);
}

std::set<Name> Graph::properties() const {
    std::set<Name> props;
    for (const auto& f : facts_) props.insert(f.prop);
    return props;
}

}  // namespace shacldl
