#include "shacldl/reference.hpp"

#include <algorithm>

#include "shacldl/natural.hpp"

namespace shacldl {

namespace {

using NameSet = std::set<Name>;

NameSet names_of(const NodeSet& elements) {
    NameSet out;
    for (const auto& e : elements)
        if (!e.is_star()) out.insert(e.name());
    return out;
}

// Shape evaluation over domain N_G, with the constant exception at the leaf.
struct ActiveEval {
    const Vocabulary& sigma;
    const NameSet& graph_nodes;
    Evaluator& paths;
    const std::map<Name, NameSet>& env;

    NameSet reached(const PathExpr& path, const Name& a) const {
        return names_of(paths.eval_path_from(path, DomainElement(a)));
    }

    NameSet eval(const ShapeExpr& shape) const {
        switch (shape.op) {
            case ShapeExpr::Op::Top:
                return graph_nodes;
            case ShapeExpr::Op::Constant:
                return {shape.name};  // even when absent from the graph
            case ShapeExpr::Op::Ref: {
                auto it = env.find(shape.name);
                return it == env.end() ? graph_nodes : it->second;
            }
            case ShapeExpr::Op::And: {
                NameSet l = eval(*shape.left), r = eval(*shape.right), out;
                std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                                      std::inserter(out, out.end()));
                return out;
            }
            case ShapeExpr::Op::Or: {
                NameSet out = eval(*shape.left);
                for (const auto& n : eval(*shape.right)) out.insert(n);
                return out;
            }
            case ShapeExpr::Op::Not: {
                NameSet inner = eval(*shape.left), out;
                for (const auto& n : graph_nodes)
                    if (!inner.count(n)) out.insert(n);
                return out;
            }
            case ShapeExpr::Op::AtLeast: {
                NameSet body = eval(*shape.left), out;
                for (const auto& a : graph_nodes) {
                    NameSet r = reached(*shape.path, a), hit;
                    std::set_intersection(body.begin(), body.end(), r.begin(), r.end(),
                                          std::inserter(hit, hit.end()));
                    if (hit.size() >= shape.count) out.insert(a);
                }
                return out;
            }
            case ShapeExpr::Op::Exists: {
                NameSet body = eval(*shape.left), out;
                for (const auto& a : graph_nodes) {
                    for (const auto& b : reached(*shape.path, a))
                        if (body.count(b)) { out.insert(a); break; }
                }
                return out;
            }
            case ShapeExpr::Op::Forall: {
                NameSet body = eval(*shape.left), out;
                for (const auto& a : graph_nodes) {
                    bool all = true;
                    for (const auto& b : reached(*shape.path, a))
                        if (!body.count(b)) { all = false; break; }
                    if (all) out.insert(a);
                }
                return out;
            }
            case ShapeExpr::Op::Eq: {
                NameSet out;
                for (const auto& a : graph_nodes)
                    if (names_of(paths.eval_path_from(*path_prop_expr(shape.name),
                                                      DomainElement(a))) ==
                        reached(*shape.path, a))
                        out.insert(a);
                return out;
            }
            case ShapeExpr::Op::Disj: {
                NameSet out;
                for (const auto& a : graph_nodes) {
                    NameSet p = names_of(paths.eval_path_from(*path_prop_expr(shape.name),
                                                              DomainElement(a)));
                    NameSet r = reached(*shape.path, a);
                    bool dis = true;
                    for (const auto& b : p)
                        if (r.count(b)) { dis = false; break; }
                    if (dis) out.insert(a);
                }
                return out;
            }
            case ShapeExpr::Op::Closed: {
                NameSet out;
                for (const auto& a : graph_nodes) {
                    bool closed = true;
                    for (const auto& p : sigma.property_names) {
                        if (std::binary_search(shape.closed_props.begin(),
                                               shape.closed_props.end(), p))
                            continue;
                        if (!names_of(paths.eval_path_from(*path_prop_expr(p),
                                                           DomainElement(a)))
                                 .empty()) {
                            closed = false;
                            break;
                        }
                    }
                    if (closed) out.insert(a);
                }
                return out;
            }
        }
        return {};
    }

private:
    static PathPtr path_prop_expr(const Name& p) { return path_prop(p); }
};

FiniteInterpretation graph_interpretation(const Graph& graph) {
    FiniteInterpretation interp;
    for (const auto& n : graph.nodes()) interp.add_element(DomainElement(n));
    for (const auto& n : graph.nodes()) interp.set_constant(n, DomainElement(n));
    for (const auto& f : graph.facts())
        interp.add_edge(f.prop, DomainElement(f.subject), DomainElement(f.object));
    return interp;
}

std::map<Name, NameSet> active_extension(const Graph& graph, const ShapeSchema& schema,
                                         const Vocabulary& sigma, Evaluator& paths,
                                         const NameSet& graph_nodes) {
    std::map<Name, NameSet> env;
    for (const auto& s : dependency_order(schema)) {
        ActiveEval ev{sigma, graph_nodes, paths, env};
        env[s] = ev.eval(*schema.definitions().at(s));
    }
    return env;
}

void merge_vocab(Vocabulary& sigma, const Vocabulary& extra) {
    for (const auto& n : extra.node_names) sigma.insert(n);
    for (const auto& n : extra.shape_names) sigma.insert(n);
    for (const auto& n : extra.property_names) sigma.insert(n);
}

std::vector<Name> fresh_names(int count, const NameSet& taken) {
    std::vector<Name> out;
    for (int k = 1; k <= count; ++k) {
        Name candidate = node_name("_fresh" + std::to_string(k));
        while (taken.count(candidate)) candidate.text += "_";
        out.push_back(std::move(candidate));
    }
    return out;
}

}  // namespace

std::set<Name> active_domain_eval(const ShapeExpr& shape, const Graph& graph,
                                  const ShapeSchema& schema) {
    Vocabulary sigma = vocabulary_of(schema, graph);
    collect_names(shape, sigma);
    FiniteInterpretation interp = graph_interpretation(graph);
    Evaluator paths(interp, sigma);
    const NameSet& ng = graph.nodes();
    auto env = active_extension(graph, schema, sigma, paths, ng);
    ActiveEval ev{sigma, ng, paths, env};
    return ev.eval(shape);
}

ConformanceReport active_domain_validate(const Graph& graph, const ShapeSchema& schema,
                                         const Vocabulary& extra) {
    Vocabulary sigma = vocabulary_of(schema, graph);
    merge_vocab(sigma, extra);
    FiniteInterpretation interp = graph_interpretation(graph);
    Evaluator paths(interp, sigma);
    const NameSet& ng = graph.nodes();
    auto env = active_extension(graph, schema, sigma, paths, ng);
    ActiveEval ev{sigma, ng, paths, env};

    ConformanceReport report;
    int index = 0;
    for (const auto& target : schema.targets()) {
        NameSet lhs = ev.eval(*target.lhs);
        NameSet rhs = ev.eval(*target.rhs);
        for (const auto& focus : lhs)
            if (!rhs.count(focus))
                report.violations.push_back(
                    {index, DomainElement(focus), target.lhs, target.rhs});
        ++index;
    }
    report.conforms = report.violations.empty();
    return report;
}

ConformanceReport brute_force_validate(const Graph& graph, const ShapeSchema& schema,
                                       int fresh_count, const Vocabulary& extra) {
    Vocabulary sigma = vocabulary_of(schema, graph);
    merge_vocab(sigma, extra);

    NameSet taken = graph.nodes();
    taken.insert(sigma.node_names.begin(), sigma.node_names.end());

    FiniteInterpretation interp;
    for (const auto& n : taken) interp.add_element(DomainElement(n));
    for (const auto& n : fresh_names(fresh_count, taken)) interp.add_element(DomainElement(n));
    for (const auto& e : interp.domain()) interp.set_constant(e.name(), e);
    for (const auto& f : graph.facts())
        interp.add_edge(f.prop, DomainElement(f.subject), DomainElement(f.object));

    return check_conformance(interp, schema, sigma);
}

std::vector<SemanticsDiff> diff_semantics(const Graph& graph, const ShapeSchema& schema,
                                          const Vocabulary& extra) {
    ConformanceReport natural = validate(graph, schema, extra);
    ConformanceReport active = active_domain_validate(graph, schema, extra);

    std::vector<SemanticsDiff> diffs;
    for (int i = 0; i < static_cast<int>(schema.targets().size()); ++i) {
        NodeSet nat_foci, act_foci;
        for (const auto& v : natural.violations)
            if (v.target_index == i) nat_foci.insert(v.focus);
        for (const auto& v : active.violations)
            if (v.target_index == i) act_foci.insert(v.focus);
        bool nat_ok = nat_foci.empty();
        bool act_ok = act_foci.empty();
        if (nat_ok == act_ok) continue;

        SemanticsDiff diff{i, nat_ok, act_ok, std::nullopt};
        for (const auto& e : nat_ok ? act_foci : nat_foci) {
            const NodeSet& other = nat_ok ? nat_foci : act_foci;
            if (!other.count(e)) { diff.witness = e; break; }
        }
        diffs.push_back(std::move(diff));
    }
    return diffs;
}

Theorem1Result check_theorem1(const Graph& graph, const ShapeSchema& schema, int max_fresh,
                              const Vocabulary& extra) {
    Theorem1Result result;
    ConformanceReport natural = validate(graph, schema, extra);
    for (int m = 1; m <= max_fresh; ++m) {
        ConformanceReport bf = brute_force_validate(graph, schema, m, extra);
        if (bf.conforms != natural.conforms) {
            result.passed = false;
            result.evidence = "conformance mismatch at fresh_count=" + std::to_string(m) +
                              ": star=" + (natural.conforms ? "true" : "false") +
                              " brute=" + (bf.conforms ? "true" : "false");
            return result;
        }
    }

    // Per-shape membership of named elements must coincide as well.
    Vocabulary sigma = vocabulary_of(schema, graph);
    merge_vocab(sigma, extra);
    StarContext ctx = star_interpretation(graph, sigma);
    FiniteInterpretation star_ext =
        extend_interpretation(ctx.interpretation, schema.definitions(), sigma);

    NameSet taken = graph.nodes();
    taken.insert(sigma.node_names.begin(), sigma.node_names.end());
    FiniteInterpretation bf_interp;
    for (const auto& n : taken) bf_interp.add_element(DomainElement(n));
    for (const auto& n : fresh_names(1, taken)) bf_interp.add_element(DomainElement(n));
    for (const auto& e : bf_interp.domain()) bf_interp.set_constant(e.name(), e);
    for (const auto& f : graph.facts())
        bf_interp.add_edge(f.prop, DomainElement(f.subject), DomainElement(f.object));
    FiniteInterpretation bf_ext =
        extend_interpretation(bf_interp, schema.definitions(), sigma);

    for (const auto& [s, body] : schema.definitions()) {
        const NodeSet& star_set = star_ext.shapes().at(s);
        const NodeSet& bf_set = bf_ext.shapes().at(s);
        for (const auto& n : taken) {
            DomainElement e{n};
            if ((star_set.count(e) != 0) != (bf_set.count(e) != 0)) {
                result.passed = false;
                result.evidence = "membership mismatch for shape " + s.text + " at element " +
                                  n.text;
                return result;
            }
        }
    }
    return result;
}

}  // namespace shacldl
