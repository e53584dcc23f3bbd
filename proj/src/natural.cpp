#include "shacldl/natural.hpp"

namespace shacldl {

StarContext star_interpretation(const Graph& graph, const Vocabulary& sigma) {
    StarContext ctx;
    ctx.sigma = sigma;
    ctx.graph_nodes = graph.nodes();

    FiniteInterpretation& interp = ctx.interpretation;
    for (const auto& n : graph.nodes()) interp.add_element(DomainElement(n));
    for (const auto& n : sigma.node_names) interp.add_element(DomainElement(n));
    interp.add_element(DomainElement::star());

    // UNA: every node name in the domain denotes itself; the symbolic
    // element is never the image of a constant.
    for (const auto& e : interp.domain())
        if (!e.is_star()) interp.set_constant(e.name(), e);

    for (const auto& f : graph.facts())
        interp.add_edge(f.prop, DomainElement(f.subject), DomainElement(f.object));

    return ctx;
}

namespace {

void merge(Vocabulary& sigma, const Vocabulary& extra) {
    for (const auto& n : extra.node_names) sigma.insert(n);
    for (const auto& n : extra.shape_names) sigma.insert(n);
    for (const auto& n : extra.property_names) sigma.insert(n);
}

}  // namespace

ConformanceReport validate(const Graph& graph, const ShapeSchema& schema,
                           const Vocabulary& extra) {
    Vocabulary sigma = vocabulary_of(schema, graph);
    merge(sigma, extra);
    StarContext ctx = star_interpretation(graph, sigma);
    return check_conformance(ctx.interpretation, schema, sigma);
}

GraphEvalResult eval_on_graph(const ShapePtr& shape, const Graph& graph,
                              const ShapeSchema& schema, const std::vector<Name>& query,
                              const Vocabulary& extra) {
    Vocabulary sigma = vocabulary_of(schema, graph);
    merge(sigma, extra);
    collect_names(*shape, sigma);

    StarContext ctx = star_interpretation(graph, sigma);
    FiniteInterpretation ext =
        extend_interpretation(ctx.interpretation, schema.definitions(), sigma);
    NodeSet result = eval_shape(*desugar(shape), ext, sigma);

    GraphEvalResult out;
    out.star_verdict = result.count(DomainElement::star()) != 0;
    for (const auto& x : query) {
        DomainElement e{x};
        out.answers[x] = ext.contains(e) ? result.count(e) != 0 : out.star_verdict;
    }
    return out;
}

}  // namespace shacldl
