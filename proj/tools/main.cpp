#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shacldl/dsl.hpp"
#include "shacldl/errors.hpp"
#include "shacldl/graph_text.hpp"
#include "shacldl/natural.hpp"
#include "shacldl/reference.hpp"
#include "shacldl/shacl_import.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace shacldl;

using PrefixList = std::vector<std::pair<std::string, std::string>>;

constexpr int kExitConforms = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Graph load_graph(const std::string& path, std::string format) {
    if (format.empty()) {
        if (ends_with(path, ".nt")) format = "ntriples";
        else if (ends_with(path, ".facts")) format = "facts";
        else throw std::runtime_error("cannot infer graph format from '" + path + "' (use --graph-format)");
    }
    if (format != "ntriples" && format != "facts")
        throw std::runtime_error("unknown graph format: " + format);
    return parse_graph(read_file(path),
                       format == "ntriples" ? GraphFormat::NTriples : GraphFormat::SimpleFacts);
}

struct LoadedSchema {
    ShapeSchema schema;
    PrefixList prefixes;  // nonempty only for Turtle inputs that declared @prefix
};

LoadedSchema load_schema(const std::string& path, std::string format) {
    if (format.empty()) {
        if (ends_with(path, ".shql")) format = "dsl";
        else if (ends_with(path, ".ttl")) format = "shacl-turtle";
        else throw std::runtime_error("cannot infer schema format from '" + path + "' (use --schema-format)");
    }
    if (format == "dsl") return {parse_schema(read_file(path)), {}};
    if (format == "shacl-turtle") {
        ShapesImport imported = import_shapes_graph_full(read_file(path));
        return {std::move(imported.schema), std::move(imported.prefixes)};
    }
    throw std::runtime_error("unknown schema format: " + format);
}

// Longest-match prefix compression for one IRI; returns the IRI unchanged
// when no declared prefix applies or the local part would not reparse.
std::string compress_iri(const std::string& iri, const PrefixList& prefixes) {
    const std::pair<std::string, std::string>* best = nullptr;
    for (const auto& p : prefixes)
        if (iri.rfind(p.second, 0) == 0 && (!best || p.second.size() > best->second.size()))
            best = &p;
    if (!best) return iri;
    std::string local = iri.substr(best->second.size());
    for (char c : local)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return iri;
    return best->first + ":" + local;
}

// Rewrites every <iri> occurrence in serialized DSL text to prefixed form.
std::string compress_iris(const std::string& text, const PrefixList& prefixes) {
    if (prefixes.empty()) return text;
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '<') {
            std::size_t end = text.find('>', pos);
            if (end != std::string::npos) {
                std::string iri = text.substr(pos + 1, end - pos - 1);
                std::string compressed = compress_iri(iri, prefixes);
                out += compressed == iri ? "<" + iri + ">" : compressed;
                pos = end + 1;
                continue;
            }
        }
        out += text[pos++];
    }
    return out;
}

std::string render_focus(const DomainElement& focus, const PrefixList& prefixes) {
    if (focus.is_star()) return "*";
    return compress_iri(focus.name().text, prefixes);
}

void print_report(const ConformanceReport& report, const std::string& report_format,
                  const PrefixList& prefixes) {
    if (report_format == "json") {
        json out;
        out["conforms"] = report.conforms;
        out["violations"] = json::array();
        for (const auto& v : report.violations) {
            json item;
            item["target"] = v.target_index;
            item["focus"] = render_focus(v.focus, prefixes);
            item["lhs"] = compress_iris(serialize_shape(*v.lhs), prefixes);
            item["rhs"] = compress_iris(serialize_shape(*v.rhs), prefixes);
            out["violations"].push_back(std::move(item));
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "conforms: " << (report.conforms ? "true" : "false") << "\n";
    for (const auto& v : report.violations) {
        std::cout << "violation: target=" << v.target_index
                  << " focus=" << render_focus(v.focus, prefixes);
        if (v.focus.is_star())
            std::cout << " (any node not named in the graph or schema; infinitely many anonymous witnesses)";
        std::cout << " lhs=" << compress_iris(serialize_shape(*v.lhs), prefixes)
                  << " rhs=" << compress_iris(serialize_shape(*v.rhs), prefixes) << "\n";
    }
}

Vocabulary extra_vocabulary(const std::vector<std::string>& extra_properties) {
    Vocabulary extra;
    for (const auto& p : extra_properties) extra.insert(property_name(p));
    return extra;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SHACL validation under the natural (open-domain) semantics"};
    app.require_subcommand(1);

    std::string graph_path, graph_format, schema_path, schema_format;
    std::string report_format = "text";
    std::vector<std::string> extra_properties;
    std::string shape_text;
    std::vector<std::string> node_args;
    int max_fresh = 3;

    auto add_graph_opts = [&](CLI::App* cmd, bool graph_required = true) {
        cmd->add_option("--graph", graph_path, "Graph file (.nt or .facts)")
            ->required(graph_required);
        cmd->add_option("--graph-format", graph_format, "ntriples|facts (default: by extension)");
    };
    auto add_schema_opts = [&](CLI::App* cmd, bool schema_required = true) {
        cmd->add_option("--schema", schema_path, "Schema file (.shql or .ttl)")
            ->required(schema_required);
        cmd->add_option("--schema-format", schema_format,
                        "dsl|shacl-turtle (default: by extension)");
    };
    auto add_extra_opt = [&](CLI::App* cmd) {
        cmd->add_option("--extra-property", extra_properties,
                        "Extra property name added to the vocabulary (repeatable)");
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "Check graph conformance");
    add_graph_opts(validate_cmd);
    add_schema_opts(validate_cmd);
    add_extra_opt(validate_cmd);
    validate_cmd->add_option("--report", report_format, "text|json");

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a shape on graph nodes");
    add_graph_opts(eval_cmd);
    add_schema_opts(eval_cmd, false);
    add_extra_opt(eval_cmd);
    eval_cmd->add_option("--shape", shape_text, "Shape expression in DSL syntax")->required();
    eval_cmd->add_option("--nodes", node_args, "Node names to query")->delimiter(',');

    CLI::App* import_cmd =
        app.add_subcommand("import-shacl", "Convert a SHACL shapes graph to the DSL");
    import_cmd->add_option("--schema", schema_path, "Input SHACL shapes graph (.ttl)")
        ->required();

    CLI::App* diff_cmd = app.add_subcommand(
        "diff-semantics", "Compare natural and active-domain validation verdicts");
    add_graph_opts(diff_cmd);
    add_schema_opts(diff_cmd);
    add_extra_opt(diff_cmd);

    CLI::App* thm_cmd = app.add_subcommand(
        "check-theorem1", "Cross-check the star reduction against brute force");
    add_graph_opts(thm_cmd);
    add_schema_opts(thm_cmd);
    add_extra_opt(thm_cmd);
    thm_cmd->add_option("--max-fresh", max_fresh, "Fresh-node counts to try (1..M)")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) {
            Graph graph = load_graph(graph_path, graph_format);
            LoadedSchema loaded = load_schema(schema_path, schema_format);
            ConformanceReport report =
                validate(graph, loaded.schema, extra_vocabulary(extra_properties));
            print_report(report, report_format, loaded.prefixes);
            return report.conforms ? kExitConforms : kExitViolations;
        }

        if (eval_cmd->parsed()) {
            Graph graph = load_graph(graph_path, graph_format);
            LoadedSchema loaded{ShapeSchema{}, {}};
            if (!schema_path.empty()) loaded = load_schema(schema_path, schema_format);
            ShapePtr shape = parse_shape_expr(shape_text);
            std::vector<Name> query;
            for (const auto& n : node_args) query.push_back(node_name(n));
            GraphEvalResult result = eval_on_graph(shape, graph, loaded.schema, query,
                                                   extra_vocabulary(extra_properties));
            for (const auto& [name, verdict] : result.answers)
                std::cout << compress_iri(name.text, loaded.prefixes) << ": "
                          << (verdict ? "true" : "false") << "\n";
            std::cout << "* (any other node): " << (result.star_verdict ? "true" : "false")
                      << "\n";
            return kExitConforms;
        }

        if (import_cmd->parsed()) {
            ShapeSchema schema = import_shapes_graph(read_file(schema_path));
            std::cout << serialize_schema(schema);
            return kExitConforms;
        }

        if (diff_cmd->parsed()) {
            Graph graph = load_graph(graph_path, graph_format);
            LoadedSchema loaded = load_schema(schema_path, schema_format);
            auto diffs =
                diff_semantics(graph, loaded.schema, extra_vocabulary(extra_properties));
            if (diffs.empty()) {
                std::cout << "no differences\n";
                return kExitConforms;
            }
            for (const auto& d : diffs) {
                std::cout << "target " << d.target_index
                          << ": natural=" << (d.natural_conforms ? "conforms" : "violates")
                          << " active=" << (d.active_conforms ? "conforms" : "violates");
                if (d.witness)
                    std::cout << " witness=" << render_focus(*d.witness, loaded.prefixes);
                std::cout << "\n";
            }
            return kExitViolations;
        }

        if (thm_cmd->parsed()) {
            Graph graph = load_graph(graph_path, graph_format);
            LoadedSchema loaded = load_schema(schema_path, schema_format);
            Theorem1Result result = check_theorem1(graph, loaded.schema, max_fresh,
                                                   extra_vocabulary(extra_properties));
            if (result.passed) {
                std::cout << "theorem1: PASS (max-fresh=" << max_fresh << ")\n";
                return kExitConforms;
            }
            std::cout << "theorem1: FAIL " << result.evidence << "\n";
            return kExitViolations;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const UnsupportedConstruct& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const CyclicSchema& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
