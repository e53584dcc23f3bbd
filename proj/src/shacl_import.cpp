#include "shacldl/shacl_import.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "shacldl/errors.hpp"

namespace shacldl {

namespace {

const std::string kShaclNs = "http://www.w3.org/ns/shacl#";
const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

struct Term {
    enum class Kind { Iri, Int, BNode, List };
    Kind kind;
    std::string iri;
    int number = 0;
    int bnode = 0;
    std::vector<Term> list;
};

struct Triple {
    std::string subject_key;  // "i:<iri>" or "b:<id>"
    std::string predicate;    // resolved IRI
    Term object;
    SourceLocation loc;
};

std::string iri_key(const std::string& iri) { return "i:" + iri; }
std::string bnode_key(int id) { return "b:" + std::to_string(id); }

bool pname_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class TurtleParser {
public:
    explicit TurtleParser(const std::string& text) : text_(text) {}

    void run() {
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) return;
            if (text_[pos_] == '@') {
                prefix_directive();
            } else {
                statement();
            }
        }
    }

    const std::vector<Triple>& triples() const { return triples_; }
    const std::vector<std::string>& subject_order() const { return subject_order_; }
    const std::vector<std::pair<std::string, std::string>>& prefixes() const {
        return prefixes_;
    }

private:
    void prefix_directive() {
        SourceLocation loc = here();
        expect_word("@prefix");
        skip_space();
        std::string prefix;
        while (pos_ < text_.size() && pname_char(text_[pos_])) prefix += advance();
        if (pos_ >= text_.size() || text_[pos_] != ':')
            throw ParseError(here(), "expected prefix declaration");
        advance();
        skip_space();
        std::string base = iri_ref();
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '.')
            throw ParseError(here(), "expected '.' after @prefix");
        advance();
        prefix_map_[prefix] = base;
        prefixes_.emplace_back(prefix, base);
        (void)loc;
    }

    void statement() {
        std::string subject = subject_term();
        predicate_object_list(subject);
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != '.')
            throw ParseError(here(), "expected '.' at end of statement");
        advance();
    }

    std::string subject_term() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '[') {
            Term b = blank_node();
            return bnode_key(b.bnode);
        }
        std::string key = iri_key(iri_term());
        note_subject(key);
        return key;
    }

    void predicate_object_list(const std::string& subject) {
        while (true) {
            skip_space();
            SourceLocation loc = here();
            std::string pred = predicate();
            while (true) {
                Term obj = object();
                triples_.push_back({subject, pred, std::move(obj), loc});
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    advance();
                    continue;
                }
                break;
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ';') {
                advance();
                skip_space();
                // tolerate trailing ';' before '.' or ']'
                if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == ']')) return;
                continue;
            }
            return;
        }
    }

    std::string predicate() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == 'a' &&
            (pos_ + 1 >= text_.size() ||
             std::isspace(static_cast<unsigned char>(text_[pos_ + 1])))) {
            advance();
            return kRdfType;
        }
        return iri_term();
    }

    Term object() {
        skip_space();
        SourceLocation loc = here();
        if (pos_ >= text_.size()) throw ParseError(loc, "expected an object");
        char c = text_[pos_];
        if (c == '[') return blank_node();
        if (c == '(') return collection();
        if (c == '"') throw ParseError(loc, "string literals are not supported");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                v = v * 10 + (advance() - '0');
            Term t{Term::Kind::Int};
            t.number = v;
            return t;
        }
        Term t{Term::Kind::Iri};
        t.iri = iri_term();
        return t;
    }

    Term blank_node() {
        advance();  // '['
        Term t{Term::Kind::BNode};
        t.bnode = next_bnode_++;
        std::string key = bnode_key(t.bnode);
        note_subject(key);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] != ']') predicate_object_list(key);
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ']')
            throw ParseError(here(), "expected ']'");
        advance();
        return t;
    }

    Term collection() {
        advance();  // '('
        Term t{Term::Kind::List};
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) throw ParseError(here(), "unterminated collection");
            if (text_[pos_] == ')') {
                advance();
                return t;
            }
            t.list.push_back(object());
        }
    }

    std::string iri_term() {
        skip_space();
        SourceLocation loc = here();
        if (pos_ >= text_.size()) throw ParseError(loc, "expected an IRI");
        if (text_[pos_] == '<') return iri_ref();
        std::string prefix;
        while (pos_ < text_.size() && pname_char(text_[pos_])) prefix += advance();
        if (pos_ >= text_.size() || text_[pos_] != ':')
            throw ParseError(loc, "expected a prefixed name or <iri>");
        advance();
        std::string local;
        while (pos_ < text_.size() && pname_char(text_[pos_])) local += advance();
        auto it = prefix_map_.find(prefix);
        if (it == prefix_map_.end())
            throw ParseError(loc, "undeclared prefix '" + prefix + ":'");
        return it->second + local;
    }

    std::string iri_ref() {
        SourceLocation loc = here();
        if (pos_ >= text_.size() || text_[pos_] != '<')
            throw ParseError(loc, "expected <iri>");
        advance();
        std::string iri;
        while (pos_ < text_.size() && text_[pos_] != '>' && text_[pos_] != '\n')
            iri += advance();
        if (pos_ >= text_.size() || text_[pos_] != '>')
            throw ParseError(loc, "unterminated <iri>");
        advance();
        return iri;
    }

    void expect_word(const std::string& word) {
        if (text_.compare(pos_, word.size(), word) != 0)
            throw ParseError(here(), "expected " + word);
        for (std::size_t i = 0; i < word.size(); ++i) advance();
    }

    void note_subject(const std::string& key) {
        if (!seen_subjects_.count(key)) {
            seen_subjects_.insert(key);
            subject_order_.push_back(key);
        }
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    SourceLocation here() const { return {line_, col_}; }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    int next_bnode_ = 0;
    std::map<std::string, std::string> prefix_map_;
    std::vector<std::pair<std::string, std::string>> prefixes_;
    std::vector<Triple> triples_;
    std::vector<std::string> subject_order_;
    std::set<std::string> seen_subjects_;
};

struct Entry {
    std::string predicate;
    const Term* object;
    SourceLocation loc;
};

class Importer {
public:
    explicit Importer(const TurtleParser& doc) : doc_(doc) {
        for (const auto& t : doc.triples()) by_subject_[t.subject_key].push_back(
            {t.predicate, &t.object, t.loc});
    }

    ShapeSchema build() {
        Definitions defs;
        std::vector<Target> targets;
        for (const auto& key : doc_.subject_order()) {
            const auto& entries = by_subject_.at(key);
            bool shapeish = false;
            for (const auto& e : entries)
                if (is_sh(e.predicate) ||
                    (e.predicate == kRdfType && e.object->kind == Term::Kind::Iri &&
                     is_sh(e.object->iri)))
                    shapeish = true;
            if (!shapeish) continue;

            // blank-node subjects are translated lazily, in shape or path
            // position; translating them here would misread path nodes
            std::optional<Name> name = subject_shape_name(key, entries);
            ShapePtr expr;
            bool has_components = false;
            if (name) {
                auto translated = translate_subject(key);
                expr = translated.expr;
                has_components = translated.has_components;
                if (has_components || translated.declared_shape) defs.emplace(*name, expr);
            }

            for (const auto& e : entries) {
                if (!is_sh(e.predicate)) continue;
                std::string local = e.predicate.substr(kShaclNs.size());
                if (local == "targetNode" || local == "targetSubjectsOf" ||
                    local == "targetObjectsOf" || local == "targetClass") {
                    if (e.object->kind != Term::Kind::Iri)
                        throw UnsupportedConstruct("sh:" + local + " with a non-IRI value",
                                                   e.loc);
                    if (!name) name = anon_name(key);
                    targets.push_back(make_target(local, e.object->iri, *name));
                }
            }
            // a promoted anonymous shape needs its definition recorded
            if (name && name->text.rfind("_anon", 0) == 0 && !defs.count(*name)) {
                auto translated = translate_subject(key);
                if (translated.has_components) defs.emplace(*name, translated.expr);
            }
        }
        return ShapeSchema(std::move(defs), std::move(targets));
    }

private:
    static bool is_sh(const std::string& iri) { return iri.rfind(kShaclNs, 0) == 0; }

    std::optional<Name> subject_shape_name(const std::string& key,
                                           const std::vector<Entry>&) {
        if (key.rfind("i:", 0) == 0) return shape_name(key.substr(2));
        auto it = anon_names_.find(key);
        if (it != anon_names_.end()) return it->second;
        return std::nullopt;
    }

    Name anon_name(const std::string& key) {
        auto it = anon_names_.find(key);
        if (it != anon_names_.end()) return it->second;
        Name n = shape_name("_anon" + std::to_string(next_anon_++));
        anon_names_.emplace(key, n);
        return n;
    }

    Target make_target(const std::string& local, const std::string& iri, const Name& shape) {
        ShapePtr lhs;
        if (local == "targetNode") {
            lhs = shape_constant(node_name(iri));
        } else if (local == "targetSubjectsOf") {
            lhs = shape_at_least(1, path_prop(property_name(iri)), shape_top());
        } else if (local == "targetObjectsOf") {
            lhs = shape_at_least(1, path_inverse(property_name(iri)), shape_top());
        } else {  // targetClass
            lhs = shape_at_least(1, path_prop(property_name(kRdfType)),
                                 shape_constant(node_name(iri)));
        }
        return {std::move(lhs), shape_ref(shape)};
    }

    struct Translated {
        ShapePtr expr;
        bool has_components;
        bool declared_shape;
    };

    Translated translate_subject(const std::string& key) {
        const auto& entries = by_subject_.at(key);
        std::vector<ShapePtr> parts;
        bool declared = false;

        // property-shape constraints on this node are combined with its path
        const Term* path_term = nullptr;
        SourceLocation path_loc{};
        std::vector<std::pair<std::string, const Entry*>> count_entries;
        const Term* qvs = nullptr;
        std::optional<int> qmin;

        for (const auto& e : entries) {
            if (e.predicate == kRdfType) {
                if (e.object->kind == Term::Kind::Iri &&
                    (e.object->iri == kShaclNs + "NodeShape" ||
                     e.object->iri == kShaclNs + "PropertyShape"))
                    declared = true;
                continue;
            }
            if (!is_sh(e.predicate)) continue;
            std::string local = e.predicate.substr(kShaclNs.size());
            if (local == "and" || local == "or") {
                if (e.object->kind != Term::Kind::List)
                    throw UnsupportedConstruct("sh:" + local + " without an RDF list", e.loc);
                parts.push_back(fold_junction(local == "and", e.object->list, e.loc));
            } else if (local == "not") {
                parts.push_back(shape_not(translate_ref(*e.object, e.loc)));
            } else if (local == "hasValue") {
                if (e.object->kind != Term::Kind::Iri)
                    throw UnsupportedConstruct("sh:hasValue with a non-IRI value", e.loc);
                parts.push_back(shape_constant(node_name(e.object->iri)));
            } else if (local == "path") {
                path_term = e.object;
                path_loc = e.loc;
            } else if (local == "minCount" || local == "maxCount") {
                count_entries.emplace_back(local, &e);
            } else if (local == "qualifiedValueShape") {
                qvs = e.object;
                count_entries.emplace_back(local, &e);
            } else if (local == "qualifiedMinCount") {
                if (e.object->kind != Term::Kind::Int)
                    throw UnsupportedConstruct("sh:qualifiedMinCount without an integer",
                                               e.loc);
                qmin = e.object->number;
            } else if (local.rfind("target", 0) == 0) {
                // handled by the caller
            } else {
                throw UnsupportedConstruct("sh:" + local, e.loc);
            }
        }

        if (!path_term) {
            for (const auto& [local, e] : count_entries)
                throw UnsupportedConstruct("sh:" + local + " without sh:path", e->loc);
            if (qmin)
                throw UnsupportedConstruct("sh:qualifiedMinCount without sh:path", path_loc);
        } else {
            if (qmin && !qvs)
                throw UnsupportedConstruct(
                    "sh:qualifiedMinCount without sh:qualifiedValueShape", path_loc);
            PathPtr path = translate_path(*path_term, path_loc);
            for (const auto& [local, e] : count_entries) {
                if (local == "minCount") {
                    int n = require_int(*e);
                    parts.push_back(shape_at_least(static_cast<std::uint32_t>(n), path,
                                                   shape_top()));
                } else if (local == "maxCount") {
                    int n = require_int(*e);
                    parts.push_back(shape_not(shape_at_least(
                        static_cast<std::uint32_t>(n) + 1, path, shape_top())));
                } else {  // qualifiedValueShape
                    if (!qmin)
                        throw UnsupportedConstruct(
                            "sh:qualifiedValueShape without sh:qualifiedMinCount", e->loc);
                    parts.push_back(shape_at_least(static_cast<std::uint32_t>(*qmin), path,
                                                   translate_ref(*qvs, e->loc)));
                }
            }
        }

        ShapePtr expr = shape_top();
        bool first = true;
        for (auto& p : parts) {
            expr = first ? p : shape_and(std::move(expr), p);
            first = false;
        }
        return {std::move(expr), !parts.empty(), declared};
    }

    int require_int(const Entry& e) {
        if (e.object->kind != Term::Kind::Int || e.object->number < 0)
            throw UnsupportedConstruct("sh:" + e.predicate.substr(kShaclNs.size()) +
                                           " without a nonnegative integer",
                                       e.loc);
        if (e.object->number == 0 && e.predicate == kShaclNs + "minCount")
            throw UnsupportedConstruct("sh:minCount 0", e.loc);
        return e.object->number;
    }

    ShapePtr fold_junction(bool conjunction, const std::vector<Term>& members,
                           SourceLocation loc) {
        if (members.empty()) return conjunction ? shape_top() : shape_not(shape_top());
        ShapePtr out = translate_ref(members[0], loc);
        for (std::size_t i = 1; i < members.size(); ++i) {
            ShapePtr next = translate_ref(members[i], loc);
            out = conjunction ? shape_and(std::move(out), std::move(next))
                              : shape_or(std::move(out), std::move(next));
        }
        return out;
    }

    ShapePtr translate_ref(const Term& term, SourceLocation loc) {
        if (term.kind == Term::Kind::Iri) {
            if (is_sh(term.iri)) throw UnsupportedConstruct(term.iri, loc);
            return shape_ref(shape_name(term.iri));
        }
        if (term.kind == Term::Kind::BNode) {
            std::string key = bnode_key(term.bnode);
            if (!by_subject_.count(key)) return shape_top();  // [] with no triples
            return translate_subject(key).expr;
        }
        throw UnsupportedConstruct("non-shape value in shape position", loc);
    }

    PathPtr translate_path(const Term& term, SourceLocation loc) {
        if (term.kind == Term::Kind::Iri) {
            if (is_sh(term.iri)) throw UnsupportedConstruct(term.iri, loc);
            return path_prop(property_name(term.iri));
        }
        if (term.kind == Term::Kind::List) {
            if (term.list.empty()) throw UnsupportedConstruct("empty path sequence", loc);
            PathPtr out = translate_path(term.list[0], loc);
            for (std::size_t i = 1; i < term.list.size(); ++i)
                out = path_compose(std::move(out), translate_path(term.list[i], loc));
            return out;
        }
        if (term.kind == Term::Kind::BNode) {
            const auto& entries = by_subject_.at(bnode_key(term.bnode));
            if (entries.size() != 1)
                throw UnsupportedConstruct("compound path node", loc);
            const Entry& e = entries[0];
            if (!is_sh(e.predicate)) throw UnsupportedConstruct(e.predicate, e.loc);
            std::string local = e.predicate.substr(kShaclNs.size());
            if (local == "inversePath") {
                if (e.object->kind != Term::Kind::Iri)
                    throw UnsupportedConstruct("sh:inversePath of a compound path", e.loc);
                return path_inverse(property_name(e.object->iri));
            }
            if (local == "alternativePath") {
                if (e.object->kind != Term::Kind::List || e.object->list.empty())
                    throw UnsupportedConstruct("sh:alternativePath without a list", e.loc);
                PathPtr out = translate_path(e.object->list[0], e.loc);
                for (std::size_t i = 1; i < e.object->list.size(); ++i)
                    out = path_union(std::move(out), translate_path(e.object->list[i], e.loc));
                return out;
            }
            if (local == "zeroOrMorePath") return path_star(translate_path(*e.object, e.loc));
            if (local == "zeroOrOnePath")
                return path_optional(translate_path(*e.object, e.loc));
            throw UnsupportedConstruct("sh:" + local, e.loc);
        }
        throw UnsupportedConstruct("invalid path value", loc);
    }

    const TurtleParser& doc_;
    std::map<std::string, std::vector<Entry>> by_subject_;
    std::map<std::string, Name> anon_names_;
    int next_anon_ = 0;
};

}  // namespace

ShapesImport import_shapes_graph_full(const std::string& turtle_text) {
    TurtleParser parser(turtle_text);
    parser.run();
    Importer importer(parser);
    ShapesImport out;
    out.schema = importer.build();
    out.prefixes = parser.prefixes();
    return out;
}

ShapeSchema import_shapes_graph(const std::string& turtle_text) {
    return import_shapes_graph_full(turtle_text).schema;
}

}  // namespace shacldl
