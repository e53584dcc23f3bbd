#include "shacldl/graph_text.hpp"

#include <cctype>
#include <sstream>

#include "shacldl/errors.hpp"

namespace shacldl {

namespace {

bool token_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool token_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '.' ||
           c == '/' || c == '#' || c == '-';
}

// One NTriples term: <iri>. Literals and blank nodes get dedicated messages.
std::string parse_iri_term(const std::string& line, std::size_t& pos, int line_no) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    SourceLocation loc{line_no, static_cast<int>(pos) + 1};
    if (pos >= line.size()) throw ParseError(loc, "expected <iri>");
    if (line[pos] == '"')
        throw ParseError(loc, "literals are not supported (out of scope)");
    if (line.compare(pos, 2, "_:") == 0)
        throw ParseError(loc, "blank nodes are not supported (out of scope)");
    if (line[pos] != '<') throw ParseError(loc, "expected <iri>");
    std::size_t end = line.find('>', pos + 1);
    if (end == std::string::npos) throw ParseError(loc, "unterminated <iri>");
    std::string iri = line.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    return iri;
}

Graph parse_ntriples(const std::string& text) {
    Graph graph;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size() || line[pos] == '#') continue;

        std::string subject = parse_iri_term(line, pos, line_no);
        std::string predicate = parse_iri_term(line, pos, line_no);
        std::string object = parse_iri_term(line, pos, line_no);

        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        SourceLocation loc{line_no, static_cast<int>(pos) + 1};
        if (pos >= line.size() || line[pos] != '.') throw ParseError(loc, "expected '.'");
        ++pos;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos < line.size() && line[pos] != '#')
            throw ParseError({line_no, static_cast<int>(pos) + 1}, "trailing content");

        graph.add_fact(property_name(predicate), node_name(subject), node_name(object));
    }
    return graph;
}

// Token scanner for the p(a,b). format; facts may share a line.
class FactsScanner {
public:
    explicit FactsScanner(const std::string& text) : text_(text) {}

    Graph run() {
        Graph graph;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) return graph;
            std::string prop = token("property name");
            punct('(');
            std::string subject = token("node name");
            punct(',');
            std::string object = token("node name");
            punct(')');
            punct('.');
            graph.add_fact(property_name(prop), node_name(subject), node_name(object));
        }
    }

private:
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

    std::string token(const std::string& what) {
        skip_space();
        SourceLocation loc{line_, col_};
        if (pos_ >= text_.size() || !token_start(text_[pos_]))
            throw ParseError(loc, "expected " + what);
        std::string s;
        while (pos_ < text_.size() && token_char(text_[pos_])) {
            // '.' is the fact terminator unless followed by another token char
            if (text_[pos_] == '.' &&
                (pos_ + 1 >= text_.size() || !token_char(text_[pos_ + 1])))
                break;
            s += advance();
        }
        return s;
    }

    void punct(char expected) {
        skip_space();
        SourceLocation loc{line_, col_};
        if (pos_ >= text_.size() || text_[pos_] != expected)
            throw ParseError(loc, std::string("expected '") + expected + "'");
        advance();
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

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::NTriples ? parse_ntriples(text) : FactsScanner(text).run();
}

}  // namespace shacldl
