#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "shacldl/dsl.hpp"
#include "shacldl/graph_text.hpp"
#include "shacldl/shacl_import.hpp"

namespace shacldl::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(SHACLDL_FIXTURES_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture: " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Graph fixture_graph(const std::string& name) {
    GraphFormat fmt = name.size() > 3 && name.substr(name.size() - 3) == ".nt"
                          ? GraphFormat::NTriples
                          : GraphFormat::SimpleFacts;
    return parse_graph(read_fixture(name), fmt);
}

inline ShapeSchema fixture_schema(const std::string& name) {
    if (name.size() > 4 && name.substr(name.size() - 4) == ".ttl")
        return import_shapes_graph(read_fixture(name));
    return parse_schema(read_fixture(name));
}

}  // namespace shacldl::testing
