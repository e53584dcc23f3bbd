"""Shape-schema validation over graphs under the natural semantics."""

from ._shacldl import (
    CyclicSchemaError,
    Graph,
    ParseError,
    Schema,
    UnsupportedConstructError,
    check_theorem1,
    diff_semantics,
    eval_shape,
    import_shacl,
    parse_graph,
    parse_schema,
    serialize_schema,
    validate,
)

__all__ = [
    "CyclicSchemaError",
    "Graph",
    "ParseError",
    "Schema",
    "UnsupportedConstructError",
    "check_theorem1",
    "diff_semantics",
    "eval_shape",
    "import_shacl",
    "parse_graph",
    "parse_schema",
    "serialize_schema",
    "validate",
]
