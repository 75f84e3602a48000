#pragma once

#include <string>
#include <vector>

#include "quiverhom/rational.hpp"

namespace quiverhom {

struct Arrow {
    std::string name;
    int from = 0;  // vertex index, 0-based
    int to = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const;  // -1 if unknown
    int arrow_index(const std::string& name) const;
    int loops_at(int vertex) const;
};

/// One term of a relation: coef * path. The path is stored in application
/// order (entry 0 acts first); input files list arrows leftmost-acting-last.
struct RelationTerm {
    Rational coef;
    std::vector<int> path;  // arrow indices
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
    int truncate = 0;  // paths of length >= truncate are zero

    bool is_monomial() const;
};

/// Parse and validate a presentation document (JSON, one object). Throws
/// ValidationError with a position on syntax errors, and with the offending
/// relation/arrow on semantic ones: unknown names, non-composable or
/// non-parallel terms, terms of unequal length, relations of length < 2.
Presentation parse_presentation(const std::string& text);

Presentation parse_presentation_file(const std::string& path);

/// Canonical document for a presentation; parse(serialize(parse(t))) equals
/// parse(t) field-for-field.
std::string serialize_presentation(const Presentation& pres);

}  // namespace quiverhom
