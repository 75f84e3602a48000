#include "quiverhom/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace quiverhom {

using json = nlohmann::ordered_json;

int Quiver::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == id) return static_cast<int>(i);
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

int Quiver::loops_at(int vertex) const {
    int n = 0;
    for (const auto& a : arrows)
        if (a.from == vertex && a.to == vertex) ++n;
    return n;
}

bool Presentation::is_monomial() const {
    return std::all_of(relations.begin(), relations.end(),
                       [](const Relation& r) { return r.terms.size() == 1; });
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

const json& field(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(std::string("missing field '") + key + "' in " + where);
    return *it;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("syntax error: ") + e.what());
    }
    if (!doc.is_object()) fail("presentation document must be a single object");

    Presentation pres;
    const json& jverts = field(doc, "vertices", "presentation");
    if (!jverts.is_array() || jverts.empty()) fail("'vertices' must be a non-empty list");
    std::set<std::string> seen_v;
    for (const auto& v : jverts) {
        if (!v.is_string()) fail("vertex ids must be strings");
        if (!seen_v.insert(v.get<std::string>()).second)
            fail("duplicate vertex id '" + v.get<std::string>() + "'");
        pres.quiver.vertices.push_back(v.get<std::string>());
    }

    const json& jarrows = field(doc, "arrows", "presentation");
    if (!jarrows.is_array()) fail("'arrows' must be a list");
    std::set<std::string> seen_a;
    for (const auto& ja : jarrows) {
        Arrow a;
        a.name = field(ja, "name", "arrow").get<std::string>();
        if (!seen_a.insert(a.name).second) fail("duplicate arrow name '" + a.name + "'");
        std::string from = field(ja, "from", "arrow").get<std::string>();
        std::string to = field(ja, "to", "arrow").get<std::string>();
        a.from = pres.quiver.vertex_index(from);
        a.to = pres.quiver.vertex_index(to);
        if (a.from < 0) fail("arrow '" + a.name + "': unknown vertex '" + from + "'");
        if (a.to < 0) fail("arrow '" + a.name + "': unknown vertex '" + to + "'");
        pres.quiver.arrows.push_back(std::move(a));
    }

    const json& jtrunc = field(doc, "truncate", "presentation");
    if (!jtrunc.is_number_integer()) fail("'truncate' must be an integer");
    pres.truncate = jtrunc.get<int>();
    if (pres.truncate < 2) fail("'truncate' must be >= 2");

    const json& jrels = field(doc, "relations", "presentation");
    if (!jrels.is_array()) fail("'relations' must be a list");
    int rel_no = 0;
    for (const auto& jr : jrels) {
        ++rel_no;
        std::string where = "relation " + std::to_string(rel_no);
        const json& jterms = field(jr, "terms", where.c_str());
        if (!jterms.is_array() || jterms.empty()) fail(where + ": 'terms' must be non-empty");
        Relation rel;
        int src = -1, tgt = -1;
        size_t len = 0;
        for (const auto& jt : jterms) {
            RelationTerm term;
            term.coef = rat_from_string(field(jt, "coef", where.c_str()).get<std::string>());
            const json& jpath = field(jt, "path", where.c_str());
            if (!jpath.is_array() || jpath.size() < 2)
                fail(where + ": every term path must have length >= 2");
            // input order is leftmost-acting-last; store in application order
            for (auto it = jpath.rbegin(); it != jpath.rend(); ++it) {
                int idx = pres.quiver.arrow_index(it->get<std::string>());
                if (idx < 0)
                    fail(where + ": unknown arrow '" + it->get<std::string>() + "'");
                term.path.push_back(idx);
            }
            for (size_t k = 0; k + 1 < term.path.size(); ++k) {
                const Arrow& cur = pres.quiver.arrows[static_cast<size_t>(term.path[k])];
                const Arrow& nxt = pres.quiver.arrows[static_cast<size_t>(term.path[k + 1])];
                if (cur.to != nxt.from)
                    fail(where + ": non-composable path (arrow '" + nxt.name +
                         "' does not start where '" + cur.name + "' ends)");
            }
            int t_src = pres.quiver.arrows[static_cast<size_t>(term.path.front())].from;
            int t_tgt = pres.quiver.arrows[static_cast<size_t>(term.path.back())].to;
            if (src < 0) {
                src = t_src;
                tgt = t_tgt;
                len = term.path.size();
            } else {
                if (t_src != src || t_tgt != tgt) fail(where + ": non-parallel terms");
                if (term.path.size() != len)
                    fail(where + ": terms of unequal length (ideal would not be homogeneous)");
            }
            rel.terms.push_back(std::move(term));
        }
        pres.relations.push_back(std::move(rel));
    }
    return pres;
}

Presentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string serialize_presentation(const Presentation& pres) {
    json doc;
    doc["vertices"] = pres.quiver.vertices;
    doc["arrows"] = json::array();
    for (const auto& a : pres.quiver.arrows) {
        json ja;
        ja["name"] = a.name;
        ja["from"] = pres.quiver.vertices[static_cast<size_t>(a.from)];
        ja["to"] = pres.quiver.vertices[static_cast<size_t>(a.to)];
        doc["arrows"].push_back(std::move(ja));
    }
    doc["relations"] = json::array();
    for (const auto& r : pres.relations) {
        json jr;
        jr["terms"] = json::array();
        for (const auto& t : r.terms) {
            json jt;
            jt["coef"] = rat_to_string(t.coef);
            json jpath = json::array();
            for (auto it = t.path.rbegin(); it != t.path.rend(); ++it)
                jpath.push_back(pres.quiver.arrows[static_cast<size_t>(*it)].name);
            jt["path"] = std::move(jpath);
            jr["terms"].push_back(std::move(jt));
        }
        doc["relations"].push_back(std::move(jr));
    }
    doc["truncate"] = pres.truncate;
    return doc.dump(2) + "\n";
}

}  // namespace quiverhom
