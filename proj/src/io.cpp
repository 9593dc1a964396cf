#include "frieze/io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include <json.hpp>

#include "frieze/errors.hpp"

namespace frieze {
namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + e.what());
    }
}

json rational_to_json(const Rational& r) {
    if (r.is_integer()) {
        const BigInt v = r.num();
        if (v >= std::numeric_limits<std::int64_t>::min() &&
            v <= std::numeric_limits<std::int64_t>::max())
            return v.convert_to<std::int64_t>();
    }
    return r.to_string();
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(BigInt(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (j.is_number())
        throw ParseError(where + ": floating-point entries are not accepted; use a \"p/q\" string");
    throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing required key \"") + key + "\"");
    return *it;
}

long require_long(const json& obj, const char* key) {
    const json& v = require(obj, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("key \"") + key + "\" must be an integer");
    return v.get<long>();
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize(const FriezeDocument& doc) {
    const FriezePattern& p = doc.pattern;
    json j;
    j["k"] = p.k();
    j["n"] = p.n();
    json rows = json::array();
    for (const auto& row : p.band_rows()) {
        json r = json::array();
        for (const Rational& e : row) r.push_back(rational_to_json(e));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (p.is_periodic())
        j["vertical"] = {{"mode", "periodic"}, {"period", p.row_count()}};
    else
        j["vertical"] = {{"mode", "window"}, {"first_row_index", p.first_row()}};
    if (doc.meta.name || doc.meta.source) {
        json m;
        if (doc.meta.name) m["name"] = *doc.meta.name;
        if (doc.meta.source) m["source"] = *doc.meta.source;
        j["metadata"] = std::move(m);
    }
    return dump_canonical(j);
}

namespace {

FriezeDocument document_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("document root must be a JSON object");
    const long k = require_long(j, "k");
    const long n = require_long(j, "n");
    if (k < 2) throw ParseError("key \"k\" must be at least 2");
    if (n < 1) throw ParseError("key \"n\" must be at least 1");

    const json& jrows = require(j, "rows");
    if (!jrows.is_array() || jrows.empty())
        throw ParseError("key \"rows\" must be a non-empty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < jrows.size(); ++r) {
        const json& jr = jrows[r];
        const std::string where = "rows[" + std::to_string(r) + "]";
        if (!jr.is_array() || static_cast<long>(jr.size()) != n)
            throw ParseError(where + " must be an array of " + std::to_string(n) + " entries");
        std::vector<Rational> row;
        for (std::size_t c = 0; c < jr.size(); ++c)
            row.push_back(rational_from_json(jr[c], where + "[" + std::to_string(c) + "]"));
        rows.push_back(std::move(row));
    }

    const json& jv = require(j, "vertical");
    if (!jv.is_object()) throw ParseError("key \"vertical\" must be an object");
    const json& jmode = require(jv, "mode");
    if (!jmode.is_string()) throw ParseError("vertical mode must be a string");
    const std::string mode = jmode.get<std::string>();

    DocumentMeta meta;
    if (auto it = j.find("metadata"); it != j.end()) {
        if (!it->is_object()) throw ParseError("key \"metadata\" must be an object");
        if (auto f = it->find("name"); f != it->end()) {
            if (!f->is_string()) throw ParseError("metadata name must be a string");
            meta.name = f->get<std::string>();
        }
        if (auto f = it->find("source"); f != it->end()) {
            if (!f->is_string()) throw ParseError("metadata source must be a string");
            meta.source = f->get<std::string>();
        }
    }

    if (mode == "periodic") {
        if (require_long(jv, "period") != static_cast<long>(rows.size()))
            throw ParseError("vertical period must equal the number of rows");
        return FriezeDocument(FriezePattern::periodic(k, n, std::move(rows)), std::move(meta));
    }
    if (mode == "window") {
        const long first = require_long(jv, "first_row_index");
        return FriezeDocument(FriezePattern::window(k, n, std::move(rows), first),
                              std::move(meta));
    }
    throw ParseError("vertical mode must be \"periodic\" or \"window\"");
}

}  // namespace

FriezeDocument parse_document(const std::string& text) {
    return document_from_json(parse_json(text));
}

std::vector<FriezeDocument> parse_document_list(const std::string& text) {
    const json j = parse_json(text);
    std::vector<FriezeDocument> docs;
    if (j.is_array()) {
        for (const json& e : j) docs.push_back(document_from_json(e));
        if (docs.empty()) throw ParseError("document list is empty");
    } else {
        docs.push_back(document_from_json(j));
    }
    return docs;
}

std::string serialize(const GammaSubgraph& g) {
    // Remap everything onto the key-sorted vertex order first.
    std::vector<std::size_t> order(g.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.vertices[a].key() < g.vertices[b].key();
    });
    std::vector<long> rank(g.vertices.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<long>(pos);

    json verts = json::array();
    for (std::size_t pos : order) {
        json rows = json::array();
        for (const auto& row : g.vertices[pos].rows) rows.push_back(row);
        verts.push_back(std::move(rows));
    }
    std::vector<std::pair<long, long>> edges;
    for (const auto& [a, b] : g.edges)
        edges.emplace_back(rank[static_cast<std::size_t>(a)], rank[static_cast<std::size_t>(b)]);
    std::sort(edges.begin(), edges.end());
    json jedges = json::array();
    for (const auto& [a, b] : edges) jedges.push_back(json::array({a, b}));
    std::vector<long> frontier;
    for (long f : g.frontier) frontier.push_back(rank[static_cast<std::size_t>(f)]);
    std::sort(frontier.begin(), frontier.end());

    json j;
    j["edges"] = std::move(jedges);
    j["exhausted"] = g.exhausted;
    j["frontier"] = frontier;
    j["vertices"] = std::move(verts);
    return dump_canonical(j);
}

GammaSubgraph parse_graph(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("graph root must be a JSON object");

    GammaSubgraph g;
    const json& jverts = require(j, "vertices");
    if (!jverts.is_array()) throw ParseError("key \"vertices\" must be an array");
    for (std::size_t v = 0; v < jverts.size(); ++v) {
        const json& jrows = jverts[v];
        const std::string where = "vertices[" + std::to_string(v) + "]";
        if (!jrows.is_array() || jrows.empty())
            throw ParseError(where + " must be a non-empty array of rows");
        GammaVertex vertex;
        std::size_t width = 0;
        for (const json& jr : jrows) {
            if (!jr.is_array() || jr.empty())
                throw ParseError(where + " rows must be non-empty integer arrays");
            std::vector<long long> row;
            for (const json& e : jr) {
                if (!e.is_number_integer())
                    throw ParseError(where + " entries must be integers");
                row.push_back(e.get<long long>());
            }
            if (width == 0) width = row.size();
            if (row.size() != width) throw ParseError(where + " rows differ in length");
            vertex.rows.push_back(std::move(row));
        }
        g.vertices.push_back(std::move(vertex));
    }

    const long nv = static_cast<long>(g.vertices.size());
    auto check_index = [&](long idx, const std::string& where) {
        if (idx < 0 || idx >= nv)
            throw ParseError(where + ": vertex index " + std::to_string(idx) + " out of range");
    };

    const json& jedges = require(j, "edges");
    if (!jedges.is_array()) throw ParseError("key \"edges\" must be an array");
    for (const json& je : jedges) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_number_integer() ||
            !je[1].is_number_integer())
            throw ParseError("edges must be [from, to] integer pairs");
        long a = je[0].get<long>(), b = je[1].get<long>();
        check_index(a, "edges");
        check_index(b, "edges");
        g.edges.emplace_back(a, b);
    }
    std::sort(g.edges.begin(), g.edges.end());

    if (auto it = j.find("frontier"); it != j.end()) {
        if (!it->is_array()) throw ParseError("key \"frontier\" must be an array");
        for (const json& je : *it) {
            if (!je.is_number_integer()) throw ParseError("frontier entries must be integers");
            long f = je.get<long>();
            check_index(f, "frontier");
            g.frontier.push_back(f);
        }
        std::sort(g.frontier.begin(), g.frontier.end());
    }
    if (auto it = j.find("exhausted"); it != j.end()) {
        if (!it->is_boolean()) throw ParseError("key \"exhausted\" must be a boolean");
        g.exhausted = it->get<bool>();
    }
    return g;
}

}  // namespace frieze
