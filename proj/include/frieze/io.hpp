#ifndef FRIEZE_IO_HPP
#define FRIEZE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "frieze/extend.hpp"
#include "frieze/pattern.hpp"

namespace frieze {

/**
 * On-disk form of a pattern: a JSON object with keys k, n, rows, vertical,
 * and an optional metadata block.  Band entries are JSON integers when they
 * fit in 64 bits and "p/q" strings otherwise; floating-point numbers are
 * rejected so nothing is ever rounded on the way in.
 *
 * serialize() emits a canonical byte form — alphabetically ordered keys,
 * two-space indent, trailing newline — so that parse() followed by
 * serialize() reproduces the input bytes exactly.  Parsers ignore unknown
 * keys; syntax errors raise ParseError with the line and column.
 */

struct DocumentMeta {
    std::optional<std::string> name;
    std::optional<std::string> source;
};

struct FriezeDocument {
    FriezePattern pattern;
    DocumentMeta meta;

    explicit FriezeDocument(FriezePattern p, DocumentMeta m = {})
        : pattern(std::move(p)), meta(std::move(m)) {}
};

std::string serialize(const FriezeDocument& doc);
FriezeDocument parse_document(const std::string& text);

// A file may hold one document or a JSON array of them (seed lists).
std::vector<FriezeDocument> parse_document_list(const std::string& text);

// Graphs are serialized with vertices sorted by their canonical key and
// edges/frontier rewritten against that order, so equal graphs always
// produce identical bytes regardless of discovery order.
std::string serialize(const GammaSubgraph& g);
GammaSubgraph parse_graph(const std::string& text);

}  // namespace frieze

#endif  // FRIEZE_IO_HPP
