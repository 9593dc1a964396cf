// Regenerates the checked-in fixture documents from the built-in corpus.
// Usage: gen_fixtures <output-dir>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frieze/fixtures.hpp"
#include "frieze/io.hpp"
#include "frieze/unbounded.hpp"

using namespace frieze;

namespace {

void emit(const std::string& dir, const std::string& file, const std::string& text) {
    const std::string path = dir + "/" + file;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << text;
    std::cout << "wrote " << path << "\n";
}

std::string doc(const FriezePattern& p, const std::string& name) {
    DocumentMeta meta;
    meta.name = name;
    meta.source = "built-in corpus";
    return serialize(FriezeDocument(p, meta));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixtures <output-dir>\n";
        return 2;
    }
    const std::string dir = argv[1];

    emit(dir, "nine_periodic.json", doc(fixtures::nine_periodic_h5(), "nine-periodic band"));
    emit(dir, "tame_band.json", doc(fixtures::tame_h4(), "tame band, width 4"));
    emit(dir, "nongeneric_band.json", doc(fixtures::nongeneric_h3(), "non-generic band"));
    emit(dir, "wild_band.json", doc(fixtures::wild_h4(), "wild band, width 4"));
    emit(dir, "coxeter_band.json", doc(fixtures::cc_h1(), "width-1 band, k = 2"));

    nlohmann::json pieces = nlohmann::json::array();
    const auto& seeds = fixtures::seed_pieces();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        DocumentMeta meta;
        meta.name = "seed piece " + std::to_string(i + 1);
        pieces.push_back(nlohmann::json::parse(serialize(FriezeDocument(seeds[i], meta))));
    }
    emit(dir, "seed_pieces.json", pieces.dump(2) + "\n");

    const SegmentScheme& scheme = SegmentScheme::instance();
    emit(dir, "segment_0.json", doc(scheme.segment(0), "quadratic-field segment 0"));
    emit(dir, "segment_1.json", doc(scheme.segment(1), "quadratic-field segment 1"));
    return 0;
}
