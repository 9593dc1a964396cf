#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/extend.hpp"
#include "frieze/fixtures.hpp"
#include "frieze/io.hpp"
#include "frieze/unbounded.hpp"

using namespace frieze;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "frieze_io_test";
    fs::create_directories(dir);
    return dir;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FRIEZE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path fixture(const char* name) { return fs::path(FRIEZE_FIXTURES_DIR) / name; }

}  // namespace

TEST_CASE("pattern documents round-trip byte for byte") {
    DocumentMeta meta;
    meta.name = "tame band";
    meta.source = "unit test";
    const std::string bytes = serialize(FriezeDocument(fixtures::tame_h4(), meta));

    FriezeDocument back = parse_document(bytes);
    CHECK(back.pattern.equal_as_pattern(fixtures::tame_h4()));
    CHECK(back.meta.name == "tame band");
    CHECK(back.meta.source == "unit test");
    CHECK(serialize(back) == bytes);
}

TEST_CASE("window mode, rational and oversized entries survive the trip") {
    std::vector<std::vector<Rational>> rows = {
        {Rational(5, 3), Rational(-2)},
        {Rational(BigInt("123456789012345678901234567890")), Rational(0)},
    };
    FriezePattern p = FriezePattern::window(2, 2, rows, -4);
    const std::string bytes = serialize(FriezeDocument(p));
    CHECK(bytes.find("\"5/3\"") != std::string::npos);
    CHECK(bytes.find("\"123456789012345678901234567890\"") != std::string::npos);

    FriezeDocument back = parse_document(bytes);
    CHECK(!back.pattern.is_periodic());
    CHECK(back.pattern.first_row() == -4);
    CHECK(back.pattern.band_rows() == rows);
    CHECK(!back.meta.name.has_value());
    CHECK(serialize(back) == bytes);
}

TEST_CASE("parse rejects malformed and lossy input with positions") {
    CHECK_THROWS_AS(parse_document("{"), ParseError);
    try {
        parse_document("{\n  \"k\": 3,\n  oops\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }

    auto doc_with = [](const std::string& rows, const std::string& vertical) {
        return "{\"k\": 2, \"n\": 2, \"rows\": " + rows + ", \"vertical\": " + vertical + "}";
    };
    const std::string periodic1 = R"({"mode": "periodic", "period": 1})";
    CHECK_THROWS_AS(parse_document(doc_with("[[1, 0.5]]", periodic1)), ParseError);
    CHECK_THROWS_AS(parse_document(doc_with("[[1]]", periodic1)), ParseError);
    CHECK_THROWS_AS(parse_document(doc_with("[]", periodic1)), ParseError);
    CHECK_THROWS_AS(
        parse_document(doc_with("[[1, 2]]", R"({"mode": "periodic", "period": 3})")),
        ParseError);
    CHECK_THROWS_AS(parse_document(doc_with("[[1, 2]]", R"({"mode": "diagonal"})")), ParseError);
    CHECK_THROWS_AS(parse_document(doc_with("[[1, 2]]", R"({"mode": "window"})")), ParseError);
    CHECK_THROWS_AS(parse_document("{\"k\": 1, \"n\": 1, \"rows\": [[1]], \"vertical\": " +
                                   periodic1 + "}"),
                    ParseError);
    CHECK_THROWS_AS(parse_document("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_document(doc_with("[[1, \"2/0\"]]", periodic1)), ParseError);
}

TEST_CASE("document lists accept one document or an array") {
    const std::string one = serialize(FriezeDocument(fixtures::cc_h1()));
    CHECK(parse_document_list(one).size() == 1);
    const std::string body = one.substr(0, one.size() - 1);  // strip newline
    CHECK(parse_document_list("[" + body + ",\n" + body + "]").size() == 2);
    CHECK_THROWS_AS(parse_document_list("[]"), ParseError);
}

TEST_CASE("graph serialization is canonical and lossless") {
    std::vector<GammaVertex> seeds;
    for (const FriezePattern& p : fixtures::seed_pieces()) {
        GammaVertex v;
        for (const auto& row : p.band_rows()) {
            std::vector<long long> r;
            for (const Rational& e : row) r.push_back(e.as_integer()->convert_to<long long>());
            v.rows.push_back(std::move(r));
        }
        seeds.push_back(std::move(v));
    }
    GammaSubgraph g = build_subgraph(seeds, 4, 12, 64);
    REQUIRE(g.vertices.size() == 12);
    const std::string bytes = serialize(g);

    GammaSubgraph back = parse_graph(bytes);
    CHECK(back.vertices.size() == g.vertices.size());
    CHECK(back.edges.size() == g.edges.size());
    CHECK(back.exhausted == g.exhausted);
    CHECK(serialize(back) == bytes);

    // Same graph, different discovery order: identical bytes.
    GammaSubgraph shuffled;
    const long nv = static_cast<long>(g.vertices.size());
    for (long i = nv - 1; i >= 0; --i)
        shuffled.vertices.push_back(g.vertices[static_cast<std::size_t>(i)]);
    for (const auto& [a, b] : g.edges)
        shuffled.edges.emplace_back(nv - 1 - a, nv - 1 - b);
    std::sort(shuffled.edges.begin(), shuffled.edges.end());
    shuffled.exhausted = g.exhausted;
    CHECK(serialize(shuffled) == bytes);

    CHECK_THROWS_AS(parse_graph(R"({"vertices": [[[1]]], "edges": [[0, 5]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": [[[1], [1, 2]]], "edges": []})"), ParseError);
}

TEST_CASE("shipped fixture files parse back to the built-in corpus") {
    const FriezePattern seg0 = SegmentScheme::instance().segment(0);
    const FriezePattern seg1 = SegmentScheme::instance().segment(1);
    struct Pinned {
        const char* file;
        const FriezePattern& pattern;
    };
    const std::vector<Pinned> pinned = {
        {"nine_periodic.json", fixtures::nine_periodic_h5()},
        {"tame_band.json", fixtures::tame_h4()},
        {"nongeneric_band.json", fixtures::nongeneric_h3()},
        {"wild_band.json", fixtures::wild_h4()},
        {"coxeter_band.json", fixtures::cc_h1()},
        {"segment_0.json", seg0},
        {"segment_1.json", seg1},
    };
    for (const Pinned& f : pinned) {
        CAPTURE(f.file);
        const std::string bytes = slurp(fixture(f.file));
        FriezeDocument doc = parse_document(bytes);
        CHECK(doc.pattern.equal_as_pattern(f.pattern));
        CHECK(doc.meta.name.has_value());
        CHECK(serialize(doc) == bytes);
    }

    std::vector<FriezeDocument> pieces = parse_document_list(slurp(fixture("seed_pieces.json")));
    const auto& corpus = fixtures::seed_pieces();
    REQUIRE(pieces.size() == corpus.size());
    for (std::size_t i = 0; i < pieces.size(); ++i)
        CHECK(pieces[i].pattern.equal_as_pattern(corpus[i]));
}

TEST_CASE("cli: verify, classify, xi, dual on the shipped fixtures") {
    CliResult ok = run_cli("verify " + fixture("tame_band.json").string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("ok") != std::string::npos);

    // Break one entry; verification must fail with a witness and exit 1.
    FriezeDocument broken = parse_document(slurp(fixture("tame_band.json")));
    std::vector<std::vector<Rational>> rows = broken.pattern.band_rows();
    rows[0][1] += Rational(1);
    fs::path bad = scratch_dir() / "broken.json";
    spit(bad, serialize(FriezeDocument(FriezePattern::periodic(3, 4, rows))));
    CliResult fail = run_cli("verify " + bad.string());
    CHECK(fail.exit_code == 1);
    CHECK(fail.out.find("window at (") != std::string::npos);

    CliResult nine = run_cli("classify " + fixture("nine_periodic.json").string());
    CHECK(nine.exit_code == 0);
    CHECK(nine.out.find("tame:     yes") != std::string::npos);
    CHECK(nine.out.find("wild:     no") != std::string::npos);

    CliResult wild = run_cli("classify " + fixture("wild_band.json").string());
    CHECK(wild.exit_code == 0);
    CHECK(wild.out.find("wild:     yes") != std::string::npos);

    CliResult xi = run_cli("xi --reconstruct " + fixture("tame_band.json").string());
    CHECK(xi.exit_code == 0);
    CHECK(xi.out.find("matches the input pattern") != std::string::npos);

    CliResult dual = run_cli("dual " + fixture("tame_band.json").string());
    CHECK(dual.exit_code == 0);
    CHECK(dual.out.find("offset (s, t) =") != std::string::npos);

    CHECK(run_cli("verify " + (scratch_dir() / "no_such_file.json").string()).exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    fs::path garbage = scratch_dir() / "garbage.json";
    spit(garbage, "{ not json\n");
    CHECK(run_cli("verify " + garbage.string()).exit_code == 2);
}

TEST_CASE("cli: extend reports forced and free continuations") {
    // The tame fixture stores rows 1..8, so the continuation starts at row 9
    // and must reproduce the 2-periodic band.
    CliResult forced = run_cli("extend --steps 2 --bound 9 " + fixture("tame_band.json").string());
    CHECK(forced.exit_code == 0);
    CHECK(forced.out.find("row 9: (3, 8, 4, 7)") != std::string::npos);
    CHECK(forced.out.find("row 10: (3, 2, 4, 1)") != std::string::npos);

    CliResult free = run_cli("extend --steps 1 --bound 4 --all " +
                             fixture("wild_band.json").string());
    CHECK(free.exit_code == 0);
    CHECK(free.out.find("not forced") != std::string::npos);
    CHECK(free.out.find("free band columns: 1") != std::string::npos);
    CHECK(free.out.find("(1, 1, 2, 1)") != std::string::npos);
}

TEST_CASE("cli: graph, walk, and their documents fit together") {
    fs::path graph_path = scratch_dir() / "graph.json";
    CliResult g1 = run_cli("graph --seed builtin:A12 --bound 4 --max-vertices 12");
    CHECK(g1.exit_code == 0);
    CliResult g2 = run_cli("graph --seed builtin:A12 --bound 4 --max-vertices 12 --analyze");
    CHECK(g2.exit_code == 0);
    CHECK(g1.out == g2.out);  // analysis goes to stderr, artifact is stable
    spit(graph_path, g1.out);

    GammaSubgraph g = parse_graph(g1.out);
    REQUIRE(g.vertices.size() == 12);
    REQUIRE(!g.edges.empty());
    const auto [a, b] = g.edges.front();

    fs::path walk_path = scratch_dir() / "walk.json";
    CliResult walk = run_cli("walk --graph " + graph_path.string() + " --word ids:" +
                             std::to_string(a) + "," + std::to_string(b) + " --out " +
                             walk_path.string());
    CHECK(walk.exit_code == 0);
    CHECK(walk.out.find("verify: ok") != std::string::npos);
    CHECK(parse_document(slurp(walk_path)).pattern.row_count() == 3);

    CliResult fib = run_cli("walk --graph " + graph_path.string() + " --word fib:60 --out " +
                            walk_path.string());
    CHECK(fib.exit_code == 0);
    CHECK(fib.out.find("verify: ok") != std::string::npos);
    FriezeDocument walked = parse_document(slurp(walk_path));
    CHECK(walked.pattern.row_count() >= 60);

    CliResult badword = run_cli("walk --graph " + graph_path.string() +
                                " --word ids:0,99 --out " + walk_path.string());
    CHECK(badword.exit_code == 2);
}

TEST_CASE("cli: unbounded emits verifiable segment documents") {
    fs::path dir = scratch_dir() / "segments";
    CliResult res = run_cli("unbounded --range -1..1 --emit " + dir.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("verify: ok") != std::string::npos);
    for (const char* name : {"segment_-1.json", "segment_0.json", "segment_1.json",
                             "stacked.json"}) {
        CAPTURE(name);
        FriezeDocument doc = parse_document(slurp(dir / name));
        CHECK(verify_slk(doc.pattern).ok());
    }
    CHECK(parse_document(slurp(dir / "stacked.json")).pattern.first_row() == -11);

    CHECK(run_cli("unbounded --range nonsense").exit_code == 2);
}

TEST_CASE("cli: enumerate prints the sweep and honors its budget") {
    CliResult res = run_cli("enumerate --k 3 --n 1 --bound-schedule 8,16 --budget 120");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("stabilized: 5 patterns, 1 shift classes") != std::string::npos);
    CHECK(res.out.find("note: ") != std::string::npos);

    CliResult starved = run_cli("enumerate --k 3 --n 3 --bound-schedule 16 --budget 0.05");
    CHECK(starved.exit_code == 3);
    CHECK(starved.out.find("budget exhausted") != std::string::npos);
}
