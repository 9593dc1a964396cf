// Command-line front end: load pattern/graph documents, run the library
// operations on them, and report results with stable exit codes:
//   0 = the checked property holds / the computation succeeded
//   1 = the property fails (a witness is printed) or the operation cannot
//       be carried out on this input
//   2 = usage or parse errors
//   3 = a work budget ran out before an answer was reached
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frieze/classify.hpp"
#include "frieze/enumerate.hpp"
#include "frieze/errors.hpp"
#include "frieze/extend.hpp"
#include "frieze/fixtures.hpp"
#include "frieze/io.hpp"
#include "frieze/unbounded.hpp"
#include "frieze/xi.hpp"

using namespace frieze;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string row_text(const std::vector<Rational>& row) {
    std::string s = "(";
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += ", ";
        s += row[i].to_string();
    }
    return s + ")";
}

void print_failures(const std::vector<WindowFailure>& failures, std::size_t limit = 5) {
    for (std::size_t i = 0; i < failures.size() && i < limit; ++i)
        std::cout << "  window at (" << failures[i].at.i << ", " << failures[i].at.j
                  << "): det = " << failures[i].det.to_string() << "\n";
    if (failures.size() > limit)
        std::cout << "  ... and " << failures.size() - limit << " more\n";
}

int run_verify(const std::string& path) {
    FriezeDocument doc = parse_document(read_file(path));
    VerifyReport rep = verify_slk(doc.pattern);
    if (rep.ok()) {
        std::cout << "ok: every adjacent " << doc.pattern.k() << "x" << doc.pattern.k()
                  << " window has determinant 1\n";
        return 0;
    }
    std::cout << "FAIL: " << rep.failures.size() << " window(s) break the determinant condition\n";
    print_failures(rep.failures);
    return 1;
}

int run_classify(const std::string& path) {
    FriezeDocument doc = parse_document(read_file(path));
    ClassificationReport rep = classify(doc.pattern);
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "is_slk:   " << yn(rep.is_slk) << "\n"
              << "integral: " << yn(rep.integral) << "\n"
              << "nonzero:  " << yn(rep.nonzero) << "\n"
              << "positive: " << yn(rep.positive) << "\n"
              << "period:   " << (rep.period ? std::to_string(*rep.period) : std::string("none"))
              << "\n"
              << "generic:  " << yn(rep.generic) << "\n"
              << "tame:     " << yn(rep.tame) << "\n"
              << "wild:     " << yn(rep.wild) << "\n";
    for (const Witness& w : rep.witnesses)
        std::cout << "  " << w.property << " at (" << w.at.i << ", " << w.at.j
                  << "): " << w.value.to_string() << "\n";
    return 0;
}

int run_xi(const std::string& path, bool do_reconstruct) {
    FriezeDocument doc = parse_document(read_file(path));
    XiSequence s = extract_xi(doc.pattern);
    std::cout << "k = " << s.k << ", n = " << s.n << ", period " << s.period()
              << " coefficient tuples:\n";
    for (std::size_t j = 0; j < s.tuples.size(); ++j)
        std::cout << "  c(" << j + 1 << ") = " << row_text(s.tuples[j]) << "\n";
    if (!do_reconstruct) return 0;

    FriezePattern back = reconstruct(s);
    bool same;
    if (doc.pattern.is_periodic()) {
        same = back.equal_as_pattern(doc.pattern);
    } else {
        same = true;
        for (long i = doc.pattern.first_row(); i <= doc.pattern.last_row() && same; ++i)
            same = doc.pattern.band_row(i) == back.band_row(i);
    }
    if (!same) {
        std::cout << "FAIL: reconstruction differs from the input pattern\n";
        return 1;
    }
    std::cout << "reconstruction matches the input pattern\n";
    return 0;
}

int run_dual(const std::string& path) {
    FriezeDocument doc = parse_document(read_file(path));
    DualArray d = dual(doc.pattern);
    std::cout << "adjacent-minor array, rows " << d.first_row << ".."
              << d.first_row + static_cast<long>(d.rows.size()) - 1 << ", row i starts at column i "
              << (d.col_offset < 0 ? "- " : "+ ")
              << (d.col_offset < 0 ? -d.col_offset : d.col_offset) << ":\n";
    for (std::size_t r = 0; r < d.rows.size(); ++r)
        std::cout << "  row " << d.first_row + static_cast<long>(r) << ": " << row_text(d.rows[r])
                  << "\n";
    if (auto offset = locate_dual_offset(doc.pattern))
        std::cout << "matches the source array at offset (s, t) = (" << offset->first << ", "
                  << offset->second << ")\n";
    else
        std::cout << "no translate of the source array matches\n";
    return 0;
}

int run_extend(const std::string& path, long steps, long long bound, bool all) {
    FriezeDocument doc = parse_document(read_file(path));
    const FriezePattern& p = doc.pattern;
    const long k = p.k();
    if (p.row_count() < k - 1) {
        std::cout << "FAIL: need at least " << k - 1 << " stored rows to continue\n";
        return 1;
    }
    std::vector<std::vector<Rational>> window(p.band_rows().end() - (k - 1),
                                              p.band_rows().end());
    long next_row = p.first_row() + p.row_count();
    for (long s = 0; s < steps; ++s) {
        ContinuationResult res = continue_row(window, IntegerRange{0, bound});
        if (res.kind == ContinuationResult::Kind::Inconsistent) {
            std::cout << "FAIL: no continuation; window at (" << res.inconsistent_at.i << ", "
                      << res.inconsistent_at.j << ") cannot reach determinant 1\n";
            return 1;
        }
        if (res.kind == ContinuationResult::Kind::Free) {
            std::cout << "row " << next_row << " is not forced; free band columns:";
            for (long c : res.free_positions) std::cout << " " << c;
            std::cout << "\n"
                      << res.solutions.size() << " continuation(s) with entries in [0, " << bound
                      << "]\n";
            if (all)
                for (const auto& sol : res.solutions) std::cout << "  " << row_text(sol) << "\n";
            else if (!res.solutions.empty())
                std::cout << "  first: " << row_text(res.solutions.front()) << "\n";
            return 0;
        }
        std::cout << "row " << next_row << ": " << row_text(res.unique_row) << "\n";
        window.erase(window.begin());
        window.push_back(res.unique_row);
        ++next_row;
    }
    return 0;
}

GammaVertex vertex_from_pattern(const FriezePattern& p, const std::string& where) {
    GammaVertex v;
    for (const auto& row : p.band_rows()) {
        std::vector<long long> r;
        for (const Rational& e : row) {
            auto z = e.as_integer();
            if (!z || *z < 0) throw ParseError(where + ": seed entries must be integers >= 0");
            r.push_back(z->convert_to<long long>());
        }
        v.rows.push_back(std::move(r));
    }
    return v;
}

std::vector<GammaVertex> load_seeds(const std::string& spec) {
    std::vector<GammaVertex> seeds;
    if (spec == "builtin:A12") {
        for (const FriezePattern& p : fixtures::seed_pieces())
            seeds.push_back(vertex_from_pattern(p, "builtin:A12"));
        return seeds;
    }
    if (spec.rfind("builtin:", 0) == 0)
        throw ParseError("unknown builtin seed \"" + spec + "\" (available: builtin:A12)");
    std::vector<FriezeDocument> docs = parse_document_list(read_file(spec));
    for (std::size_t i = 0; i < docs.size(); ++i)
        seeds.push_back(vertex_from_pattern(docs[i].pattern,
                                            spec + "[" + std::to_string(i) + "]"));
    return seeds;
}

// Vertex order on stdout is the key-sorted one; remap analysis output the
// same way so indices printed on stderr refer to the emitted document.
std::vector<long> serialized_rank(const GammaSubgraph& g) {
    std::vector<std::size_t> order(g.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.vertices[a].key() < g.vertices[b].key();
    });
    std::vector<long> rank(g.vertices.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<long>(pos);
    return rank;
}

int run_graph(const std::string& seed_spec, long long bound, std::size_t max_vertices,
              long max_depth, bool prune, bool do_analyze) {
    GammaSubgraph g = build_subgraph(load_seeds(seed_spec), bound, max_vertices, max_depth);
    if (prune) g = prune_dead_ends(g);
    std::cerr << "vertices " << g.vertices.size() << ", edges " << g.edges.size() << ", frontier "
              << g.frontier.size() << ", exhausted " << (g.exhausted ? "yes" : "no") << "\n";
    if (do_analyze) {
        GraphAnalysis a = analyze(g);
        std::vector<long> rank = serialized_rank(g);
        std::cerr << "cycles: " << a.cycles.size() << "\n";
        for (const auto& cycle : a.cycles) {
            std::vector<long> c;
            for (long v : cycle) c.push_back(rank[static_cast<std::size_t>(v)]);
            std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
            std::cerr << " ";
            for (long v : c) std::cerr << " " << v;
            std::cerr << "\n";
        }
        std::cerr << "longest simple path: " << a.longest_path.size() << " vertices\n";
    }
    std::cout << serialize(g);
    return 0;
}

std::vector<long> parse_word(const GammaSubgraph& g, const std::string& word) {
    const long nv = static_cast<long>(g.vertices.size());
    if (word.rfind("ids:", 0) == 0) {
        std::vector<long> ids;
        std::stringstream ss(word.substr(4));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                ids.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw ParseError("--word ids: \"" + tok + "\" is not an integer");
            }
            if (ids.back() < 0 || ids.back() >= nv)
                throw ParseError("--word ids: vertex " + tok + " out of range");
        }
        if (ids.empty()) throw ParseError("--word ids: empty vertex list");
        return ids;
    }
    if (word.rfind("fib:", 0) == 0) {
        std::size_t len = 0;
        try {
            len = static_cast<std::size_t>(std::stoull(word.substr(4)));
        } catch (const std::exception&) {
            throw ParseError("--word fib: length is not an integer");
        }
        GraphAnalysis a = analyze(g);
        for (std::size_t i = 0; i < a.cycles.size(); ++i)
            for (std::size_t j = i + 1; j < a.cycles.size(); ++j) {
                bool share = false;
                for (long v : a.cycles[i])
                    share = share ||
                            std::find(a.cycles[j].begin(), a.cycles[j].end(), v) !=
                                a.cycles[j].end();
                if (share) {
                    std::cerr << "alternating cycles of length " << a.cycles[i].size() << " and "
                              << a.cycles[j].size() << "\n";
                    return two_loop_walk(g, a.cycles[i], a.cycles[j], len);
                }
            }
        throw NotAWalk("no two cycles share a vertex, nothing to alternate");
    }
    throw ParseError("--word must be \"ids:v1,v2,...\" or \"fib:<length>\"");
}

int run_walk(const std::string& graph_path, const std::string& word, const std::string& out) {
    GammaSubgraph g = parse_graph(read_file(graph_path));
    std::vector<long> ids = parse_word(g, word);
    FriezePattern f = walk_frieze(g, ids);

    DocumentMeta meta;
    meta.name = "walk";
    write_file(out, serialize(FriezeDocument(f, meta)));

    VerifyReport rep = verify_slk(f);
    const long cap = std::min<long>(1000, f.row_count() - 1);
    auto period = vertical_period_bounded(f, cap);
    std::cout << "walk of " << ids.size() << " vertices -> rows " << f.first_row() << ".."
              << f.last_row() << "\n"
              << "verify: " << (rep.ok() ? "ok" : "FAIL") << "\n"
              << "vertical period <= " << cap << ": "
              << (period ? std::to_string(*period) : std::string("none")) << "\n";
    if (!rep.ok()) {
        print_failures(rep.failures);
        return 1;
    }
    return 0;
}

int run_unbounded(const std::string& range, const std::string& emit_dir) {
    const auto sep = range.find("..");
    long long lo = 0, hi = 0;
    try {
        if (sep == std::string::npos) throw std::invalid_argument("no ..");
        lo = std::stoll(range.substr(0, sep));
        hi = std::stoll(range.substr(sep + 2));
    } catch (const std::exception&) {
        throw ParseError("--range must look like LO..HI, e.g. -3..3");
    }

    StackReport rep = verify_concatenation(lo, hi);
    for (long long ell = lo; ell <= hi; ++ell)
        std::cout << "segment " << ell << ": max band entry "
                  << rep.max_entry[static_cast<std::size_t>(ell - lo)].str() << "\n";
    std::cout << "stacked rows " << 12 * lo + 1 << ".." << 12 * hi + 12
              << " verify: " << (rep.ok ? "ok" : "FAIL") << "\n";
    if (!rep.ok) print_failures(rep.failures);

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        const SegmentScheme& scheme = SegmentScheme::instance();
        for (long long ell = lo; ell <= hi; ++ell) {
            DocumentMeta meta;
            meta.name = "segment " + std::to_string(ell);
            write_file(emit_dir + "/segment_" + std::to_string(ell) + ".json",
                       serialize(FriezeDocument(scheme.segment(ell), meta)));
        }
        DocumentMeta meta;
        meta.name = "segments " + std::to_string(lo) + ".." + std::to_string(hi);
        write_file(emit_dir + "/stacked.json",
                   serialize(FriezeDocument(stacked_segments(lo, hi), meta)));
        std::cout << "wrote " << hi - lo + 1 << " segment document(s) and stacked.json to "
                  << emit_dir << "\n";
    }
    return rep.ok ? 0 : 1;
}

int run_enumerate(long k, long n, const std::string& schedule_text, double budget) {
    std::vector<long long> schedule;
    std::stringstream ss(schedule_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            schedule.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParseError("--bound-schedule: \"" + tok + "\" is not an integer");
        }
    }
    if (schedule.empty()) throw ParseError("--bound-schedule: empty list");

    EnumerationResult res = enumerate_friezes(k, n, schedule, budget);
    std::cout << "bound  patterns  shift-classes  completed\n";
    for (const SweepEntry& e : res.sweep)
        std::cout << std::setw(5) << e.bound << std::setw(10) << e.patterns << std::setw(15)
                  << e.shift_classes << std::setw(11) << (e.completed ? "yes" : "no") << "\n";
    if (res.stabilized)
        std::cout << "stabilized: " << *res.pattern_count << " patterns, "
                  << *res.shift_class_count << " shift classes\n";
    else if (res.budget_exhausted)
        std::cout << "budget exhausted before two consecutive bounds agreed\n";
    else
        std::cout << "no stabilization within the given schedule\n";
    std::cout << "note: " << res.note << "\n";
    return res.budget_exhausted ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SL_k band arithmetic: verification, classification, "
                 "coefficient extraction, continuation, graph search, and censuses"};
    app.require_subcommand(1);

    std::string file, seed_spec, graph_path, word, out, range, emit_dir, schedule;
    long steps = 1, k = 0, n = 0, max_depth = 1'000'000;
    long long bound = 0;
    std::size_t max_vertices = 100'000;
    double budget = 600.0;
    bool do_reconstruct = false, all = false, prune = false, do_analyze = false;

    auto* verify = app.add_subcommand("verify", "check the window determinant condition");
    verify->add_option("file", file, "pattern document")->required();

    auto* classify_cmd = app.add_subcommand("classify", "report structural properties");
    classify_cmd->add_option("file", file, "pattern document")->required();

    auto* xi = app.add_subcommand("xi", "extract the coefficient tuples");
    xi->add_option("file", file, "pattern document")->required();
    xi->add_flag("--reconstruct", do_reconstruct, "rebuild from the tuples and compare");

    auto* dual_cmd = app.add_subcommand("dual", "adjacent-minor array and its offset");
    dual_cmd->add_option("file", file, "pattern document")->required();

    auto* extend = app.add_subcommand("extend", "continue the band row by row");
    extend->add_option("file", file, "pattern document")->required();
    extend->add_option("--steps", steps, "rows to append")->default_val(1);
    extend->add_option("--bound", bound, "admit integer entries in [0, bound]")->required();
    extend->add_flag("--all", all, "list every continuation when a row is not forced");

    auto* graph = app.add_subcommand("graph", "breadth-first successor graph from seeds");
    graph->add_option("--seed", seed_spec, "seed document(s), or builtin:A12")->required();
    graph->add_option("--bound", bound, "admit integer entries in [0, bound]")->required();
    graph->add_option("--max-vertices", max_vertices, "vertex cap")->default_val(100'000);
    graph->add_option("--max-depth", max_depth, "BFS depth cap")->default_val(1'000'000);
    graph->add_flag("--prune", prune, "iteratively drop vertices with no outgoing edge");
    graph->add_flag("--analyze", do_analyze, "report simple cycles and a longest path");

    auto* walk = app.add_subcommand("walk", "stack a graph walk into a pattern document");
    walk->add_option("--graph", graph_path, "graph document")->required();
    walk->add_option("--word", word, "\"ids:v1,v2,...\" or \"fib:<length>\"")->required();
    walk->add_option("--out", out, "output pattern document")->required();

    auto* unb = app.add_subcommand("unbounded", "verify stacked quadratic-field segments");
    unb->add_option("--range", range, "segment range LO..HI")->required();
    unb->add_option("--emit", emit_dir, "write segment documents into this directory");

    auto* enumerate = app.add_subcommand("enumerate", "census of positive integral bands");
    enumerate->add_option("--k", k, "window size")->required();
    enumerate->add_option("--n", n, "band width")->required();
    enumerate->add_option("--bound-schedule", schedule, "comma list of coefficient bounds")
        ->required();
    enumerate->add_option("--budget", budget, "time budget in seconds")->default_val(600.0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(file);
        if (classify_cmd->parsed()) return run_classify(file);
        if (xi->parsed()) return run_xi(file, do_reconstruct);
        if (dual_cmd->parsed()) return run_dual(file);
        if (extend->parsed()) return run_extend(file, steps, bound, all);
        if (graph->parsed())
            return run_graph(seed_spec, bound, max_vertices, max_depth, prune, do_analyze);
        if (walk->parsed()) return run_walk(graph_path, word, out);
        if (unb->parsed()) return run_unbounded(range, emit_dir);
        if (enumerate->parsed()) return run_enumerate(k, n, schedule, budget);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
