#ifndef FRIEZE_EXTEND_HPP
#define FRIEZE_EXTEND_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "frieze/pattern.hpp"

namespace frieze {

// --- row continuation ------------------------------------------------------
//
// Given k-1 successive band rows, the next row is pinned down window by
// window: the determinant condition on the j-th new k x k window is affine in
// the j-th new entry, with coefficient equal to a (k-1)-minor of the known
// rows.  Nonzero minor => the entry is forced; zero minor => the window
// becomes a consistency constraint and the entry ranges freely.

struct IntegerRange {
    long long lo;
    long long hi;
};
struct ExactRational {};  // no enumeration of free entries, just report them

using Constraint = std::variant<IntegerRange, ExactRational>;

struct ContinuationResult {
    enum class Kind { Unique, Free, Inconsistent };
    Kind kind;

    // Kind::Unique — the single continuation (verified to close).
    std::vector<Rational> unique_row;

    // Kind::Free — every fully-verified row with the free entries drawn from
    // the integer range, in ascending order; may be empty (a dead end).
    // free_positions are the 1-based band columns whose pivot minor vanished.
    std::vector<std::vector<Rational>> solutions;
    std::vector<long> free_positions;

    // Kind::Inconsistent — top-left corner of the first window that cannot
    // reach determinant 1.
    Position inconsistent_at{0, 0};
};

ContinuationResult continue_row(const std::vector<std::vector<Rational>>& known_rows,
                                const Constraint& constraint);

// --- the successor graph ---------------------------------------------------

struct GammaVertex {
    // k-1 band rows of nonnegative integers, each of length n.
    std::vector<std::vector<long long>> rows;

    std::string key() const;  // canonical encoding, e.g. "1,1,2|1,1,4"
    bool operator==(const GammaVertex& o) const { return rows == o.rows; }
};

// All successor vertices of v: overlap the last k-2 rows and append one
// integer row in [0, bound] so the stacked k rows satisfy the window
// condition; canonically sorted.
std::vector<GammaVertex> successors(const GammaVertex& v, long long bound);

struct GammaSubgraph {
    std::vector<GammaVertex> vertices;         // in insertion (BFS) order
    std::vector<std::pair<long, long>> edges;  // (from, to) vertex indices, sorted
    std::vector<long> frontier;                // admitted but not expanded
    bool exhausted = false;                    // some limit cut the search
};

GammaSubgraph build_subgraph(const std::vector<GammaVertex>& seeds, long long bound,
                             std::size_t max_vertices, long max_depth);

// Iterated removal of vertices with no outgoing edge (in the recorded
// graph); indices are compacted, relative order preserved.
GammaSubgraph prune_dead_ends(const GammaSubgraph& g);

struct GraphAnalysis {
    // Every simple cycle up to the length cap, written starting from its
    // smallest vertex index (which also dedupes rotations).
    std::vector<std::vector<long>> cycles;
    std::vector<long> longest_path;  // one maximum-length simple path
};

GraphAnalysis analyze(const GammaSubgraph& g, std::size_t max_cycle_len = 64,
                      std::size_t work_budget = 4'000'000);

// Stack the vertices of a directed walk into a window-mode pattern: the
// first vertex contributes its k-1 rows, every further step appends the new
// row of its target vertex.  Throws NotAWalk if a step is not an edge.
FriezePattern walk_frieze(const GammaSubgraph& g, const std::vector<long>& word);

// Prefix of the binary Fibonacci word (fixed point of 0 -> 01, 1 -> 0);
// aperiodic, used to alternate loops without ever settling into a period.
std::vector<int> fibonacci_word(std::size_t length);

// Build a walk that traverses cycle_a / cycle_b (which must share at least
// one vertex) according to the Fibonacci word, until the walk has at least
// min_length vertices.
std::vector<long> two_loop_walk(const GammaSubgraph& g, const std::vector<long>& cycle_a,
                                const std::vector<long>& cycle_b, std::size_t min_length);

// Smallest vertical period <= max_p of a window pattern's stored rows, if
// any; walks of aperiodic words are expected to report nullopt.
std::optional<long> vertical_period_bounded(const FriezePattern& f, long max_p);

}  // namespace frieze

#endif  // FRIEZE_EXTEND_HPP
