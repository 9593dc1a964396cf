#include "frieze/extend.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "frieze/classify.hpp"
#include "frieze/errors.hpp"

namespace frieze {
namespace {

// Determinant of the k x k window whose top-left corner is (1, j) in the
// window pattern formed by the known rows plus one candidate row.
Rational stacked_window_det(const std::vector<std::vector<Rational>>& known,
                            const std::vector<Rational>& cand, long j) {
    std::vector<std::vector<Rational>> rows = known;
    rows.push_back(cand);
    const long k = static_cast<long>(rows.size());
    const long n = static_cast<long>(cand.size());
    FriezePattern f = FriezePattern::window(k, n, rows, 1);
    return f.minor_det(1, j, k);
}

bool closes_up(const std::vector<std::vector<Rational>>& known,
               const std::vector<Rational>& cand, Position* first_bad) {
    std::vector<std::vector<Rational>> rows = known;
    rows.push_back(cand);
    const long k = static_cast<long>(rows.size());
    const long n = static_cast<long>(cand.size());
    FriezePattern f = FriezePattern::window(k, n, rows, 1);
    VerifyReport rep = verify_slk(f);
    if (!rep.ok() && first_bad != nullptr) *first_bad = rep.failures.front().at;
    return rep.ok();
}

bool within(const Rational& v, const IntegerRange& box) {
    auto z = v.as_integer();
    return z && *z >= box.lo && *z <= box.hi;
}

// Depth-first enumeration over the free entries; forced entries must also
// land inside the box so that every reported row obeys the constraint.
void enumerate_rows(const std::vector<std::vector<Rational>>& known,
                    const std::vector<Rational>& pivots, const IntegerRange& box, long j,
                    std::vector<Rational>& cand, std::vector<std::vector<Rational>>& out) {
    const long n = static_cast<long>(cand.size());
    if (j > n) {
        if (closes_up(known, cand, nullptr)) out.push_back(cand);
        return;
    }
    if (!pivots[j - 1].is_zero()) {
        Rational d0 = stacked_window_det(known, cand, j);
        Rational u = (Rational(1) - d0) / pivots[j - 1];
        if (!within(u, box)) return;
        cand[j - 1] = u;
        enumerate_rows(known, pivots, box, j + 1, cand, out);
        cand[j - 1] = Rational(0);
        return;
    }
    // Zero pivot: the window value ignores this entry, so it must already be
    // right; if so the entry itself ranges over the whole box.
    if (stacked_window_det(known, cand, j) != Rational(1)) return;
    for (long long v = box.lo; v <= box.hi; ++v) {
        cand[j - 1] = Rational(v);
        enumerate_rows(known, pivots, box, j + 1, cand, out);
    }
    cand[j - 1] = Rational(0);
}

}  // namespace

ContinuationResult continue_row(const std::vector<std::vector<Rational>>& known_rows,
                                const Constraint& constraint) {
    if (known_rows.empty()) throw ShapeMismatch("continue_row: need at least one known row");
    const long n = static_cast<long>(known_rows.front().size());
    if (n < 1) throw ShapeMismatch("continue_row: rows must be nonempty");
    for (const auto& r : known_rows)
        if (static_cast<long>(r.size()) != n)
            throw ShapeMismatch("continue_row: ragged known rows");
    const long k = static_cast<long>(known_rows.size()) + 1;

    ContinuationResult res;
    std::vector<Rational> cand(static_cast<std::size_t>(n), Rational(0));

    // Windows left of the first unknown involve only known data; if one of
    // them is already off there is nothing to solve.
    for (long j = 1 - k; j <= 0; ++j) {
        if (stacked_window_det(known_rows, cand, j) != Rational(1)) {
            res.kind = ContinuationResult::Kind::Inconsistent;
            res.inconsistent_at = Position{1, j};
            return res;
        }
    }

    // The determinant of window j is affine in the j-th unknown; the
    // coefficient is a minor of the known rows only, so it can be read off
    // up front by differencing.
    std::vector<Rational> pivots;
    pivots.reserve(static_cast<std::size_t>(n));
    for (long j = 1; j <= n; ++j) {
        Rational at0 = stacked_window_det(known_rows, cand, j);
        cand[j - 1] = Rational(1);
        Rational at1 = stacked_window_det(known_rows, cand, j);
        cand[j - 1] = Rational(0);
        pivots.push_back(at1 - at0);
        if (pivots.back().is_zero()) res.free_positions.push_back(j);
    }

    // Forced march up to the first free entry (or the end).
    long first_free = n + 1;
    for (long j = 1; j <= n; ++j) {
        Rational d0 = stacked_window_det(known_rows, cand, j);
        if (!pivots[j - 1].is_zero()) {
            cand[j - 1] = (Rational(1) - d0) / pivots[j - 1];
            continue;
        }
        if (d0 != Rational(1)) {
            res.kind = ContinuationResult::Kind::Inconsistent;
            res.inconsistent_at = Position{1, j};
            return res;
        }
        first_free = j;
        break;
    }

    if (first_free > n) {
        // Every entry was forced; the trailing windows decide the outcome.
        Position bad{0, 0};
        if (closes_up(known_rows, cand, &bad)) {
            res.kind = ContinuationResult::Kind::Unique;
            res.unique_row = cand;
        } else {
            res.kind = ContinuationResult::Kind::Inconsistent;
            res.inconsistent_at = bad;
        }
        return res;
    }

    res.kind = ContinuationResult::Kind::Free;
    if (std::holds_alternative<ExactRational>(constraint)) return res;

    const auto& box = std::get<IntegerRange>(constraint);
    for (long j = 1; j < first_free; ++j)
        if (!within(cand[j - 1], box)) return res;  // forced prefix already escapes
    enumerate_rows(known_rows, pivots, box, first_free, cand, res.solutions);
    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

// --- graph machinery -------------------------------------------------------

std::string GammaVertex::key() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) os << '|';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0) os << ',';
            os << rows[r][c];
        }
    }
    return os.str();
}

std::vector<GammaVertex> successors(const GammaVertex& v, long long bound) {
    if (v.rows.empty()) throw ShapeMismatch("successors: vertex has no rows");
    std::vector<std::vector<Rational>> known;
    known.reserve(v.rows.size());
    for (const auto& r : v.rows) {
        std::vector<Rational> row;
        row.reserve(r.size());
        for (long long x : r) row.emplace_back(x);
        known.push_back(std::move(row));
    }

    ContinuationResult res = continue_row(known, IntegerRange{0, bound});
    std::vector<std::vector<long long>> next_rows;
    auto admit = [&](const std::vector<Rational>& row) {
        std::vector<long long> out;
        out.reserve(row.size());
        for (const auto& e : row) {
            auto z = e.as_integer();
            if (!z || *z < 0 || *z > bound) return;
            out.push_back(z->convert_to<long long>());
        }
        next_rows.push_back(std::move(out));
    };
    if (res.kind == ContinuationResult::Kind::Unique) admit(res.unique_row);
    if (res.kind == ContinuationResult::Kind::Free)
        for (const auto& s : res.solutions) admit(s);

    std::vector<GammaVertex> out;
    for (auto& nr : next_rows) {
        GammaVertex w;
        w.rows.assign(v.rows.begin() + 1, v.rows.end());
        w.rows.push_back(std::move(nr));
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(),
              [](const GammaVertex& a, const GammaVertex& b) { return a.rows < b.rows; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GammaSubgraph build_subgraph(const std::vector<GammaVertex>& seeds, long long bound,
                             std::size_t max_vertices, long max_depth) {
    GammaSubgraph g;
    std::map<std::string, long> index;
    std::deque<std::pair<long, long>> queue;  // (vertex id, depth discovered at)

    for (const auto& s : seeds) {
        if (index.count(s.key())) continue;
        if (g.vertices.size() >= max_vertices) {
            g.exhausted = true;
            continue;
        }
        long id = static_cast<long>(g.vertices.size());
        index.emplace(s.key(), id);
        g.vertices.push_back(s);
        queue.emplace_back(id, 0);
    }

    std::set<std::pair<long, long>> edges;
    while (!queue.empty()) {
        auto [id, depth] = queue.front();
        queue.pop_front();
        if (depth >= max_depth) {
            g.frontier.push_back(id);
            g.exhausted = true;
            continue;
        }
        GammaVertex cur = g.vertices[static_cast<std::size_t>(id)];  // copy: vector may grow
        for (const GammaVertex& w : successors(cur, bound)) {
            auto it = index.find(w.key());
            if (it != index.end()) {
                edges.emplace(id, it->second);
            } else if (g.vertices.size() < max_vertices) {
                long nid = static_cast<long>(g.vertices.size());
                index.emplace(w.key(), nid);
                g.vertices.push_back(w);
                edges.emplace(id, nid);
                queue.emplace_back(nid, depth + 1);
            } else {
                g.exhausted = true;  // vertex (and its edge) dropped
            }
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

GammaSubgraph prune_dead_ends(const GammaSubgraph& g) {
    const std::size_t nv = g.vertices.size();
    std::vector<bool> alive(nv, true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long> outdeg(nv, 0);
        for (const auto& [a, b] : g.edges)
            if (alive[static_cast<std::size_t>(a)] && alive[static_cast<std::size_t>(b)])
                ++outdeg[static_cast<std::size_t>(a)];
        for (std::size_t v = 0; v < nv; ++v) {
            if (alive[v] && outdeg[v] == 0) {
                alive[v] = false;
                changed = true;
            }
        }
    }

    GammaSubgraph out;
    out.exhausted = g.exhausted;
    std::vector<long> remap(nv, -1);
    for (std::size_t v = 0; v < nv; ++v) {
        if (!alive[v]) continue;
        remap[v] = static_cast<long>(out.vertices.size());
        out.vertices.push_back(g.vertices[v]);
    }
    for (const auto& [a, b] : g.edges) {
        long ra = remap[static_cast<std::size_t>(a)];
        long rb = remap[static_cast<std::size_t>(b)];
        if (ra >= 0 && rb >= 0) out.edges.emplace_back(ra, rb);
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (long f : g.frontier)
        if (remap[static_cast<std::size_t>(f)] >= 0)
            out.frontier.push_back(remap[static_cast<std::size_t>(f)]);
    return out;
}

namespace {

struct CycleSearch {
    const std::vector<std::vector<long>>& adj;
    std::size_t cap;
    std::size_t* budget;
    long start = 0;
    std::vector<bool> on_path;
    std::vector<long> path;
    std::vector<std::vector<long>>* out;

    void run(long v) {
        if (*budget == 0) throw BudgetExhausted("cycle search budget spent");
        --*budget;
        on_path[static_cast<std::size_t>(v)] = true;
        path.push_back(v);
        for (long w : adj[static_cast<std::size_t>(v)]) {
            if (w == start) {
                out->push_back(path);
            } else if (w > start && !on_path[static_cast<std::size_t>(w)] &&
                       path.size() < cap) {
                run(w);
            }
        }
        path.pop_back();
        on_path[static_cast<std::size_t>(v)] = false;
    }
};

void longest_path_from(const std::vector<std::vector<long>>& adj, long v,
                       std::vector<bool>& used, std::vector<long>& path,
                       std::vector<long>& best, std::size_t* budget) {
    if (*budget == 0) throw BudgetExhausted("path search budget spent");
    --*budget;
    used[static_cast<std::size_t>(v)] = true;
    path.push_back(v);
    if (path.size() > best.size()) best = path;
    for (long w : adj[static_cast<std::size_t>(v)])
        if (!used[static_cast<std::size_t>(w)]) longest_path_from(adj, w, used, path, best, budget);
    path.pop_back();
    used[static_cast<std::size_t>(v)] = false;
}

}  // namespace

GraphAnalysis analyze(const GammaSubgraph& g, std::size_t max_cycle_len,
                      std::size_t work_budget) {
    const std::size_t nv = g.vertices.size();
    std::vector<std::vector<long>> adj(nv);
    for (const auto& [a, b] : g.edges) adj[static_cast<std::size_t>(a)].push_back(b);
    for (auto& lst : adj) std::sort(lst.begin(), lst.end());

    GraphAnalysis res;
    std::size_t budget = work_budget;

    // Each simple cycle is reported exactly once, anchored at its smallest
    // vertex: the search from s never descends below s.
    CycleSearch cs{adj, max_cycle_len, &budget, 0, std::vector<bool>(nv, false), {}, &res.cycles};
    for (long s = 0; s < static_cast<long>(nv); ++s) {
        cs.start = s;
        cs.run(s);
    }

    std::vector<bool> used(nv, false);
    std::vector<long> path;
    for (long s = 0; s < static_cast<long>(nv); ++s)
        longest_path_from(adj, s, used, path, res.longest_path, &budget);
    return res;
}

FriezePattern walk_frieze(const GammaSubgraph& g, const std::vector<long>& word) {
    if (word.empty()) throw NotAWalk("empty word");
    std::set<std::pair<long, long>> edges(g.edges.begin(), g.edges.end());
    for (std::size_t t = 0; t < word.size(); ++t) {
        if (word[t] < 0 || word[t] >= static_cast<long>(g.vertices.size()))
            throw NotAWalk("vertex index out of range at step " + std::to_string(t));
        if (t > 0 && !edges.count({word[t - 1], word[t]}))
            throw NotAWalk("no edge " + std::to_string(word[t - 1]) + " -> " +
                           std::to_string(word[t]));
    }

    const GammaVertex& head = g.vertices[static_cast<std::size_t>(word[0])];
    const long n = head.rows.empty() ? 0 : static_cast<long>(head.rows.front().size());
    const long k = static_cast<long>(head.rows.size()) + 1;

    std::vector<std::vector<Rational>> rows;
    auto push_row = [&](const std::vector<long long>& r) {
        std::vector<Rational> row;
        row.reserve(r.size());
        for (long long x : r) row.emplace_back(x);
        rows.push_back(std::move(row));
    };
    for (const auto& r : head.rows) push_row(r);
    for (std::size_t t = 1; t < word.size(); ++t)
        push_row(g.vertices[static_cast<std::size_t>(word[t])].rows.back());
    return FriezePattern::window(k, n, std::move(rows), 1);
}

std::vector<int> fibonacci_word(std::size_t length) {
    std::vector<int> w{0};
    while (w.size() < length) {
        std::vector<int> next;
        next.reserve(w.size() * 2);
        for (int b : w) {
            if (b == 0) {
                next.push_back(0);
                next.push_back(1);
            } else {
                next.push_back(0);
            }
        }
        w = std::move(next);
    }
    w.resize(length);
    return w;
}

std::vector<long> two_loop_walk(const GammaSubgraph& g, const std::vector<long>& cycle_a,
                                const std::vector<long>& cycle_b, std::size_t min_length) {
    if (cycle_a.empty() || cycle_b.empty()) throw NotAWalk("empty loop");

    long shared = -1;
    for (long v : cycle_a)
        if (std::find(cycle_b.begin(), cycle_b.end(), v) != cycle_b.end()) {
            shared = v;
            break;
        }
    if (shared < 0) throw NotAWalk("loops do not meet");

    auto rotate_to = [&](std::vector<long> c) {
        auto it = std::find(c.begin(), c.end(), shared);
        std::rotate(c.begin(), it, c.end());
        return c;
    };
    std::vector<long> a = rotate_to(cycle_a);
    std::vector<long> b = rotate_to(cycle_b);

    const std::size_t shortest = std::min(a.size(), b.size());
    std::vector<int> bits = fibonacci_word(min_length / shortest + 2);

    std::vector<long> word{shared};
    for (std::size_t i = 0; word.size() < min_length; ++i) {
        const std::vector<long>& loop = bits[i] == 0 ? a : b;
        for (std::size_t t = 1; t < loop.size(); ++t) word.push_back(loop[t]);
        word.push_back(shared);
    }
    (void)g;
    return word;
}

std::optional<long> vertical_period_bounded(const FriezePattern& f, long max_p) {
    const auto& rows = f.band_rows();
    const long m = static_cast<long>(rows.size());
    if (f.is_periodic()) {
        auto mp = f.minimal_period();
        if (mp && *mp <= max_p) return mp;
        return std::nullopt;
    }
    for (long p = 1; p <= std::min(max_p, m - 1); ++p) {
        bool ok = true;
        for (long i = 0; i + p < m && ok; ++i)
            ok = rows[static_cast<std::size_t>(i)] == rows[static_cast<std::size_t>(i + p)];
        if (ok) return p;
    }
    return std::nullopt;
}

}  // namespace frieze
