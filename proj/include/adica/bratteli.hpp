#ifndef ADICA_BRATTELI_HPP
#define ADICA_BRATTELI_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adica/error.hpp"
#include "adica/morphism.hpp"

namespace adica {

// Ordered Bratteli diagram, truncated at a finite depth. Levels are numbered
// 0..depth with V_0 = {v0}; the ordered upward edge fibers at level n >= 2
// are exactly the images of the level-n morphism (vertex v has edges to the
// letters of sigma_n(v), in image order). Each V_1 vertex has a single edge
// to v0.
class BratteliDiagram {
public:
    static BratteliDiagram build_from_morphisms(std::vector<Morphism> ms) {
        if (ms.empty()) fail("EmptyInput", "need at least one level morphism");
        for (std::size_t i = 1; i < ms.size(); ++i)
            if (ms[i].codomain() != ms[i - 1].domain())
                fail("AlphabetMismatch",
                     "levels " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                         " do not chain");
        return BratteliDiagram(std::move(ms));
    }

    // Levels run 0..depth(); morphisms live at levels 2..depth().
    int depth() const noexcept { return static_cast<int>(levels_.size()) + 1; }

    const Alphabet& vertices(int level) const {
        if (level < 1 || level > depth())
            fail("LevelOutOfRange", "no vertex set at level " + std::to_string(level));
        return level == 1 ? v1() : levels_[static_cast<std::size_t>(level - 2)].domain();
    }

    const Alphabet& v1() const { return levels_.front().codomain(); }

    const Morphism& read_morphism(int level) const {
        if (level < 2 || level > depth())
            fail("LevelOutOfRange", "no morphism at level " + std::to_string(level));
        return levels_[static_cast<std::size_t>(level - 2)];
    }

    // sigma_1^B: every V_1 vertex maps to the root.
    static constexpr char root_vertex = '.';
    Morphism level1_morphism() const {
        std::map<char, std::string> images;
        for (char v : v1()) images[v] = std::string(1, root_vertex);
        return Morphism(v1(), Alphabet(std::string(1, root_vertex)), std::move(images));
    }

    // New diagram whose level morphisms are the compositions of the original
    // ones between consecutive retained levels. Level 1 is always retained;
    // `cuts` must be increasing, within 2..depth, and contain the top.
    BratteliDiagram telescope(const std::vector<int>& cuts) const {
        if (cuts.empty() || cuts.back() != depth())
            fail("InvalidCuts", "cuts must end at the top level");
        int prev = 1;
        std::vector<Morphism> ms;
        for (int c : cuts) {
            if (c <= prev || c > depth())
                fail("InvalidCuts", "cuts must be strictly increasing within 2..depth");
            Morphism acc = read_morphism(prev + 1);
            for (int k = prev + 2; k <= c; ++k) acc = compose(acc, read_morphism(k));
            ms.push_back(std::move(acc));
            prev = c;
        }
        return BratteliDiagram(std::move(ms));
    }

    // True iff the levels 2..witness_depth can be split into consecutive
    // blocks whose composed incidence matrices are all entrywise positive.
    bool is_simple(int witness_depth) const {
        if (witness_depth > depth() || witness_depth < 2)
            fail("LevelOutOfRange", "witness depth out of range");
        int m = witness_depth - 1;  // number of morphism levels considered
        std::vector<bool> reachable(static_cast<std::size_t>(m) + 1, false);
        reachable[0] = true;
        for (int j = 0; j < m; ++j) {
            if (!reachable[static_cast<std::size_t>(j)]) continue;
            IncidenceMatrix prod(read_morphism(j + 2));
            for (int i = j + 1; i <= m; ++i) {
                if (i > j + 1) prod = prod * IncidenceMatrix(read_morphism(i + 1));
                if (prod.positive()) reachable[static_cast<std::size_t>(i)] = true;
            }
        }
        return reachable[static_cast<std::size_t>(m)];
    }

private:
    explicit BratteliDiagram(std::vector<Morphism> ms) : levels_(std::move(ms)) {}

    std::vector<Morphism> levels_;  // levels_[i] = morphism at level i + 2
};

// A finite upward path of the given depth: the top vertex in V_depth plus the
// fiber index chosen at each level 2..depth (the level-1 edge is forced).
// fibers[i] is the edge index at level i + 2, so fibers.front() is the lowest
// choice; the Vershik successor increments in little-endian fashion.
struct Path {
    int depth = 0;
    char top = 0;
    std::vector<int> fibers;  // size depth - 1

    friend bool operator==(const Path&, const Path&) = default;
};

// Vertex sequence v_depth, ..., v_1 determined by a path; result[i] is the
// vertex at level depth - i.
inline std::vector<char> path_vertices(const BratteliDiagram& d, const Path& p) {
    if (p.depth < 1 || p.depth > d.depth())
        fail("LevelOutOfRange", "path depth out of range");
    if (static_cast<int>(p.fibers.size()) != p.depth - 1)
        fail("LevelOutOfRange", "path has wrong number of fiber indices");
    std::vector<char> vs;
    char v = p.top;
    if (!d.vertices(p.depth).contains(v))
        fail("UnknownLetter", std::string("top vertex '") + v + "' not at level " +
                                  std::to_string(p.depth));
    vs.push_back(v);
    for (int level = p.depth; level >= 2; --level) {
        const std::string& fiber = d.read_morphism(level)(v);
        int idx = p.fibers[static_cast<std::size_t>(level - 2)];
        if (idx < 0 || idx >= static_cast<int>(fiber.size()))
            fail("LevelOutOfRange", "fiber index out of range at level " +
                                        std::to_string(level));
        v = fiber[static_cast<std::size_t>(idx)];
        vs.push_back(v);
    }
    return vs;
}

inline char v1_vertex(const BratteliDiagram& d, const Path& p) {
    return path_vertices(d, p).back();
}

// All-minimal path descending from `top` (every fiber index 0).
inline Path min_path(const BratteliDiagram& d, int depth, char top) {
    Path p{depth, top, std::vector<int>(static_cast<std::size_t>(depth - 1), 0)};
    path_vertices(d, p);  // validates
    return p;
}

inline Path min_path(const BratteliDiagram& d, int depth) {
    return min_path(d, depth, d.vertices(depth).letter(0));
}

// All-maximal path descending from `top`.
inline Path max_path(const BratteliDiagram& d, int depth, char top) {
    Path p{depth, top, {}};
    p.fibers.resize(static_cast<std::size_t>(depth - 1));
    char v = top;
    for (int level = depth; level >= 2; --level) {
        const std::string& fiber = d.read_morphism(level)(v);
        p.fibers[static_cast<std::size_t>(level - 2)] = static_cast<int>(fiber.size()) - 1;
        v = fiber.back();
    }
    return p;
}

inline Path max_path(const BratteliDiagram& d, int depth) {
    return max_path(d, depth, d.vertices(depth).letter(0));
}

// Desk-scale uniqueness of the extreme paths: all-minimal (resp. all-maximal)
// descents from distinct top vertices merge below the top iff at every level
// the fiber-minimal (resp. -maximal) edges share one target.
struct ExtremaReport {
    bool unique_min = true;
    bool unique_max = true;
    // Per level 2..depth: distinct targets of fiber-minimal / -maximal edges.
    std::vector<std::set<char>> min_targets;
    std::vector<std::set<char>> max_targets;
};

inline ExtremaReport unique_extrema_check(const BratteliDiagram& d, int depth) {
    ExtremaReport rep;
    for (int level = 2; level <= depth; ++level) {
        const Morphism& m = d.read_morphism(level);
        std::set<char> mins, maxs;
        for (char v : m.domain()) {
            mins.insert(m(v).front());
            maxs.insert(m(v).back());
        }
        if (mins.size() > 1) rep.unique_min = false;
        if (maxs.size() > 1) rep.unique_max = false;
        rep.min_targets.push_back(std::move(mins));
        rep.max_targets.push_back(std::move(maxs));
    }
    return rep;
}

// Immediate successor in the reverse-lexicographic order on same-depth paths
// sharing the top vertex: bump the lowest non-maximal edge, reset everything
// below it to the minimal descent. `wrap` sends the maximal path back to the
// minimal one instead of failing.
inline Path vershik_successor(const BratteliDiagram& d, const Path& p, bool wrap = false) {
    std::vector<char> vs = path_vertices(d, p);  // vs[i] = vertex at level depth - i
    for (int level = 2; level <= p.depth; ++level) {
        char source = vs[static_cast<std::size_t>(p.depth - level)];
        const std::string& fiber = d.read_morphism(level)(source);
        int idx = p.fibers[static_cast<std::size_t>(level - 2)];
        if (idx + 1 < static_cast<int>(fiber.size())) {
            Path next = p;
            next.fibers[static_cast<std::size_t>(level - 2)] = idx + 1;
            for (int below = 2; below < level; ++below)
                next.fibers[static_cast<std::size_t>(below - 2)] = 0;
            return next;
        }
    }
    if (wrap) return min_path(d, p.depth, p.top);
    fail("MaximalPath", "the maximal path has no successor in the truncated diagram");
}

struct OrbitCoding {
    std::string word;  // V_1 vertices of the successive iterates
    bool complete = true;
};

// Word whose i-th letter is the V_1 vertex of the i-th Vershik iterate of
// `start` (the start itself contributes the first letter).
inline OrbitCoding orbit_coding(const BratteliDiagram& d, Path start, std::size_t steps) {
    OrbitCoding out;
    Path p = std::move(start);
    for (std::size_t i = 0; i < steps; ++i) {
        out.word += v1_vertex(d, p);
        if (i + 1 == steps) break;
        try {
            p = vershik_successor(d, p);
        } catch (const Error& e) {
            if (e.kind() != "MaximalPath") throw;
            out.complete = false;
            break;
        }
    }
    return out;
}

// Deterministic DOT rendering: one rank per level, edges labeled with their
// fiber index, everything enumerated in (level, source letter, index) order.
inline std::string export_dot(const BratteliDiagram& d) {
    std::string out = "digraph bratteli {\n  rankdir=BT;\n  node [shape=circle];\n";
    out += "  L0 [label=\"v0\"];\n";
    for (int level = 1; level <= d.depth(); ++level) {
        out += "  { rank=same;";
        for (char v : d.vertices(level)) {
            out += " L" + std::to_string(level) + "_" + v + " [label=\"" + v + "\"];";
        }
        out += " }\n";
    }
    for (char v : d.v1()) out += "  L1_" + std::string(1, v) + " -> L0 [label=\"0\"];\n";
    for (int level = 2; level <= d.depth(); ++level) {
        const Morphism& m = d.read_morphism(level);
        for (char v : m.domain()) {
            const std::string& fiber = m(v);
            for (std::size_t i = 0; i < fiber.size(); ++i)
                out += "  L" + std::to_string(level) + "_" + v + " -> L" +
                       std::to_string(level - 1) + "_" + fiber[i] + " [label=\"" +
                       std::to_string(i) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

}  // namespace adica

#endif  // ADICA_BRATTELI_HPP
