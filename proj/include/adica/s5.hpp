#ifndef ADICA_S5_HPP
#define ADICA_S5_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adica/adic.hpp"
#include "adica/directive.hpp"
#include "adica/error.hpp"
#include "adica/language.hpp"
#include "adica/morphism.hpp"

namespace adica {

// The five-morphism set S on {a, b, c}:
//   D: a->ab, b->b,  c->c      G: a->ba, b->b, c->c
//   E_ab: a->b, b->a, c->c     E_bc: a->a, b->c, c->b
//   M: a->a, b->b, c->b
inline const std::vector<std::string>& s5_names() {
    static const std::vector<std::string> names{"D", "G", "E_ab", "E_bc", "M"};
    return names;
}

inline Morphism s5(const std::string& name) {
    static const Alphabet abc("abc");
    static const std::map<std::string, std::map<char, std::string>> table{
        {"D", {{'a', "ab"}, {'b', "b"}, {'c', "c"}}},
        {"G", {{'a', "ba"}, {'b', "b"}, {'c', "c"}}},
        {"E_ab", {{'a', "b"}, {'b', "a"}, {'c', "c"}}},
        {"E_bc", {{'a', "a"}, {'b', "c"}, {'c', "b"}}},
        {"M", {{'a', "a"}, {'b', "b"}, {'c', "b"}}},
    };
    auto it = table.find(name);
    if (it == table.end()) fail("UnknownName", "no catalog morphism named '" + name + "'");
    return Morphism(abc, abc, it->second, name);
}

inline std::optional<std::string> s5_lookup(const Morphism& m) {
    for (const auto& name : s5_names())
        if (s5(name) == m) return name;
    return std::nullopt;
}

inline MorphismResolver s5_resolver() {
    return [](const std::string& name) -> std::optional<Morphism> {
        for (const auto& n : s5_names())
            if (n == name) return s5(name);
        return std::nullopt;
    };
}

struct BlockReport {
    int from = 0;
    int to = 0;  // inclusive; block = sigma_from ... sigma_to
    bool proper = false;
    bool all_letters = false;  // every letter occurs in every image
};

// A directive over S whose marked blocks sigma_{n_i}...sigma_{n_{i+1}} are all
// proper with every letter occurring in every image.
struct ValidatedDirective {
    DirectiveSequence seq;
    std::vector<int> marks;
    std::vector<BlockReport> blocks;
};

namespace detail {

inline bool block_ok(const Morphism& comp) {
    if (properness(comp).kind != Properness::both) return false;
    for (char y : comp.domain())
        for (char x : comp.codomain())
            if (comp(y).find(x) == std::string::npos) return false;
    return true;
}

}  // namespace detail

// Levels >= 3 must be catalog morphisms; level 2 is the free slot. Marks must
// be given (or found first with search_marks).
inline ValidatedDirective validate_directive(const DirectiveSequence& d,
                                             const std::vector<int>& marks) {
    for (int n = 3; n <= d.last_level(); ++n)
        if (!s5_lookup(d.morphism(n)))
            fail("NonCatalogMorphism",
                 "level " + std::to_string(n) + " is not one of D, G, E_ab, E_bc, M");
    if (marks.size() < 2)
        fail("ParseError", "need at least two marks to form a block");

    ValidatedDirective vd{d, marks, {}};
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
        int from = marks[i], to = marks[i + 1];
        Morphism comp = d.block_composition(from, to);
        BlockReport rep;
        rep.from = from;
        rep.to = to;
        rep.proper = (properness(comp).kind == Properness::both);
        rep.all_letters = true;
        for (char y : comp.domain())
            for (char x : comp.codomain())
                if (comp(y).find(x) == std::string::npos) rep.all_letters = false;
        if (!rep.proper)
            fail("BlockNotProper", "block [" + std::to_string(from) + ", " +
                                       std::to_string(to) + "] is not proper");
        if (!rep.all_letters)
            fail("MissingLetter", "block [" + std::to_string(from) + ", " +
                                      std::to_string(to) +
                                      "] is missing a letter in some image");
        vd.blocks.push_back(rep);
    }
    return vd;
}

struct MarkSearchResult {
    bool found = false;
    std::vector<int> marks;
    std::size_t window = 0;
};

// Bounded search for a valid marking: from each mark, try the next mark within
// `window` levels (depth-first), requiring every block to be proper with all
// letters present. Failure means no marking was found up to the window, not a
// refutation.
inline MarkSearchResult search_marks(const DirectiveSequence& d, std::size_t window = 8) {
    MarkSearchResult res;
    res.window = window;
    int last = d.last_level();
    int start = s5_lookup(d.morphism(2)) ? 2 : 3;
    if (start > last) return res;

    std::vector<int> marks;
    // Success once no further block can fit; the found marks cover the prefix.
    auto dfs = [&](auto&& self, int cur) -> bool {
        marks.push_back(cur);
        if (cur + 1 > last) return true;
        bool any_fit = false;
        for (int next = cur + 1; next <= std::min(last, cur + static_cast<int>(window));
             ++next) {
            any_fit = true;
            if (detail::block_ok(d.block_composition(cur, next))) {
                if (self(self, next)) return true;
            }
        }
        if (!any_fit) return true;
        marks.pop_back();
        return false;
    };

    for (int first = start; first <= std::min(last, start + static_cast<int>(window) - 1);
         ++first) {
        marks.clear();
        if (dfs(dfs, first)) {
            if (marks.size() >= 2) {
                res.found = true;
                res.marks = marks;
                return res;
            }
        }
    }
    return res;
}

struct HarnessReport {
    std::vector<long> p;
    std::vector<long> diff;
    std::optional<std::size_t> n_min;  // smallest n with diff bounded by 2 from n on
    bool bounded_by_two = false;
    std::optional<std::size_t> morse_hedlund;
};

// Computes p(n) for n <= N and locates the point from which the first
// differences stay bounded by 2.
inline HarnessReport complexity_harness(const DirectiveSequence& d, std::size_t N) {
    FactorLanguage lang = factors(d, N + 1);
    if (!lang.stabilized)
        fail("NotStabilized", "the directive prefix did not stabilize the language");
    ComplexityProfile prof = complexity(lang, N + 1);

    HarnessReport rep;
    rep.p.assign(prof.p.begin(), prof.p.begin() + static_cast<long>(N));
    rep.diff = prof.diff;  // diff[n-1] = p(n+1) - p(n), n = 1..N
    rep.morse_hedlund = morse_hedlund_witness(prof);

    // diff[n-1] = p(n+1) - p(n); n_min is one past the last violation.
    std::size_t last_bad = 0;
    for (std::size_t n = 1; n <= rep.diff.size(); ++n)
        if (rep.diff[n - 1] > 2) last_bad = n;
    rep.n_min = last_bad + 1;
    rep.bounded_by_two = last_bad < rep.diff.size();
    return rep;
}

// Rank-3 construction. The validated blocks overlap at the mark
// levels, so the diagram is assembled from the partition blocks
// [n_{2i}, n_{2i+2} - 1]: each contains a validated block as its outer prefix
// and is therefore proper, and the blocks compose back to the original
// product. A head sigma_2...sigma_{n_0 - 1}, when present, is read at the
// first level and exempted from the properness requirement.
inline std::pair<BratteliDiagram, RankReport> build_rank3_bv(const ValidatedDirective& vd,
                                                             int depth,
                                                             const BuildOptions& opts = {}) {
    const DirectiveSequence& d = vd.seq;
    const std::vector<int>& marks = vd.marks;
    if (marks.size() < 3)
        fail("ParseError", "need at least three marks to form a partition block");

    std::vector<DirectiveSequence::Entry> entries;
    std::vector<int> exempt;
    if (marks.front() > 2) {
        Morphism head = d.block_composition(2, marks.front() - 1);
        entries.push_back({head, d.seed(marks.front() - 1)});
        exempt.push_back(2);
    }
    int covered = marks.front() - 1;
    for (std::size_t i = 0;
         i + 2 < marks.size() && static_cast<int>(entries.size()) + 1 < depth; i += 2) {
        int from = marks[i];
        int to = marks[i + 2] - 1;
        Morphism block = d.block_composition(from, to);
        entries.push_back({block, d.seed(to)});
        covered = to;
    }
    if (static_cast<int>(entries.size()) + 1 < depth)
        fail("ParseError", "not enough marked blocks for the requested depth");
    // The rest of the directive rides along level by level. Those entries are
    // never read into the diagram (they lie beyond `depth`), but they keep the
    // source languages of the built levels honest instead of forcing the
    // injectivity check onto the set of all words.
    for (int n = covered + 1; n <= d.last_level(); ++n)
        entries.push_back({d.morphism(n), d.seed(n)});

    DirectiveSequence telescoped(std::move(entries));
    BuildOptions o = opts;
    o.properness_exempt = exempt;
    o.interior_injectivity = true;
    auto [diag, report] = build_bv(telescoped, depth, BuildMode::strict_proper, o);
    return {std::move(diag), report};
}

}  // namespace adica

#endif  // ADICA_S5_HPP
