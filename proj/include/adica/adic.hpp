#ifndef ADICA_ADIC_HPP
#define ADICA_ADIC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adica/bratteli.hpp"
#include "adica/directive.hpp"
#include "adica/error.hpp"
#include "adica/language.hpp"
#include "adica/morphism.hpp"

namespace adica {

// Levels indexed from `base_level`: even levels come out left proper, odd
// levels right proper; each output is the input or its conjugate.
inline std::vector<Morphism> alternate_conjugates(const std::vector<Morphism>& ms,
                                                  int base_level = 2) {
    std::vector<Morphism> out;
    out.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        int level = base_level + static_cast<int>(i);
        auto rep = properness(ms[i]);
        if (rep.kind == Properness::neither)
            fail("NotProperEnough",
                 "level " + std::to_string(level) + " is neither left nor right proper");
        bool want_left = (level % 2 == 0);
        if (want_left)
            out.push_back(rep.is_left() ? ms[i] : right_conjugate(ms[i]));
        else
            out.push_back(rep.is_right() ? ms[i] : left_conjugate(ms[i]));
    }
    return out;
}

struct InjectivityWitness {
    std::string first;
    std::string second;
    std::string image;
};

struct InjectivityResult {
    enum class Verdict { not_injective, injective_at_scale, unknown };
    Verdict verdict = Verdict::unknown;
    std::size_t scale = 0;
    std::optional<InjectivityWitness> witness;
};

// Exhaustive decision up to length L: distinct words of the source language
// must have distinct images (and distinct letters distinct letter images).
inline InjectivityResult check_injectivity(const Morphism& m, const FactorLanguage& lang,
                                           std::size_t L) {
    if (L > lang.max_len)
        fail("InsufficientLanguage", "injectivity scale exceeds the computed language");
    InjectivityResult res;
    res.scale = L;
    std::map<std::string, std::string> seen;  // image -> source word
    for (std::size_t len = 1; len <= L; ++len) {
        for (const auto& w : lang.of_length(len)) {
            std::string img = m.apply(w);
            auto [it, inserted] = seen.emplace(img, w);
            if (!inserted) {
                res.verdict = InjectivityResult::Verdict::not_injective;
                res.witness = InjectivityWitness{it->second, w, img};
                return res;
            }
        }
    }
    res.verdict = InjectivityResult::Verdict::injective_at_scale;
    return res;
}

namespace detail {

// How far inside the comparison window a disagreement sits. Same-length words
// score the deepest differing position; words of different lengths score the
// shorter of the shared prefix and suffix around the mismatch.
inline std::size_t collision_depth(const std::string& u, const std::string& v) {
    if (u.size() == v.size()) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] != v[i]) best = std::max(best, std::min(i, u.size() - 1 - i));
        return best;
    }
    std::size_t n = std::min(u.size(), v.size());
    std::size_t p = 0;
    while (p < n && u[p] == v[p]) ++p;
    std::size_t s = 0;
    while (s + p < n && u[u.size() - 1 - s] == v[v.size() - 1 - s]) ++s;
    return std::min(p, s);
}

}  // namespace detail

// A collision only refutes injectivity of the induced sequence map when the
// disagreement can sit arbitrarily deep inside its window; collisions pinned
// to a window edge are resolved by context and are compatible with a
// one-to-one map on the subshift. This variant demands a collision at depth
// (L - 1) / 2, the deepest a window of length <= L can exhibit.
inline InjectivityResult check_injectivity_interior(const Morphism& m,
                                                    const FactorLanguage& lang,
                                                    std::size_t L) {
    if (L > lang.max_len)
        fail("InsufficientLanguage", "injectivity scale exceeds the computed language");
    InjectivityResult res;
    res.scale = L;
    std::size_t required = (L >= 1) ? (L - 1) / 2 : 0;

    std::map<std::string, std::vector<std::string>> buckets;
    for (std::size_t len = 1; len <= L; ++len)
        for (const auto& w : lang.of_length(len)) buckets[m.apply(w)].push_back(w);

    std::optional<InjectivityWitness> shortest;
    bool deep_enough = false;
    for (const auto& [img, words] : buckets) {
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                if (!shortest || words[i].size() + words[j].size() <
                                     shortest->first.size() + shortest->second.size())
                    shortest = InjectivityWitness{words[i], words[j], img};
                if (detail::collision_depth(words[i], words[j]) >= required)
                    deep_enough = true;
            }
    }
    if (shortest && deep_enough) {
        res.verdict = InjectivityResult::Verdict::not_injective;
        res.witness = shortest;
    } else {
        res.verdict = InjectivityResult::Verdict::injective_at_scale;
    }
    return res;
}

// Language consisting of every word over `a` up to length L; the conservative
// fallback when a tail directive is too short to certify its factor language.
inline FactorLanguage all_words_language(const Alphabet& a, std::size_t L) {
    FactorLanguage lang;
    lang.max_len = L;
    lang.by_len.resize(L);
    lang.stabilized = true;
    detail::for_each_word(a, L, [&](const std::string& w) {
        if (!w.empty()) lang.by_len[w.size() - 1].insert(w);
    });
    return lang;
}

enum class RankVerdict { expansive_evidence, equicontinuous_evidence, unknown };

struct RankReport {
    int max_vertices = 1;
    bool periodic_tail_detected = false;
    RankVerdict verdict = RankVerdict::unknown;
    std::size_t injectivity_scale = 0;
};

enum class BuildMode { strict_proper, alternating };

struct BuildOptions {
    std::size_t injectivity_scale = 5;
    std::size_t language_len = 24;
    // Level numbers (from 2) exempt from the properness requirement; used by
    // the rank-3 construction whose head block precedes the marked region.
    std::vector<int> properness_exempt;
    // Use the interior-collision criterion instead of the raw pair scan.
    bool interior_injectivity = false;
};

namespace detail {

inline FactorLanguage source_language(const DirectiveSequence& d, int level,
                                      const Morphism& m, std::size_t L) {
    // The source subshift of sigma_level is generated by the tail from
    // level + 1. Fall back to all words over the domain when the tail is
    // missing or fails to certify.
    if (level < d.last_level()) {
        try {
            FactorLanguage lang = factors(d.suffix_from(level + 1), L);
            if (lang.stabilized) return lang;
        } catch (const Error&) {
        }
    }
    return all_words_language(m.domain(), L);
}

}  // namespace detail

// The hypothesis-checked construction: properness per mode, per-level bounded
// injectivity, and the Morse-Hedlund periodicity gate, then the diagram whose
// read morphisms are the (possibly conjugated) directive morphisms.
inline std::pair<BratteliDiagram, RankReport> build_bv(const DirectiveSequence& d,
                                                       int depth, BuildMode mode,
                                                       const BuildOptions& opts = {}) {
    if (depth < 2 || depth > d.last_level())
        fail("LevelOutOfRange", "depth must lie in 2..last directive level");

    std::vector<Morphism> ms;
    for (int n = 2; n <= depth; ++n) ms.push_back(d.morphism(n));

    auto exempt = [&](int level) {
        for (int e : opts.properness_exempt)
            if (e == level) return true;
        return false;
    };

    // Every hypothesis is evaluated so a rejection names all violated ones;
    // the first failure gives the error its kind.
    std::vector<std::pair<std::string, std::string>> failures;

    if (mode == BuildMode::strict_proper) {
        for (int n = 2; n <= depth; ++n) {
            if (exempt(n)) continue;
            if (properness(ms[static_cast<std::size_t>(n - 2)]).kind != Properness::both)
                failures.emplace_back("NotProper",
                                      "level " + std::to_string(n) + " is not proper");
        }
    } else {
        ms = alternate_conjugates(ms, 2);  // throws NotProperEnough
    }

    for (int n = 2; n <= depth; ++n) {
        const Morphism& orig = d.morphism(n);
        FactorLanguage lang =
            detail::source_language(d, n, orig, opts.injectivity_scale);
        auto inj = opts.interior_injectivity
                       ? check_injectivity_interior(orig, lang, opts.injectivity_scale)
                       : check_injectivity(orig, lang, opts.injectivity_scale);
        if (inj.verdict == InjectivityResult::Verdict::not_injective) {
            failures.emplace_back("NotInjective",
                                  "level " + std::to_string(n) + ": words \"" +
                                      inj.witness->first + "\" and \"" +
                                      inj.witness->second + "\" share the image \"" +
                                      inj.witness->image + "\"");
            break;
        }
    }

    try {
        FactorLanguage lang = factors(d, opts.language_len);
        if (!lang.stabilized) {
            failures.emplace_back("NotStabilized",
                                  "the directive prefix did not stabilize the language");
        } else {
            ComplexityProfile prof = complexity(lang, opts.language_len);
            if (auto w = morse_hedlund_witness(prof))
                failures.emplace_back(
                    "PeriodicLanguage",
                    "Morse-Hedlund witness n0 = " + std::to_string(*w) +
                        " (p(n0) = " + std::to_string(prof.p[*w - 1]) + ")");
        }
    } catch (const Error& e) {
        failures.emplace_back(e.kind(), e.what());
    }

    if (!failures.empty()) {
        std::string msg = failures.front().second;
        for (std::size_t i = 1; i < failures.size(); ++i)
            msg += "; also " + failures[i].first + ": " + failures[i].second;
        fail(failures.front().first, msg);
    }

    RankReport report;
    for (const auto& m : ms)
        report.max_vertices =
            std::max(report.max_vertices, static_cast<int>(m.domain().size()));
    report.max_vertices =
        std::max(report.max_vertices, static_cast<int>(ms.front().codomain().size()));
    report.injectivity_scale = opts.injectivity_scale;
    report.periodic_tail_detected = false;
    report.verdict = report.max_vertices >= 2 ? RankVerdict::expansive_evidence
                                              : RankVerdict::equicontinuous_evidence;

    return {BratteliDiagram::build_from_morphisms(std::move(ms)), report};
}

// The Kakutani-Rokhlin data at level n: per letter c of A_n the column word
// tau_n(c) (tau_n = sigma_2...sigma_n, tau_1 = id), and for each level-(n+1)
// atom (c, j) the level-n atom containing it.
struct TowerPartition {
    int level = 0;
    Alphabet letters;                           // A_n
    std::map<char, std::string> column;         // c -> tau_n(c)
    std::map<std::pair<char, int>, std::pair<char, int>> refinement;

    std::size_t height(char c) const { return column.at(c).size(); }
};

inline TowerPartition tower_partition(const DirectiveSequence& d, int n) {
    if (n < 1 || n + 1 > d.last_level())
        fail("LevelOutOfRange", "tower level needs directive entries through level " +
                                    std::to_string(n + 1));
    TowerPartition tp;
    tp.level = n;
    Morphism tau_n = d.prefix_composition(n);
    tp.letters = tau_n.domain();
    for (char c : tp.letters) tp.column[c] = tau_n(c);

    // Decompose each level-(n+1) atom: with sigma_{n+1}(c) = c_1...c_l and i
    // maximal with |tau_n(c_1...c_i)| <= j, the container is
    // (c_{i+1}, j - |tau_n(c_1...c_i)|).
    const Morphism& sig = d.morphism(n + 1);
    for (char c : sig.domain()) {
        const std::string& expansion = sig(c);
        int offset = 0;
        for (char ci : expansion) {
            int h = static_cast<int>(tp.column.at(ci).size());
            for (int j = 0; j < h; ++j)
                tp.refinement[{c, offset + j}] = {ci, j};
            offset += h;
        }
    }
    return tp;
}

struct NestedReport {
    bool nested = true;
    std::vector<std::string> problems;
};

// Structural nestedness at level n: the refinement indices are valid, the
// heights satisfy |tau_{n+1}(c)| = sum |tau_n(c_i)| over sigma_{n+1}(c), and
// column letters agree through the refinement.
inline NestedReport check_nested(const DirectiveSequence& d, int n) {
    NestedReport rep;
    TowerPartition lower = tower_partition(d, n);
    Morphism tau_next = d.prefix_composition(n + 1);
    const Morphism& sig = d.morphism(n + 1);

    for (char c : sig.domain()) {
        const std::string& col = tau_next(c);
        std::size_t expected = 0;
        for (char ci : sig(c)) expected += lower.column.at(ci).size();
        if (expected != col.size()) {
            rep.nested = false;
            rep.problems.push_back(std::string("height sum mismatch for letter '") + c +
                                   "'");
            continue;
        }
        for (int j = 0; j < static_cast<int>(col.size()); ++j) {
            auto it = lower.refinement.find({c, j});
            if (it == lower.refinement.end()) {
                rep.nested = false;
                rep.problems.push_back("missing refinement for atom (" +
                                       std::string(1, c) + ", " + std::to_string(j) + ")");
                continue;
            }
            auto [cprime, jprime] = it->second;
            const std::string& lower_col = lower.column.at(cprime);
            if (jprime < 0 || jprime >= static_cast<int>(lower_col.size()) ||
                lower_col[static_cast<std::size_t>(jprime)] !=
                    col[static_cast<std::size_t>(j)]) {
                rep.nested = false;
                rep.problems.push_back("column letter mismatch at atom (" +
                                       std::string(1, c) + ", " + std::to_string(j) + ")");
            }
        }
    }
    return rep;
}

struct CodingComparison {
    bool equal = true;
    std::size_t compared_len = 0;
    std::vector<std::string> only_in_coding;
    std::vector<std::string> only_in_language;
    std::string coding_word;
};

// Desk-scale conjugacy evidence: factors of the Vershik orbit coding from the
// minimal path versus the directive's factor language, up to length L. The
// coding stops at the maximal path (no wrap-around).
inline CodingComparison coding_vs_language(const DirectiveSequence& d, int depth,
                                           std::size_t steps, std::size_t L) {
    std::vector<Morphism> ms;
    for (int n = 2; n <= depth; ++n) ms.push_back(d.morphism(n));
    BratteliDiagram diag = BratteliDiagram::build_from_morphisms(std::move(ms));

    char top = d.morphism(depth).domain().contains(d.seed(depth))
                   ? d.seed(depth)
                   : diag.vertices(depth).letter(0);
    OrbitCoding coding = orbit_coding(diag, min_path(diag, depth, top), steps);

    FactorLanguage lang = factors(d, L);

    CodingComparison cmp;
    cmp.compared_len = L;
    cmp.coding_word = coding.word;

    std::vector<std::set<std::string>> coding_factors(L);
    detail::collect_factors(coding.word, L, coding_factors);
    for (std::size_t len = 1; len <= L; ++len) {
        for (const auto& w : coding_factors[len - 1])
            if (!lang.of_length(len).count(w)) cmp.only_in_coding.push_back(w);
        for (const auto& w : lang.of_length(len))
            if (!coding_factors[len - 1].count(w)) cmp.only_in_language.push_back(w);
    }
    cmp.equal = cmp.only_in_coding.empty() && cmp.only_in_language.empty();
    return cmp;
}

}  // namespace adica

#endif  // ADICA_ADIC_HPP
