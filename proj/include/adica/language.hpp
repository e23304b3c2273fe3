#ifndef ADICA_LANGUAGE_HPP
#define ADICA_LANGUAGE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "adica/directive.hpp"
#include "adica/error.hpp"
#include "adica/morphism.hpp"

namespace adica {

// Factors of length 1..max_len of the subshift generated by a directive
// prefix, with a stabilization certificate. `sample` keeps the longest
// generated word for period scans and recurrence probes.
struct FactorLanguage {
    std::size_t max_len = 0;
    std::vector<std::set<std::string>> by_len;  // by_len[k-1] = factors of length k
    bool stabilized = false;
    int depth_used = 0;
    std::string sample;

    const std::set<std::string>& of_length(std::size_t k) const {
        if (k == 0 || k > max_len)
            fail("InsufficientLanguage", "no factors of length " + std::to_string(k));
        return by_len[k - 1];
    }

    bool contains(std::string_view w) const {
        if (w.empty() || w.size() > max_len) return false;
        return by_len[w.size() - 1].count(std::string(w)) > 0;
    }

    std::size_t count(std::size_t k) const { return of_length(k).size(); }
};

namespace detail {

inline void collect_factors(std::string_view w, std::size_t max_len,
                            std::vector<std::set<std::string>>& by_len) {
    for (std::size_t len = 1; len <= std::min(max_len, w.size()); ++len)
        for (std::size_t i = 0; i + len <= w.size(); ++i)
            by_len[len - 1].insert(std::string(w.substr(i, len)));
}

}  // namespace detail

// All words of length <= L occurring in sigma_2...sigma_n(a_n), n running up
// the directive prefix. The language is certified stable only once the
// generated words reach length >= 2L and have at least doubled since the last
// level that contributed a new factor; a single quiet level is not enough for
// slowly growing directives, whose next factor can arrive many levels later.
inline FactorLanguage factors(const DirectiveSequence& d, std::size_t L,
                              std::size_t max_word_len = 1u << 22) {
    if (L < 1) fail("InsufficientLanguage", "max length must be >= 1");
    if (d.empty()) fail("ParseError", "empty directive");

    FactorLanguage lang;
    lang.max_len = L;
    lang.by_len.resize(L);

    std::size_t prev_word_len = 0;
    std::size_t longest = 0;          // longest word generated so far
    std::size_t longest_at_change = 0;  // value of `longest` when a factor last arrived

    for (int n = d.first_level(); n <= d.last_level(); ++n) {
        // w_n = sigma_2(sigma_3(...sigma_n(a_n))), innermost first.
        std::string w(1, d.seed(n));
        bool truncated = false;
        for (int k = n; k >= 2; --k) {
            w = d.morphism(k).apply(w);
            if (w.size() > max_word_len) {
                w.resize(max_word_len);
                truncated = true;
            }
        }

        auto before = lang.by_len;
        detail::collect_factors(w, L, lang.by_len);

        lang.depth_used = n;
        if (w.size() > lang.sample.size()) lang.sample = w;
        longest = std::max(longest, w.size());
        if (lang.by_len != before) longest_at_change = longest;

        if (longest > longest_at_change && longest >= 2 * L &&
            longest >= 2 * longest_at_change) {
            lang.stabilized = true;
            return lang;
        }

        if (n == d.last_level() && !truncated && w.size() == prev_word_len &&
            w.size() < 2 * L)
            fail("NonGrowing", "image lengths stopped growing at " +
                                   std::to_string(w.size()) + " before reaching " +
                                   std::to_string(2 * L));
        prev_word_len = w.size();
    }

    lang.stabilized = false;
    return lang;
}

// Word-complexity values p(1..N) and first differences. `certified` is false
// when the language was not stabilized; values are then lower bounds.
struct ComplexityProfile {
    std::vector<long> p;
    std::vector<long> diff;
    bool certified = false;
};

inline ComplexityProfile complexity(const FactorLanguage& lang, std::size_t N) {
    if (N > lang.max_len)
        fail("InsufficientLanguage", "complexity range exceeds the computed language");
    ComplexityProfile prof;
    prof.certified = lang.stabilized;
    for (std::size_t n = 1; n <= N; ++n)
        prof.p.push_back(static_cast<long>(lang.count(n)));
    for (std::size_t n = 0; n + 1 < prof.p.size(); ++n)
        prof.diff.push_back(prof.p[n + 1] - prof.p[n]);
    return prof;
}

// Smallest n0 with p(n0) <= n0, if any; a witness certifies ultimate
// periodicity by Morse-Hedlund.
inline std::optional<std::size_t> morse_hedlund_witness(const ComplexityProfile& prof) {
    for (std::size_t n = 1; n <= prof.p.size(); ++n)
        if (prof.p[n - 1] <= static_cast<long>(n)) return n;
    return std::nullopt;
}

struct RecurrenceGap {
    std::string factor;  // length-m factor
    std::string window;  // length-W factor missing it
};

struct RecurrenceReport {
    bool holds = true;
    std::size_t windows_checked = 0;
    std::vector<RecurrenceGap> gaps;  // first few only
};

// Does every factor of length m occur in every factor of length W?
inline RecurrenceReport recurrence_probe(const DirectiveSequence& d, std::size_t m,
                                         std::size_t W, std::size_t max_gaps = 10) {
    if (m < 1 || W < m) fail("InsufficientLanguage", "need W >= m >= 1");
    FactorLanguage lang = factors(d, W);
    if (lang.of_length(W).empty())
        fail("InsufficientLanguage", "no factors of length " + std::to_string(W));
    RecurrenceReport rep;
    for (const auto& window : lang.of_length(W)) {
        ++rep.windows_checked;
        for (const auto& f : lang.of_length(m)) {
            if (window.find(f) == std::string::npos) {
                rep.holds = false;
                if (rep.gaps.size() < max_gaps) rep.gaps.push_back({f, window});
            }
        }
    }
    return rep;
}

// Shortest period q <= limit such that the sample word is (some word of
// length q) repeated; desk-scale cross-check for Morse-Hedlund witnesses.
inline std::optional<std::size_t> explicit_period(std::string_view w, std::size_t limit) {
    for (std::size_t q = 1; q <= std::min(limit, w.size()); ++q) {
        bool ok = true;
        for (std::size_t i = q; i < w.size() && ok; ++i)
            if (w[i] != w[i - q]) ok = false;
        if (ok) return q;
    }
    return std::nullopt;
}

}  // namespace adica

#endif  // ADICA_LANGUAGE_HPP
