#ifndef ADICA_DIRECTIVE_HPP
#define ADICA_DIRECTIVE_HPP

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adica/error.hpp"
#include "adica/morphism.hpp"
#include "adica/morphism_io.hpp"

namespace adica {

// The data (sigma_n, a_n)_{n>=2} driving an S-adic construction, with an
// optional marked subsequence (n_i). Entry k holds level n = 2 + k.
class DirectiveSequence {
public:
    struct Entry {
        Morphism morphism;
        char seed;
    };

    DirectiveSequence() = default;

    DirectiveSequence(std::vector<Entry> entries, std::vector<int> marks = {})
        : entries_(std::move(entries)), marks_(std::move(marks)) {
        validate();
    }

    static DirectiveSequence stationary(const Morphism& m, char seed, int count) {
        if (!m.is_endomorphism())
            fail("AlphabetMismatch", "a stationary directive needs an endomorphism");
        std::vector<Entry> es(static_cast<std::size_t>(count), Entry{m, seed});
        return DirectiveSequence(std::move(es));
    }

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    int first_level() const noexcept { return 2; }
    int last_level() const noexcept { return 1 + static_cast<int>(entries_.size()); }

    const Entry& at_level(int n) const {
        if (n < 2 || n > last_level())
            fail("LevelOutOfRange", "no directive entry at level " + std::to_string(n));
        return entries_[static_cast<std::size_t>(n - 2)];
    }

    const Morphism& morphism(int n) const { return at_level(n).morphism; }
    char seed(int n) const { return at_level(n).seed; }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const std::vector<int>& marks() const noexcept { return marks_; }

    void set_marks(std::vector<int> marks) {
        marks_ = std::move(marks);
        validate_marks();
    }

    // The directive (sigma_k, a_k)_{k>=n}, re-based to start at level 2.
    DirectiveSequence suffix_from(int n) const {
        if (n < 2 || n > last_level())
            fail("LevelOutOfRange", "suffix start " + std::to_string(n) + " out of range");
        std::vector<Entry> es(entries_.begin() + (n - 2), entries_.end());
        return DirectiveSequence(std::move(es));
    }

    // sigma_2 ∘ ... ∘ sigma_n; the identity on A_1 for n = 1.
    Morphism prefix_composition(int n) const {
        if (n < 1 || n > last_level())
            fail("LevelOutOfRange", "prefix end " + std::to_string(n) + " out of range");
        if (n == 1) return identity_morphism(entries_.front().morphism.codomain());
        Morphism acc = entries_.front().morphism;
        for (int k = 3; k <= n; ++k) acc = compose(acc, morphism(k));
        return acc;
    }

    // sigma_from ∘ ... ∘ sigma_to (inclusive block composition).
    Morphism block_composition(int from, int to) const {
        if (from < 2 || to > last_level() || from > to)
            fail("LevelOutOfRange", "bad block [" + std::to_string(from) + ", " +
                                        std::to_string(to) + "]");
        Morphism acc = morphism(from);
        for (int k = from + 1; k <= to; ++k) acc = compose(acc, morphism(k));
        return acc;
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (!e.morphism.domain().contains(e.seed))
                fail("UnknownLetter", std::string("seed '") + e.seed +
                                          "' not in the level-" + std::to_string(i + 2) +
                                          " alphabet");
            if (i + 1 < entries_.size() &&
                entries_[i + 1].morphism.codomain() != e.morphism.domain())
                fail("AlphabetMismatch",
                     "alphabets do not chain between levels " + std::to_string(i + 2) +
                         " and " + std::to_string(i + 3));
        }
        validate_marks();
    }

    void validate_marks() const {
        int prev = 0;
        for (int m : marks_) {
            if (m <= prev) fail("ParseError", "marks must be strictly increasing");
            if (m < 2 || m > last_level())
                fail("LevelOutOfRange", "mark " + std::to_string(m) + " out of range");
            prev = m;
        }
    }

    std::vector<Entry> entries_;
    std::vector<int> marks_;
};

// Resolves a morphism name that is not bound by a `use` line (catalog names,
// for instance). Returns nullopt when the name is unknown.
using MorphismResolver = std::function<std::optional<Morphism>(const std::string&)>;

// Loads the contents of a path named in a `use` line.
using FileLoader = std::function<std::string(const std::string&)>;

// .dir format:
//   use <name> = <path.mor>
//   <n>: <name> seed=<letter>      (n starting at 2, consecutive)
//   mark <n>
// `#` starts a comment; blank lines ignored.
inline DirectiveSequence parse_directive(std::string_view text, const FileLoader& load,
                                         const MorphismResolver& resolve = {}) {
    std::map<std::string, Morphism> bound;
    std::vector<DirectiveSequence::Entry> entries;
    std::vector<int> marks;
    int expected = 2;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = detail::strip(raw);
        if (line.empty()) continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };

        if (line.rfind("use ", 0) == 0) {
            auto eq = line.find('=');
            if (eq == std::string::npos) fail("ParseError", "expected 'use <name> = <path>'" + where());
            std::string name = detail::strip(line.substr(4, eq - 4));
            std::string path = detail::strip(line.substr(eq + 1));
            if (name.empty() || path.empty())
                fail("ParseError", "expected 'use <name> = <path>'" + where());
            if (!load) fail("ParseError", "'use' lines not supported here" + where());
            bound.insert_or_assign(name, parse_morphism(load(path), name));
            continue;
        }

        if (line.rfind("mark ", 0) == 0) {
            int n = 0;
            try {
                n = std::stoi(line.substr(5));
            } catch (...) {
                fail("ParseError", "expected 'mark <n>'" + where());
            }
            marks.push_back(n);
            continue;
        }

        auto colon = line.find(':');
        if (colon == std::string::npos)
            fail("ParseError", "expected '<n>: <name> seed=<letter>'" + where());
        int n = 0;
        try {
            n = std::stoi(line.substr(0, colon));
        } catch (...) {
            fail("ParseError", "bad level number" + where());
        }
        if (n != expected)
            fail("ParseError", "levels must be consecutive from 2; expected " +
                                   std::to_string(expected) + where());
        std::string rest = detail::strip(line.substr(colon + 1));
        auto seedpos = rest.find("seed=");
        if (seedpos == std::string::npos)
            fail("ParseError", "missing 'seed=<letter>'" + where());
        std::string name = detail::strip(rest.substr(0, seedpos));
        std::string seedstr = detail::strip(rest.substr(seedpos + 5));
        if (name.empty() || seedstr.size() != 1)
            fail("ParseError", "expected '<n>: <name> seed=<letter>'" + where());

        std::optional<Morphism> m;
        if (auto it = bound.find(name); it != bound.end()) m = it->second;
        if (!m && resolve) m = resolve(name);
        if (!m) fail("ParseError", "unknown morphism name '" + name + "'" + where());

        entries.push_back({std::move(*m), seedstr[0]});
        ++expected;
    }

    if (entries.empty()) fail("ParseError", "directive has no entries");
    return DirectiveSequence(std::move(entries), std::move(marks));
}

}  // namespace adica

#endif  // ADICA_DIRECTIVE_HPP
