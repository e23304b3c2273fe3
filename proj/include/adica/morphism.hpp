#ifndef ADICA_MORPHISM_HPP
#define ADICA_MORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adica/alphabet.hpp"
#include "adica/error.hpp"

namespace adica {

// A non-erasing morphism between free monoids: each domain letter maps to a
// nonempty word over the codomain. Immutable after construction.
class Morphism {
public:
    Morphism(Alphabet domain, Alphabet codomain, std::map<char, std::string> images,
             std::string name = "")
        : domain_(std::move(domain)),
          codomain_(std::move(codomain)),
          images_(std::move(images)),
          name_(std::move(name)) {
        for (char a : domain_) {
            auto it = images_.find(a);
            if (it == images_.end())
                fail("MissingImage", std::string("no image for letter '") + a + "'");
            if (it->second.empty())
                fail("ErasingImage", std::string("empty image for letter '") + a + "'");
            for (char x : it->second)
                if (!codomain_.contains(x))
                    fail("UnknownLetter", std::string("image symbol '") + x +
                                              "' outside codomain {" +
                                              codomain_.letters() + "}");
        }
        if (images_.size() != domain_.size())
            fail("UnknownLetter", "image rule for a letter outside the domain");
    }

    const Alphabet& domain() const noexcept { return domain_; }
    const Alphabet& codomain() const noexcept { return codomain_; }
    const std::string& name() const noexcept { return name_; }

    const std::string& image(char a) const {
        auto it = images_.find(a);
        if (it == images_.end())
            fail("UnknownLetter", std::string("letter '") + a + "' not in domain {" +
                                      domain_.letters() + "}");
        return it->second;
    }

    const std::string& operator()(char a) const { return image(a); }

    std::string apply(std::string_view w) const {
        std::string out;
        for (char a : w) out += image(a);
        return out;
    }

    std::string operator()(std::string_view w) const { return apply(w); }

    bool is_endomorphism() const noexcept { return domain_ == codomain_; }

    friend bool operator==(const Morphism& f, const Morphism& g) {
        return f.domain_ == g.domain_ && f.codomain_ == g.codomain_ &&
               f.images_ == g.images_;
    }

private:
    Alphabet domain_;
    Alphabet codomain_;
    std::map<char, std::string> images_;
    std::string name_;
};

inline Morphism identity_morphism(const Alphabet& a) {
    std::map<char, std::string> images;
    for (char c : a) images[c] = std::string(1, c);
    return Morphism(a, a, std::move(images), "id");
}

// (outer ∘ inner)(x) = outer(inner(x)); requires inner.codomain == outer.domain.
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (inner.codomain() != outer.domain())
        fail("AlphabetMismatch", "compose: inner codomain {" +
                                     inner.codomain().letters() + "} != outer domain {" +
                                     outer.domain().letters() + "}");
    std::map<char, std::string> images;
    for (char a : inner.domain()) images[a] = outer.apply(inner(a));
    return Morphism(inner.domain(), outer.codomain(), std::move(images));
}

// Occurrence counts: rows indexed by codomain letters, columns by domain
// letters; entry(x, y) = number of occurrences of x in the image of y.
class IncidenceMatrix {
public:
    IncidenceMatrix(Alphabet rows, Alphabet cols)
        : rows_(std::move(rows)),
          cols_(std::move(cols)),
          data_(rows_.size() * cols_.size(), 0) {}

    explicit IncidenceMatrix(const Morphism& m)
        : IncidenceMatrix(m.codomain(), m.domain()) {
        for (char y : m.domain())
            for (char x : m(y)) at(rows_.index(x), cols_.index(y)) += 1;
    }

    const Alphabet& row_alphabet() const noexcept { return rows_; }
    const Alphabet& col_alphabet() const noexcept { return cols_; }

    std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_.size() + c]; }
    std::int64_t at(std::size_t r, std::size_t c) const {
        return data_[r * cols_.size() + c];
    }

    std::int64_t entry(char row_letter, char col_letter) const {
        return at(rows_.index(row_letter), cols_.index(col_letter));
    }

    bool positive() const noexcept {
        for (auto v : data_)
            if (v <= 0) return false;
        return true;
    }

    friend IncidenceMatrix operator*(const IncidenceMatrix& a, const IncidenceMatrix& b) {
        if (a.cols_ != b.rows_)
            fail("AlphabetMismatch", "incidence product: index alphabets differ");
        IncidenceMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_.size(); ++i)
            for (std::size_t k = 0; k < a.cols_.size(); ++k) {
                auto v = a.at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < b.cols_.size(); ++j)
                    out.at(i, j) += v * b.at(k, j);
            }
        return out;
    }

    friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) = default;

private:
    Alphabet rows_;
    Alphabet cols_;
    std::vector<std::int64_t> data_;
};

inline IncidenceMatrix incidence_matrix(const Morphism& m) { return IncidenceMatrix(m); }

// Some power k <= (|A|-1)^2 + 1 of the incidence matrix is entrywise positive.
inline bool is_primitive(const Morphism& m) {
    if (!m.is_endomorphism())
        fail("NotEndomorphism", "primitivity needs domain == codomain");
    IncidenceMatrix base(m);
    IncidenceMatrix power = base;
    std::size_t n = m.domain().size();
    std::size_t bound = (n - 1) * (n - 1) + 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (power.positive()) return true;
        power = power * base;
    }
    return false;
}

enum class Properness { neither, left, right, both };

struct PropernessReport {
    Properness kind = Properness::neither;
    std::optional<char> left_witness;   // shared first letter l
    std::optional<char> right_witness;  // shared last letter r

    bool is_left() const noexcept {
        return kind == Properness::left || kind == Properness::both;
    }
    bool is_right() const noexcept {
        return kind == Properness::right || kind == Properness::both;
    }
};

inline PropernessReport properness(const Morphism& m) {
    bool left = true, right = true;
    char l = m(m.domain().letter(0)).front();
    char r = m(m.domain().letter(0)).back();
    for (char a : m.domain()) {
        const std::string& w = m(a);
        if (w.front() != l) left = false;
        if (w.back() != r) right = false;
    }
    PropernessReport rep;
    if (left && right)
        rep.kind = Properness::both;
    else if (left)
        rep.kind = Properness::left;
    else if (right)
        rep.kind = Properness::right;
    if (left) rep.left_witness = l;
    if (right) rep.right_witness = r;
    return rep;
}

// For left-proper m with m(a) = l·u(a), the conjugate has a ↦ u(a)·l and is
// right proper.
inline Morphism left_conjugate(const Morphism& m) {
    auto rep = properness(m);
    if (!rep.is_left()) fail("NotLeftProper", "left conjugate needs a left-proper morphism");
    char l = *rep.left_witness;
    std::map<char, std::string> images;
    for (char a : m.domain()) images[a] = m(a).substr(1) + l;
    return Morphism(m.domain(), m.codomain(), std::move(images));
}

// For right-proper m with m(a) = u(a)·r, the conjugate has a ↦ r·u(a) and is
// left proper.
inline Morphism right_conjugate(const Morphism& m) {
    auto rep = properness(m);
    if (!rep.is_right())
        fail("NotRightProper", "right conjugate needs a right-proper morphism");
    char r = *rep.right_witness;
    std::map<char, std::string> images;
    for (char a : m.domain())
        images[a] = std::string(1, r) + m(a).substr(0, m(a).size() - 1);
    return Morphism(m.domain(), m.codomain(), std::move(images));
}

struct ConjugacyCounterexample {
    std::string word;
    std::string lhs;  // sigma(w)·l   (resp. r·sigma(w))
    std::string rhs;  // l·tau(w)     (resp. tau(w)·r)
};

struct IteratedCase {
    int n = 0;
    char letter = 0;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

// Checks sigma(w)·l = l·tau(w) over all words |w| <= max_len. The literal
// iterated form sigma^n(a)·l = l·tau^n(a) is re-checked separately for
// endomorphisms and reported for information; it can fail for n >= 2.
struct ConjugacyReport {
    bool single_application_holds = true;
    std::optional<ConjugacyCounterexample> counterexample;
    std::vector<IteratedCase> iterated_cases;  // endomorphisms only
    bool iterated_form_holds = true;
    std::size_t words_checked = 0;
};

namespace detail {
template <typename Fn>
void for_each_word(const Alphabet& a, std::size_t max_len, Fn&& fn) {
    std::vector<std::string> frontier{""};
    fn(std::string{});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        next.reserve(frontier.size() * a.size());
        for (const auto& w : frontier)
            for (char c : a) {
                next.push_back(w + c);
                fn(next.back());
            }
        frontier.swap(next);
    }
}
}  // namespace detail

inline ConjugacyReport verify_conjugacy_identity(const Morphism& m, std::size_t max_len) {
    auto rep = properness(m);
    bool use_left = rep.is_left();
    if (!use_left && !rep.is_right())
        fail("NotLeftProper", "conjugacy identity needs a left- or right-proper morphism");
    char w_letter = use_left ? *rep.left_witness : *rep.right_witness;
    Morphism tau = use_left ? left_conjugate(m) : right_conjugate(m);

    ConjugacyReport out;
    detail::for_each_word(m.domain(), max_len, [&](const std::string& w) {
        ++out.words_checked;
        if (!out.single_application_holds) return;
        std::string lhs = use_left ? m.apply(w) + w_letter
                                   : std::string(1, w_letter) + m.apply(w);
        std::string rhs = use_left ? w_letter + tau.apply(w)
                                   : tau.apply(w) + w_letter;
        if (lhs != rhs) {
            out.single_application_holds = false;
            out.counterexample = ConjugacyCounterexample{w, lhs, rhs};
        }
    });

    if (m.is_endomorphism()) {
        for (char a : m.domain()) {
            std::string sig(1, a), ta(1, a);
            for (std::size_t n = 1; n <= max_len; ++n) {
                sig = m.apply(sig);
                ta = tau.apply(ta);
                IteratedCase c;
                c.n = static_cast<int>(n);
                c.letter = a;
                c.lhs = use_left ? sig + w_letter : std::string(1, w_letter) + sig;
                c.rhs = use_left ? w_letter + ta : ta + w_letter;
                c.holds = (c.lhs == c.rhs);
                if (!c.holds) out.iterated_form_holds = false;
                out.iterated_cases.push_back(std::move(c));
            }
        }
    }
    return out;
}

// For a left- or right-proper primitive endomorphism sigma with conjugate tau,
// returns (sigma∘tau, tau∘sigma); both are proper and primitive.
inline std::pair<Morphism, Morphism> proper_products(const Morphism& m) {
    auto rep = properness(m);
    if (rep.kind == Properness::neither)
        fail("NotProperEnough", "proper products need a left- or right-proper morphism");
    if (!m.is_endomorphism())
        fail("NotEndomorphism", "proper products need an endomorphism");
    if (!is_primitive(m)) fail("NotPrimitive", "proper products need a primitive morphism");
    Morphism tau = rep.is_left() ? left_conjugate(m) : right_conjugate(m);
    Morphism st = compose(m, tau);
    Morphism ts = compose(tau, m);
    if (properness(st).kind != Properness::both ||
        properness(ts).kind != Properness::both)
        fail("NotProperEnough", "conjugate products failed to come out proper");
    if (!is_primitive(st) || !is_primitive(ts))
        fail("NotPrimitive", "conjugate products failed to come out primitive");
    return {std::move(st), std::move(ts)};
}

}  // namespace adica

#endif  // ADICA_MORPHISM_HPP
