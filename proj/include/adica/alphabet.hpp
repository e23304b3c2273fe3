#ifndef ADICA_ALPHABET_HPP
#define ADICA_ALPHABET_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "adica/error.hpp"

namespace adica {

// An ordered finite set of single-character letters. The order is fixed at
// construction and used everywhere a canonical enumeration is needed
// (incidence matrix indexing, DOT output, vertex listings).
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::string_view letters) : letters_(letters) {
        if (letters_.empty())
            fail("EmptyAlphabet", "an alphabet needs at least one letter");
        for (std::size_t i = 0; i < letters_.size(); ++i)
            for (std::size_t j = i + 1; j < letters_.size(); ++j)
                if (letters_[i] == letters_[j])
                    fail("DuplicateLetter",
                         std::string("duplicate letter '") + letters_[i] + "'");
    }

    std::size_t size() const noexcept { return letters_.size(); }
    char letter(std::size_t i) const { return letters_.at(i); }
    const std::string& letters() const noexcept { return letters_; }

    bool contains(char c) const noexcept {
        return letters_.find(c) != std::string::npos;
    }

    std::size_t index(char c) const {
        auto pos = letters_.find(c);
        if (pos == std::string::npos)
            fail("UnknownLetter", std::string("letter '") + c + "' not in alphabet {" +
                                      letters_ + "}");
        return pos;
    }

    bool contains_word(std::string_view w) const noexcept {
        for (char c : w)
            if (!contains(c)) return false;
        return true;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) = default;

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

private:
    std::string letters_;
};

}  // namespace adica

#endif  // ADICA_ALPHABET_HPP
