#ifndef ADICA_MORPHISM_IO_HPP
#define ADICA_MORPHISM_IO_HPP

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "adica/error.hpp"
#include "adica/morphism.hpp"

namespace adica {

// .mor format: optional `alphabet: <letters>` header declaring the codomain,
// then one rule per line `<letter> -> <word>`. `#` starts a comment, blank
// lines are ignored. Letters are single ASCII alphanumerics.

namespace detail {

inline std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline bool is_letter_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace detail

inline Morphism parse_morphism(std::string_view text, const std::string& name = "") {
    std::optional<std::string> declared;
    std::string domain_letters;
    std::map<char, std::string> images;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = detail::strip(raw);
        if (line.empty()) continue;

        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };

        if (line.rfind("alphabet:", 0) == 0) {
            if (declared) fail("ParseError", "duplicate alphabet header" + where());
            std::string letters = detail::strip(line.substr(9));
            for (char c : letters)
                if (!detail::is_letter_char(c))
                    fail("ParseError", std::string("bad alphabet letter '") + c + "'" + where());
            if (letters.empty()) fail("ParseError", "empty alphabet header" + where());
            declared = letters;
            continue;
        }

        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            fail("ParseError", "expected '<letter> -> <word>'" + where());
        std::string lhs = detail::strip(line.substr(0, arrow));
        std::string rhs = detail::strip(line.substr(arrow + 2));
        if (lhs.size() != 1 || !detail::is_letter_char(lhs[0]))
            fail("ParseError", "left-hand side must be a single letter" + where());
        if (rhs.empty())
            fail("ErasingImage", std::string("empty image for letter '") + lhs[0] + "'" + where());
        for (char c : rhs)
            if (!detail::is_letter_char(c))
                fail("ParseError", std::string("bad image symbol '") + c + "'" + where());
        if (images.count(lhs[0]))
            fail("ParseError", std::string("duplicate rule for letter '") + lhs[0] + "'" + where());
        domain_letters += lhs[0];
        images[lhs[0]] = rhs;
    }

    if (domain_letters.empty()) fail("ParseError", "no rules found");

    std::string codomain_letters;
    if (declared) {
        codomain_letters = *declared;
        // Rules for exactly the declared letters define an endomorphism; use
        // the declared order for the domain so both alphabets compare equal.
        bool same_set = domain_letters.size() == codomain_letters.size();
        for (char a : domain_letters)
            if (codomain_letters.find(a) == std::string::npos) same_set = false;
        if (same_set) domain_letters = codomain_letters;
        for (const auto& [a, w] : images)
            for (char c : w)
                if (codomain_letters.find(c) == std::string::npos)
                    fail("UnknownLetter", std::string("image symbol '") + c +
                                              "' outside declared alphabet {" +
                                              codomain_letters + "}");
    } else {
        // Inferred codomain: domain letters in rule order, then any extra
        // image letters in order of first appearance.
        codomain_letters = domain_letters;
        for (char a : domain_letters)
            for (char c : images[a])
                if (codomain_letters.find(c) == std::string::npos) codomain_letters += c;
    }

    return Morphism(Alphabet(domain_letters), Alphabet(codomain_letters),
                    std::move(images), name);
}

inline std::string to_mor_text(const Morphism& m) {
    std::string out = "alphabet: " + m.codomain().letters() + "\n";
    for (char a : m.domain()) {
        out += a;
        out += " -> ";
        out += m(a);
        out += "\n";
    }
    return out;
}

}  // namespace adica

#endif  // ADICA_MORPHISM_IO_HPP
