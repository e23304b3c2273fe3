#ifndef ADICA_TESTS_HELPERS_HPP
#define ADICA_TESTS_HELPERS_HPP

#include <map>
#include <random>
#include <set>
#include <string>

#include "adica/directive.hpp"
#include "adica/morphism.hpp"

namespace adica::testing {

inline Morphism fibonacci() {
    Alphabet ab("ab");
    return Morphism(ab, ab, {{'a', "ab"}, {'b', "a"}}, "fib");
}

// The proper substitution obtained as sigma*tau from the Fibonacci morphism.
inline Morphism zeta() {
    Alphabet ab("ab");
    return Morphism(ab, ab, {{'a', "aab"}, {'b', "ab"}}, "zeta");
}

inline Morphism two_point() {
    Alphabet ab("ab");
    return Morphism(ab, ab, {{'a', "ab"}, {'b', "ab"}}, "twopoint");
}

inline Morphism odometer_doubling() {
    Alphabet z("0");
    return Morphism(z, z, {{'0', "00"}}, "double");
}

inline Morphism catalog_d() {
    Alphabet abc("abc");
    return Morphism(abc, abc, {{'a', "ab"}, {'b', "b"}, {'c', "c"}}, "D");
}

inline DirectiveSequence stationary(const Morphism& m, char seed, int count) {
    return DirectiveSequence::stationary(m, seed, count);
}

// Random left-proper morphism: shared first letter, image lengths 1..4.
inline Morphism random_left_proper(std::mt19937& rng, int min_letters = 2,
                                   int max_letters = 4) {
    std::uniform_int_distribution<int> asize(min_letters, max_letters);
    int n = asize(rng);
    Alphabet a(std::string("abcd").substr(0, static_cast<std::size_t>(n)));
    std::uniform_int_distribution<int> pick(0, n - 1);
    char l = a.letter(static_cast<std::size_t>(pick(rng)));
    std::map<char, std::string> images;
    for (char x : a) {
        std::string img(1, l);
        std::uniform_int_distribution<int> extra(0, 3);
        int k = extra(rng);
        for (int i = 0; i < k; ++i)
            img += a.letter(static_cast<std::size_t>(pick(rng)));
        images[x] = img;
    }
    return Morphism(a, a, std::move(images));
}

// Independent brute-force oracle: all factors of w up to max_len.
inline std::set<std::string> factor_set(const std::string& w, std::size_t max_len) {
    std::set<std::string> out;
    for (std::size_t len = 1; len <= max_len && len <= w.size(); ++len)
        for (std::size_t i = 0; i + len <= w.size(); ++i)
            out.insert(w.substr(i, len));
    return out;
}

}  // namespace adica::testing

#endif  // ADICA_TESTS_HELPERS_HPP
