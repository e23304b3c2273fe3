#include <catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adica/bratteli.hpp"
#include "adica/language.hpp"
#include "helpers.hpp"

using namespace adica;
using adica::testing::factor_set;
using adica::testing::fibonacci;
using adica::testing::odometer_doubling;
using adica::testing::stationary;
using adica::testing::catalog_d;
using adica::testing::zeta;

namespace {

bool fails_with(const std::string& kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

BratteliDiagram stationary_diagram(const Morphism& m, int levels) {
    return BratteliDiagram::build_from_morphisms(
        std::vector<Morphism>(static_cast<std::size_t>(levels), m));
}

// Random endomorphism on <= 3 letters with image lengths 1..3.
Morphism random_endomorphism(std::mt19937& rng) {
    std::uniform_int_distribution<int> asize(1, 3);
    int n = asize(rng);
    Alphabet a(std::string("abc").substr(0, static_cast<std::size_t>(n)));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> len(1, 3);
    std::map<char, std::string> images;
    for (char x : a) {
        std::string img;
        int l = len(rng);
        for (int i = 0; i < l; ++i)
            img += a.letter(static_cast<std::size_t>(pick(rng)));
        images[x] = img;
    }
    return Morphism(a, a, std::move(images));
}

}  // namespace

TEST_CASE("build_from_morphisms and read_morphism round trip") {
    auto diag = stationary_diagram(fibonacci(), 1);
    CHECK(diag.depth() == 2);
    CHECK(diag.vertices(2).letters() == "ab");
    CHECK(diag.read_morphism(2) == fibonacci());
    CHECK(diag.read_morphism(2)("a") == "ab");  // vertex a: 2 ordered edges, to a then b
    CHECK(diag.read_morphism(2)("b") == "a");

    CHECK(fails_with("EmptyInput", [] { BratteliDiagram::build_from_morphisms({}); }));

    auto odo = stationary_diagram(odometer_doubling(), 3);
    for (int level = 2; level <= odo.depth(); ++level)
        CHECK(odo.read_morphism(level)("0") == "00");
}

TEST_CASE("level-1 convention") {
    auto diag = stationary_diagram(fibonacci(), 2);
    Morphism s1 = diag.level1_morphism();
    for (char v : diag.v1())
        CHECK(s1(v) == std::string(1, BratteliDiagram::root_vertex));
    CHECK(fails_with("LevelOutOfRange", [&] { diag.read_morphism(1); }));
    CHECK(fails_with("LevelOutOfRange", [&] { diag.read_morphism(diag.depth() + 1); }));
}

TEST_CASE("round trips over random diagrams") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Morphism> ms;
        Morphism base = random_endomorphism(rng);
        int levels = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < levels; ++i) ms.push_back(base);
        auto diag = BratteliDiagram::build_from_morphisms(ms);
        for (int n = 2; n <= diag.depth(); ++n)
            CHECK(diag.read_morphism(n) == ms[static_cast<std::size_t>(n - 2)]);
    }
}

TEST_CASE("telescoping composes the intervening morphisms") {
    auto fib4 = stationary_diagram(fibonacci(), 4);  // depth 5
    auto paired = fib4.telescope({3, 5});
    Morphism sq = compose(fibonacci(), fibonacci());
    CHECK(paired.read_morphism(2) == sq);
    CHECK(paired.read_morphism(3) == sq);
    CHECK(sq("a") == "aba");
    CHECK(sq("b") == "ab");

    auto all = fib4.telescope({2, 3, 4, 5});
    for (int n = 2; n <= 5; ++n) CHECK(all.read_morphism(n) == fibonacci());

    auto odo = stationary_diagram(odometer_doubling(), 4).telescope({3, 5});
    CHECK(odo.read_morphism(2)("0") == "0000");

    CHECK(fails_with("InvalidCuts", [&] { fib4.telescope({3, 2, 5}); }));
    CHECK(fails_with("InvalidCuts", [&] { fib4.telescope({2, 3}); }));
}

TEST_CASE("telescoping law on random diagrams") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        Morphism base = random_endomorphism(rng);
        auto diag = stationary_diagram(base, 5);  // depth 6
        std::vector<int> cuts{static_cast<int>(2 + rng() % 2), 4, 6};
        auto tel = diag.telescope(cuts);
        int prev = 1;
        for (std::size_t k = 0; k < cuts.size(); ++k) {
            Morphism expect = diag.read_morphism(prev + 1);
            for (int j = prev + 2; j <= cuts[k]; ++j)
                expect = compose(expect, diag.read_morphism(j));
            CHECK(tel.read_morphism(static_cast<int>(k) + 2) == expect);
            prev = cuts[k];
        }
    }
}

TEST_CASE("simplicity") {
    CHECK(stationary_diagram(fibonacci(), 3).is_simple(4));
    CHECK_FALSE(stationary_diagram(catalog_d(), 3).is_simple(4));
    CHECK(stationary_diagram(odometer_doubling(), 3).is_simple(4));
}

TEST_CASE("extrema: unique for proper, multiple chains for Fibonacci") {
    auto odo = stationary_diagram(odometer_doubling(), 3);
    auto odo_rep = unique_extrema_check(odo, 4);
    CHECK(odo_rep.unique_min);
    CHECK(odo_rep.unique_max);
    CHECK(min_path(odo, 4).fibers == std::vector<int>{0, 0, 0});
    CHECK(max_path(odo, 4).fibers == std::vector<int>{1, 1, 1});

    auto z = stationary_diagram(zeta(), 7);  // depth 8
    for (int depth = 2; depth <= 8; ++depth) {
        auto rep = unique_extrema_check(z, depth);
        CHECK(rep.unique_min);
        CHECK(rep.unique_max);
    }

    auto fib = stationary_diagram(fibonacci(), 4);
    auto rep = unique_extrema_check(fib, 5);
    CHECK(rep.unique_min);       // both images start with a
    CHECK_FALSE(rep.unique_max); // images end with b and a
}

TEST_CASE("odometer successor is little-endian binary increment") {
    auto odo = stationary_diagram(odometer_doubling(), 8);  // 8 binary levels
    int bits = 8;
    Path p = min_path(odo, odo.depth());
    for (unsigned value = 0; value + 1 < (1u << bits); ++value) {
        for (int i = 0; i < bits; ++i)
            CHECK(p.fibers[static_cast<std::size_t>(i)] ==
                  static_cast<int>((value >> i) & 1u));
        p = vershik_successor(odo, p);
    }
    CHECK(p == max_path(odo, odo.depth()));
    CHECK(fails_with("MaximalPath", [&] { vershik_successor(odo, p); }));

    // Worked example: (1, 0, 1) -> (0, 1, 1), i.e. 5 -> 6 little-endian.
    auto small = stationary_diagram(odometer_doubling(), 3);
    Path five{small.depth(), '0', {1, 0, 1}};
    CHECK(vershik_successor(small, five).fibers == std::vector<int>{0, 1, 1});

    // Wrap-around is opt-in.
    Path m = max_path(small, small.depth());
    CHECK(vershik_successor(small, m, true) == min_path(small, small.depth()));
}

TEST_CASE("successor enumerates all fixed-top paths exactly once, in order") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        Morphism base = random_endomorphism(rng);
        int levels = 2 + static_cast<int>(rng() % 3);  // depth <= 5
        auto diag = stationary_diagram(base, levels);
        int depth = diag.depth();
        for (char top : diag.vertices(depth)) {
            // Expected count: paths from the top vertex = |sigma_2...sigma_depth(top)|.
            Morphism tau = diag.read_morphism(2);
            for (int n = 3; n <= depth; ++n) tau = compose(tau, diag.read_morphism(n));
            std::size_t expected = tau(top).size();

            std::set<std::vector<int>> seen;
            Path p = min_path(diag, depth, top);
            seen.insert(p.fibers);
            while (true) {
                try {
                    p = vershik_successor(diag, p);
                } catch (const Error& e) {
                    REQUIRE(e.kind() == "MaximalPath");
                    break;
                }
                CHECK(seen.insert(p.fibers).second);  // never revisited
            }
            CHECK(p == max_path(diag, depth, top));
            CHECK(seen.size() == expected);
        }
    }
}

TEST_CASE("orbit coding reproduces the tower column word") {
    auto z = stationary_diagram(zeta(), 5);  // depth 6
    Morphism tau = zeta();
    for (int i = 0; i < 4; ++i) tau = compose(tau, zeta());  // zeta^5
    auto coding = orbit_coding(z, min_path(z, z.depth(), 'a'), tau("a").size());
    CHECK(coding.complete);
    CHECK(coding.word == tau("a"));
    CHECK(coding.word.substr(0, 8) == "aabaabab");
}

TEST_CASE("orbit coding: constants and truncation") {
    auto odo = stationary_diagram(odometer_doubling(), 3);
    auto coding = orbit_coding(odo, min_path(odo, odo.depth()), 8);
    CHECK(coding.word == "00000000");

    auto truncated = orbit_coding(odo, min_path(odo, odo.depth()), 100);
    CHECK_FALSE(truncated.complete);
    CHECK(truncated.word.size() == 8);  // 2^3 paths
}

TEST_CASE("coding factors match the language for stationary proper diagrams") {
    auto z = stationary_diagram(zeta(), 7);  // depth 8
    Morphism tau = zeta();
    for (int i = 0; i < 6; ++i) tau = compose(tau, zeta());
    auto coding = orbit_coding(z, min_path(z, z.depth(), 'a'), tau("a").size());
    REQUIRE(coding.complete);

    auto lang = factors(stationary(zeta(), 'a', 20), 15);
    REQUIRE(lang.stabilized);
    auto coded = factor_set(coding.word, 15);
    for (std::size_t len = 1; len <= 15; ++len) {
        std::set<std::string> c;
        for (const auto& w : coded)
            if (w.size() == len) c.insert(w);
        CHECK(c == lang.of_length(len));
    }
}

TEST_CASE("DOT export is deterministic and structurally right") {
    auto odo = stationary_diagram(odometer_doubling(), 2);
    std::string dot = export_dot(odo);
    CHECK(dot == export_dot(odo));
    CHECK(dot.find("digraph bratteli") != std::string::npos);
    CHECK(dot.find("L1_0 -> L0 [label=\"0\"]") != std::string::npos);
    CHECK(dot.find("L2_0 -> L1_0 [label=\"0\"]") != std::string::npos);
    CHECK(dot.find("L2_0 -> L1_0 [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("L3_0 -> L2_0 [label=\"1\"]") != std::string::npos);

    // zeta at depth 2: |zeta(a)| + |zeta(b)| = 5 labeled edges at level 2.
    auto z = stationary_diagram(zeta(), 1);
    std::string zdot = export_dot(z);
    std::size_t count = 0, pos = 0;
    while ((pos = zdot.find("  L2_", pos)) != std::string::npos) {
        auto eol = zdot.find('\n', pos);
        if (zdot.substr(pos, eol - pos).find("->") != std::string::npos) ++count;
        pos = eol;
    }
    CHECK(count == 5);
}
