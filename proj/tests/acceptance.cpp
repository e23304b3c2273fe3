// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every check here is backed by an independent oracle (brute-force
// enumeration, exact catalog constants, or closed-form arithmetic).

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adica/adic.hpp"
#include "adica/bratteli.hpp"
#include "adica/language.hpp"
#include "adica/morphism.hpp"
#include "adica/s5.hpp"
#include "helpers.hpp"

using namespace adica;
using adica::testing::fibonacci;
using adica::testing::odometer_doubling;
using adica::testing::random_left_proper;
using adica::testing::stationary;
using adica::testing::two_point;
using adica::testing::zeta;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    if (!ok) ++failures;
}

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(name, ok, ok ? "" : detail);
}

DirectiveSequence repeat_block(const std::vector<std::string>& block, int reps) {
    std::vector<DirectiveSequence::Entry> es;
    for (int r = 0; r < reps; ++r)
        for (const auto& name : block) es.push_back({s5(name), 'a'});
    return DirectiveSequence(std::move(es));
}

}  // namespace

int main() {
    criterion("1 catalog fidelity", [](std::string& why) {
        struct Row {
            const char* name;
            const char* a;
            const char* b;
            const char* c;
        };
        const Row table[] = {{"D", "ab", "b", "c"},
                             {"G", "ba", "b", "c"},
                             {"E_ab", "b", "a", "c"},
                             {"E_bc", "a", "c", "b"},
                             {"M", "a", "b", "b"}};
        for (const Row& r : table) {
            Morphism m = s5(r.name);
            if (m("a") != r.a || m("b") != r.b || m("c") != r.c) {
                why = std::string(r.name) + " does not match";
                return false;
            }
        }
        return true;
    });

    criterion("2 conjugacy identity", [](std::string& why) {
        std::mt19937 rng(20240817);
        for (int i = 0; i < 100; ++i) {
            Morphism m = random_left_proper(rng, 2, 4);
            auto rep = verify_conjugacy_identity(m, 8);
            if (!rep.single_application_holds) {
                why = "single-application form failed on a random morphism";
                return false;
            }
        }
        auto fib = verify_conjugacy_identity(fibonacci(), 3);
        if (fib.iterated_form_holds) {
            why = "the literal iterated form unexpectedly held for Fibonacci";
            return false;
        }
        for (const auto& c : fib.iterated_cases)
            if (c.n == 2 && c.letter == 'a' && !c.holds && c.lhs == "abaa" &&
                c.rhs == "aaba")
                return true;
        why = "missing the n = 2 counterexample abaa vs aaba";
        return false;
    });

    criterion("3 proper products", [](std::string& why) {
        auto [st, ts] = proper_products(fibonacci());
        if (st("a") != "aab" || st("b") != "ab") {
            why = "sigma*tau is not {a->aab, b->ab}";
            return false;
        }
        if (ts("a") != "baa" || ts("b") != "ba") {
            why = "tau*sigma is not {a->baa, b->ba}";
            return false;
        }
        bool ok = properness(st).kind == Properness::both &&
                  properness(ts).kind == Properness::both && is_primitive(st) &&
                  is_primitive(ts);
        if (!ok) why = "a product is not proper or not primitive";
        return ok;
    });

    criterion("4 sturmian complexity", [](std::string& why) {
        auto lang = factors(stationary(fibonacci(), 'a', 40), 31);
        if (!lang.stabilized) {
            why = "language not stabilized";
            return false;
        }
        for (std::size_t n = 1; n <= 30; ++n)
            if (lang.count(n) != n + 1) {
                why = "p(" + std::to_string(n) + ") = " + std::to_string(lang.count(n));
                return false;
            }
        return true;
    });

    criterion("5 morse-hedlund gate", [](std::string& why) {
        auto tp = stationary(two_point(), 'a', 16);
        auto prof = complexity(factors(tp, 12), 12);
        auto w = morse_hedlund_witness(prof);
        if (!w || *w != 2) {
            why = "two-point witness is not n0 = 2";
            return false;
        }
        bool rejected = false;
        try {
            build_bv(tp, 4, BuildMode::strict_proper);
        } catch (const Error& e) {
            rejected = std::string(e.what()).find("PeriodicLanguage") !=
                           std::string::npos ||
                       e.kind() == "PeriodicLanguage";
        }
        if (!rejected) {
            why = "build accepted the two-point directive or lost the periodicity "
                  "verdict";
            return false;
        }
        auto fib = complexity(factors(stationary(fibonacci(), 'a', 40), 31), 31);
        if (morse_hedlund_witness(fib)) {
            why = "Fibonacci produced a spurious periodicity witness";
            return false;
        }
        return true;
    });

    criterion("6 odometer oracle", [](std::string& why) {
        auto diag = BratteliDiagram::build_from_morphisms(
            std::vector<Morphism>(16, odometer_doubling()));
        const int bits = 16;
        Path p = min_path(diag, diag.depth());
        for (unsigned long value = 0; value < (1ul << bits); ++value) {
            for (int i = 0; i < bits; ++i)
                if (p.fibers[static_cast<std::size_t>(i)] !=
                    static_cast<int>((value >> i) & 1ul)) {
                    why = "path at step " + std::to_string(value) +
                          " is not its little-endian binary form";
                    return false;
                }
            if (value + 1 < (1ul << bits)) p = vershik_successor(diag, p);
        }
        if (!(p == max_path(diag, diag.depth()))) {
            why = "enumeration did not end at the maximal path";
            return false;
        }
        try {
            vershik_successor(diag, p);
            why = "successor of the maximal path did not fail";
            return false;
        } catch (const Error& e) {
            if (e.kind() != "MaximalPath") {
                why = "wrong error kind at the maximal path";
                return false;
            }
        }
        return true;
    });

    criterion("7 round trips", [](std::string& why) {
        std::mt19937 rng(71);
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<int> asize(1, 3), len(1, 3), depth(2, 6);
            int k = asize(rng);
            Alphabet a(std::string("abc").substr(0, static_cast<std::size_t>(k)));
            std::uniform_int_distribution<int> pick(0, k - 1);
            std::map<char, std::string> images;
            for (char x : a) {
                std::string img;
                int l = len(rng);
                for (int i = 0; i < l; ++i)
                    img += a.letter(static_cast<std::size_t>(pick(rng)));
                images[x] = img;
            }
            Morphism base(a, a, std::move(images));
            int levels = depth(rng) - 1;
            std::vector<Morphism> ms(static_cast<std::size_t>(levels), base);
            auto diag = BratteliDiagram::build_from_morphisms(ms);
            for (int n = 2; n <= diag.depth(); ++n)
                if (!(diag.read_morphism(n) == ms[static_cast<std::size_t>(n - 2)])) {
                    why = "read_morphism disagreed with the input";
                    return false;
                }
            if (diag.depth() >= 4) {
                auto tel = diag.telescope({3, diag.depth()});
                Morphism first = compose(diag.read_morphism(2), diag.read_morphism(3));
                Morphism second = diag.read_morphism(4);
                for (int j = 5; j <= diag.depth(); ++j)
                    second = compose(second, diag.read_morphism(j));
                if (!(tel.read_morphism(2) == first) ||
                    !(tel.read_morphism(3) == second)) {
                    why = "telescoped morphisms are not the block compositions";
                    return false;
                }
            }
        }
        return true;
    });

    criterion("8 tower arithmetic", [](std::string& why) {
        auto d = stationary(zeta(), 'a', 10);
        const std::size_t expect[][2] = {{3, 2}, {8, 5}, {21, 13}};
        for (int n = 2; n <= 4; ++n) {
            auto t = tower_partition(d, n);
            if (t.height('a') != expect[n - 2][0] || t.height('b') != expect[n - 2][1]) {
                why = "heights at level " + std::to_string(n) + " are (" +
                      std::to_string(t.height('a')) + ", " +
                      std::to_string(t.height('b')) + ")";
                return false;
            }
        }
        for (int n = 1; n <= 6; ++n) {
            auto lower = tower_partition(d, n);
            Morphism tau_next = d.prefix_composition(n + 1);
            for (char c : tau_next.domain()) {
                std::size_t sum = 0;
                for (char ci : d.morphism(n + 1)(c)) sum += lower.height(ci);
                if (tau_next(c).size() != sum) {
                    why = "height recursion failed at level " + std::to_string(n);
                    return false;
                }
            }
            if (!check_nested(d, n).nested) {
                why = "nestedness failed at level " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion("9 coding vs language", [](std::string& why) {
        auto cmp = coding_vs_language(stationary(zeta(), 'a', 20), 8, 1u << 20, 10);
        if (!cmp.equal) {
            why = "factor sets differ (" + std::to_string(cmp.only_in_coding.size()) +
                  " coding-only, " + std::to_string(cmp.only_in_language.size()) +
                  " language-only)";
            return false;
        }
        return true;
    });

    criterion("10 rank bounds", [](std::string& why) {
        auto d = repeat_block({"D", "E_bc", "D", "E_ab", "G", "M"}, 25);
        auto marks = search_marks(d, 8);
        if (!marks.found) {
            why = "no marking found";
            return false;
        }
        auto vd = validate_directive(d, marks.marks);
        auto [diag, rep] = build_rank3_bv(vd, 6);
        if (rep.max_vertices != 3) {
            why = "rank-3 build reported max |V_n| = " +
                  std::to_string(rep.max_vertices);
            return false;
        }
        for (int n = 2; n <= diag.depth(); ++n)
            if (diag.vertices(n).size() != 3) {
                why = "level " + std::to_string(n) + " does not have 3 vertices";
                return false;
            }
        auto [zdiag, zrep] = build_bv(stationary(zeta(), 'a', 20), 6,
                                      BuildMode::strict_proper);
        if (zrep.max_vertices > 2) {
            why = "two-letter build exceeded its alphabet bound";
            return false;
        }
        auto [fdiag, frep] = build_bv(stationary(fibonacci(), 'a', 20), 6,
                                      BuildMode::alternating);
        if (frep.max_vertices > 2) {
            why = "alternating build exceeded its alphabet bound";
            return false;
        }
        return true;
    });

    criterion("11 complexity harness", [](std::string& why) {
        const std::vector<std::vector<std::string>> blocks = {
            {"D", "E_bc", "D", "E_ab", "G", "M"},
            {"D", "E_bc", "G", "E_ab", "D", "M"},
            {"G", "E_bc", "D", "E_ab", "G", "M"}};
        for (const auto& block : blocks) {
            auto d = repeat_block(block, 8);
            auto marks = search_marks(d, 8);
            if (!marks.found) {
                why = "no marking found for a block directive";
                return false;
            }
            validate_directive(d, marks.marks);
            auto rep = complexity_harness(d, 20);
            if (!rep.bounded_by_two || !rep.n_min) {
                why = "differences not bounded by 2";
                return false;
            }
            for (std::size_t n = *rep.n_min; n <= rep.diff.size(); ++n)
                if (rep.diff[n - 1] > 2) {
                    why = "difference above 2 at n = " + std::to_string(n);
                    return false;
                }
        }
        return true;
    });

    if (failures == 0) std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
