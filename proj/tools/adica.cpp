// adica: morphism calculus, S-adic factor languages, and Bratteli-Vershik
// constructions from directive sequences.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adica/adic.hpp"
#include "adica/bratteli.hpp"
#include "adica/directive.hpp"
#include "adica/language.hpp"
#include "adica/morphism.hpp"
#include "adica/morphism_io.hpp"
#include "adica/s5.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) adica::fail("ParseError", "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) adica::fail("ParseError", "cannot write file: " + path);
    out << text;
}

adica::DirectiveSequence load_directive(const std::string& path) {
    fs::path base = fs::path(path).parent_path();
    auto loader = [base](const std::string& rel) {
        fs::path p = fs::path(rel).is_absolute() ? fs::path(rel) : base / rel;
        return read_file(p.string());
    };
    return adica::parse_directive(read_file(path), loader, adica::s5_resolver());
}

int classify(const adica::Error& e) {
    static const char* parse_kinds[] = {"ParseError",  "ErasingImage", "UnknownLetter",
                                        "UnknownName", "DuplicateLetter",
                                        "EmptyAlphabet", "MissingImage"};
    for (const char* k : parse_kinds)
        if (e.kind() == k) return 2;
    return 1;
}

const char* properness_name(adica::Properness p) {
    switch (p) {
        case adica::Properness::left: return "left";
        case adica::Properness::right: return "right";
        case adica::Properness::both: return "both";
        default: return "neither";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-adic subshifts, morphism calculus and Bratteli-Vershik diagrams"};
    app.require_subcommand(1);

    // ---- morphism ----
    auto* morph = app.add_subcommand("morphism", "operations on a single .mor file");
    morph->require_subcommand(1);
    std::string mor_file, word, side = "left";
    std::size_t max_len = 6;
    bool as_json = false;

    auto* m_apply = morph->add_subcommand("apply", "apply the morphism to a word");
    m_apply->add_option("--file", mor_file, ".mor file")->required();
    m_apply->add_option("--word", word, "input word")->required();

    auto* m_info = morph->add_subcommand("info", "properness, primitivity, incidence");
    m_info->add_option("--file", mor_file, ".mor file")->required();
    m_info->add_flag("--json", as_json, "machine-readable output");

    auto* m_conj = morph->add_subcommand("conjugate", "print the conjugate morphism");
    m_conj->add_option("--file", mor_file, ".mor file")->required();
    m_conj->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));

    auto* m_verify = morph->add_subcommand("verify", "check the conjugacy identity");
    m_verify->add_option("--file", mor_file, ".mor file")->required();
    m_verify->add_option("--max-len", max_len, "word length bound");

    // ---- lang ----
    auto* lang_cmd = app.add_subcommand("lang", "factor language and word complexity");
    std::string dir_file;
    std::size_t lang_max_len = 10;
    std::optional<std::size_t> complexity_n;
    lang_cmd->add_option("--directive", dir_file, ".dir file")->required();
    lang_cmd->add_option("--max-len", lang_max_len, "factor length bound");
    lang_cmd->add_option("--complexity", complexity_n, "complexity profile up to N");
    lang_cmd->add_flag("--json", as_json, "machine-readable output");

    // ---- bv ----
    auto* bv = app.add_subcommand("bv", "raw Bratteli diagram operations");
    bv->require_subcommand(1);
    int depth = 4;
    std::size_t steps = 32;
    std::string dot_path;
    bool check_simple = false, check_extrema = false;

    auto* bv_build = bv->add_subcommand("build", "build the diagram and export DOT");
    bv_build->add_option("--directive", dir_file, ".dir file")->required();
    bv_build->add_option("--depth", depth, "diagram depth");
    bv_build->add_option("--dot", dot_path, "DOT output path");

    auto* bv_orbit = bv->add_subcommand("orbit", "Vershik orbit coding from the minimal path");
    bv_orbit->add_option("--directive", dir_file, ".dir file")->required();
    bv_orbit->add_option("--depth", depth, "diagram depth");
    bv_orbit->add_option("--steps", steps, "number of iterates");

    auto* bv_check = bv->add_subcommand("check", "simplicity and extrema checks");
    bv_check->add_option("--directive", dir_file, ".dir file")->required();
    bv_check->add_option("--depth", depth, "diagram depth");
    bv_check->add_flag("--simple", check_simple, "check simplicity");
    bv_check->add_flag("--extrema", check_extrema, "check unique extrema");

    // ---- build ----
    auto* build_cmd = app.add_subcommand("build", "hypothesis-checked BV construction");
    std::string mode = "strict";
    bool emit_report = false;
    std::size_t match_len = 10;
    build_cmd->add_option("--directive", dir_file, ".dir file")->required();
    build_cmd->add_option("--depth", depth, "diagram depth");
    build_cmd->add_option("--mode", mode, "strict or alt")->check(CLI::IsMember({"strict", "alt"}));
    build_cmd->add_option("--dot", dot_path, "DOT output path");
    build_cmd->add_flag("--report", emit_report, "emit a JSON report");
    build_cmd->add_option("--match-len", match_len, "coding/language comparison length");

    // ---- s5 ----
    auto* s5_cmd = app.add_subcommand("s5", "the five-morphism set of the rank-3 construction");
    s5_cmd->require_subcommand(1);
    std::size_t search_window = 0, max_n = 20;

    auto* s5_validate = s5_cmd->add_subcommand("validate", "check the marked block conditions");
    s5_validate->add_option("file", dir_file, ".dir file")->required();
    s5_validate->add_option("--search-marks", search_window, "search for marks up to this window");

    auto* s5_harness = s5_cmd->add_subcommand("harness", "complexity-difference harness");
    s5_harness->add_option("file", dir_file, ".dir file")->required();
    s5_harness->add_option("--max-n", max_n, "complexity range");

    auto* s5_build = s5_cmd->add_subcommand("build", "rank-3 BV construction");
    s5_build->add_option("file", dir_file, ".dir file")->required();
    s5_build->add_option("--depth", depth, "diagram depth");
    s5_build->add_option("--dot", dot_path, "DOT output path");

    // ---- demo ----
    auto* demo = app.add_subcommand("demo", "seeded random conjugacy-identity demo");
    unsigned seed = 1;
    std::size_t count = 100;
    demo->add_option("--seed", seed, "RNG seed");
    demo->add_option("--count", count, "number of random morphisms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (m_apply->parsed()) {
            auto m = adica::parse_morphism(read_file(mor_file));
            std::cout << m.apply(word) << "\n";
        } else if (m_info->parsed()) {
            auto m = adica::parse_morphism(read_file(mor_file));
            auto prop = adica::properness(m);
            bool prim = m.is_endomorphism() && adica::is_primitive(m);
            if (as_json) {
                json j{{"schema", 1},
                       {"domain", m.domain().letters()},
                       {"codomain", m.codomain().letters()},
                       {"properness", properness_name(prop.kind)},
                       {"endomorphism", m.is_endomorphism()},
                       {"primitive", prim}};
                if (prop.left_witness) j["left_witness"] = std::string(1, *prop.left_witness);
                if (prop.right_witness) j["right_witness"] = std::string(1, *prop.right_witness);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "domain: " << m.domain().letters() << "\n"
                          << "codomain: " << m.codomain().letters() << "\n"
                          << "properness: " << properness_name(prop.kind);
                if (prop.left_witness) std::cout << " l=" << *prop.left_witness;
                if (prop.right_witness) std::cout << " r=" << *prop.right_witness;
                std::cout << "\nprimitive: " << (prim ? "yes" : "no") << "\n";
            }
        } else if (m_conj->parsed()) {
            auto m = adica::parse_morphism(read_file(mor_file));
            auto c = side == "left" ? adica::left_conjugate(m) : adica::right_conjugate(m);
            std::cout << adica::to_mor_text(c);
        } else if (m_verify->parsed()) {
            auto m = adica::parse_morphism(read_file(mor_file));
            auto rep = adica::verify_conjugacy_identity(m, max_len);
            std::cout << "single-application identity: "
                      << (rep.single_application_holds ? "holds" : "FAILS") << " ("
                      << rep.words_checked << " words)\n";
            if (rep.counterexample)
                std::cout << "  counterexample w=" << rep.counterexample->word << "\n";
            std::cout << "literal iterated form: "
                      << (rep.iterated_form_holds ? "holds" : "fails") << "\n";
            for (const auto& c : rep.iterated_cases)
                if (!c.holds)
                    std::cout << "  n=" << c.n << " a=" << c.letter << ": " << c.lhs
                              << " != " << c.rhs << "\n";
        } else if (lang_cmd->parsed()) {
            auto d = load_directive(dir_file);
            auto lang = adica::factors(d, lang_max_len);
            std::size_t N = complexity_n.value_or(lang_max_len);
            auto prof = adica::complexity(lang, N);
            if (as_json) {
                json j{{"schema", 1},
                       {"p", prof.p},
                       {"diff", prof.diff},
                       {"stabilized", lang.stabilized}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "stabilized: " << (lang.stabilized ? "yes" : "no")
                          << " (depth " << lang.depth_used << ")\np:";
                for (auto v : prof.p) std::cout << " " << v;
                std::cout << "\ndiff:";
                for (auto v : prof.diff) std::cout << " " << v;
                std::cout << "\n";
                if (auto w = adica::morse_hedlund_witness(prof))
                    std::cout << "morse-hedlund witness: n0=" << *w << "\n";
            }
        } else if (bv_build->parsed()) {
            auto d = load_directive(dir_file);
            std::vector<adica::Morphism> ms;
            for (int n = 2; n <= std::min(depth, d.last_level()); ++n)
                ms.push_back(d.morphism(n));
            auto diag = adica::BratteliDiagram::build_from_morphisms(std::move(ms));
            std::string dot = adica::export_dot(diag);
            if (dot_path.empty())
                std::cout << dot;
            else
                write_file(dot_path, dot);
        } else if (bv_orbit->parsed()) {
            auto d = load_directive(dir_file);
            std::vector<adica::Morphism> ms;
            for (int n = 2; n <= std::min(depth, d.last_level()); ++n)
                ms.push_back(d.morphism(n));
            auto diag = adica::BratteliDiagram::build_from_morphisms(std::move(ms));
            auto coding = adica::orbit_coding(diag, adica::min_path(diag, diag.depth()), steps);
            std::cout << coding.word << "\n";
            if (!coding.complete)
                std::cout << "(stopped at the maximal path after " << coding.word.size()
                          << " letters)\n";
        } else if (bv_check->parsed()) {
            auto d = load_directive(dir_file);
            std::vector<adica::Morphism> ms;
            for (int n = 2; n <= std::min(depth, d.last_level()); ++n)
                ms.push_back(d.morphism(n));
            auto diag = adica::BratteliDiagram::build_from_morphisms(std::move(ms));
            if (check_simple)
                std::cout << "simple: " << (diag.is_simple(diag.depth()) ? "yes" : "no")
                          << "\n";
            if (check_extrema) {
                auto rep = adica::unique_extrema_check(diag, diag.depth());
                std::cout << "unique minimal path: " << (rep.unique_min ? "yes" : "no")
                          << "\nunique maximal path: " << (rep.unique_max ? "yes" : "no")
                          << "\n";
            }
        } else if (build_cmd->parsed()) {
            auto d = load_directive(dir_file);
            int dpt = std::min(depth, d.last_level());
            auto mode_v = mode == "strict" ? adica::BuildMode::strict_proper
                                           : adica::BuildMode::alternating;
            auto [diag, report] = adica::build_bv(d, dpt, mode_v);
            std::size_t mlen = std::min<std::size_t>(match_len, 12);
            auto cmp = adica::coding_vs_language(d, dpt, 1u << 20, mlen);
            if (!dot_path.empty()) write_file(dot_path, adica::export_dot(diag));
            if (emit_report) {
                json j{{"schema", 1},
                       {"rank_bound", report.max_vertices},
                       {"injectivity_scale", report.injectivity_scale},
                       {"periodic", false},
                       {"coding_match_len", cmp.equal ? static_cast<int>(mlen) : 0}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "built depth-" << dpt << " diagram, max |V_n| = "
                          << report.max_vertices << "\n"
                          << "injectivity checked at scale " << report.injectivity_scale
                          << "\ncoding/language factors up to " << mlen << ": "
                          << (cmp.equal ? "equal" : "DIFFER") << "\n";
            }
        } else if (s5_validate->parsed()) {
            auto d = load_directive(dir_file);
            std::vector<int> marks = d.marks();
            if (marks.empty() && search_window > 0) {
                auto res = adica::search_marks(d, search_window);
                if (!res.found) {
                    std::cout << "no valid marking found up to window "
                              << search_window << "\n";
                    return 1;
                }
                marks = res.marks;
                std::cout << "marks:";
                for (int m : marks) std::cout << " " << m;
                std::cout << "\n";
            }
            auto vd = adica::validate_directive(d, marks);
            std::cout << "validated " << vd.blocks.size() << " block(s)\n";
        } else if (s5_harness->parsed()) {
            auto d = load_directive(dir_file);
            auto rep = adica::complexity_harness(d, max_n);
            std::cout << "p:";
            for (auto v : rep.p) std::cout << " " << v;
            std::cout << "\ndiff:";
            for (auto v : rep.diff) std::cout << " " << v;
            std::cout << "\nbounded by 2: " << (rep.bounded_by_two ? "yes" : "no");
            if (rep.n_min) std::cout << " from n_min=" << *rep.n_min;
            std::cout << "\n";
            if (rep.morse_hedlund)
                std::cout << "morse-hedlund witness: n0=" << *rep.morse_hedlund << "\n";
        } else if (s5_build->parsed()) {
            auto d = load_directive(dir_file);
            std::vector<int> marks = d.marks();
            if (marks.empty()) {
                auto res = adica::search_marks(d);
                if (!res.found) adica::fail("ParseError", "no marks given and none found");
                marks = res.marks;
            }
            auto vd = adica::validate_directive(d, marks);
            auto [diag, report] = adica::build_rank3_bv(vd, depth);
            if (!dot_path.empty()) write_file(dot_path, adica::export_dot(diag));
            std::cout << "built depth-" << diag.depth() << " diagram, max |V_n| = "
                      << report.max_vertices << "\n";
        } else if (demo->parsed()) {
            std::mt19937 rng(seed);
            std::cout << "seed: " << seed << "\n";
            std::size_t ok = 0;
            for (std::size_t i = 0; i < count; ++i) {
                std::uniform_int_distribution<int> asize(2, 4);
                int n = asize(rng);
                adica::Alphabet a(std::string("abcd").substr(0, static_cast<std::size_t>(n)));
                char l = a.letter(static_cast<std::size_t>(
                    std::uniform_int_distribution<int>(0, n - 1)(rng)));
                std::map<char, std::string> images;
                for (char x : a) {
                    std::string img(1, l);
                    int extra = std::uniform_int_distribution<int>(0, 3)(rng);
                    for (int k = 0; k < extra; ++k)
                        img += a.letter(static_cast<std::size_t>(
                            std::uniform_int_distribution<int>(0, n - 1)(rng)));
                    images[x] = img;
                }
                adica::Morphism m(a, a, std::move(images));
                if (adica::verify_conjugacy_identity(m, 4).single_application_holds) ++ok;
            }
            std::cout << ok << "/" << count << " random left-proper morphisms satisfy "
                      << "sigma(w)l = l tau(w)\n";
        }
    } catch (const adica::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
    return 0;
}
