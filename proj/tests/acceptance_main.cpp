// Acceptance suite: runs every headline identity of the engine over the
// bundled corpus and a seeded fuzz population, printing one line per
// criterion. All arithmetic is exact; every tolerance is equality.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "toriclink/fuzz.hpp"
#include "toriclink/io.hpp"

using namespace toriclink;
using Clock = std::chrono::steady_clock;

namespace {

const char* kCorpus = TORICLINK_CORPUS_DIR;
constexpr std::uint64_t kSeed = 20260810;
constexpr int kFuzz4Cones = 200;

int g_failures = 0;

void criterion(int number, const std::string& text, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << text;
    if (!pass && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<ParsedInput> load_corpus() {
    std::vector<ParsedInput> out;
    for (const char* name :
         {"simplex_cone", "cube_cone", "square_pyramid_cone", "prism_cone", "octahedron_cone", "cp1",
          "cp2", "cp3", "cp1xcp1", "hirzebruch1", "octahedron_normal_fan"})
        out.push_back(parse_fan_file(std::string(kCorpus) + "/" + name + ".json"));
    return out;
}

bool check_named(const LinkReport& rep, const std::set<std::string>& names, std::string& why) {
    for (const Check& c : rep.checks) {
        if (!names.count(c.name)) continue;
        if (!c.pass) {
            why = rep.name + ": " + c.name + " expected " + c.expected + " got " + c.actual;
            return false;
        }
    }
    return true;
}

std::vector<IntVec> interior_ray_choices(const Cone& c, std::size_t want) {
    std::vector<IntVec> out{default_interior_ray(c)};
    IntVec sum(c.ambient_rank(), Int(0));
    for (const IntVec& r : c.rays()) sum = add(sum, r);
    for (std::size_t i = 0; i < c.rays().size() && out.size() < want; ++i) {
        IntVec cand = primitive(add(sum, c.rays()[i]));
        if (!c.contains_in_interior(cand)) continue;
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
    return out;
}

}  // namespace

int main() {
    const auto corpus = load_corpus();

    FuzzRng rng4(kSeed);
    std::vector<Cone> fuzz4;
    for (int i = 0; i < kFuzz4Cones; ++i) fuzz4.push_back(random_link_cone(rng4, 4));

    // 1. d o d = 0 exactly for every complex built from corpus + fuzz
    // (the builders throw on any violation).
    {
        auto t0 = Clock::now();
        bool ok = true;
        std::string why;
        try {
            for (const ParsedInput& in : corpus) {
                if (in.is_cone()) {
                    build_link_complex(*in.cone);
                    ProjectionResult pr = project_boundary_fan(*in.cone, default_interior_ray(*in.cone));
                    if (pr.base_fan) build_variety_complex(*pr.base_fan);
                } else {
                    build_variety_complex(*in.fan);
                }
            }
            for (const Cone& c : fuzz4) build_link_complex(c);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        double dt = seconds_since(t0);
        std::ostringstream text;
        text << "chain-complex soundness, d o d == 0 on corpus + " << kFuzz4Cones << " fuzzed 4-cones ("
             << dt << " s)";
        criterion(1, text.str(), ok && dt < 300.0, why);
    }

    // 2. smooth-variety oracle
    {
        bool ok = true;
        std::string why;
        for (const char* name : {"cp1", "cp2", "cp3", "cp1xcp1", "hirzebruch1"}) {
            ParsedInput in = parse_fan_file(std::string(kCorpus) + "/" + name + ".json");
            BettiTable got = betti(build_variety_complex(*in.fan));
            BettiTable want = h_vector_oracle(*in.fan);
            if (!(got == want)) {
                ok = false;
                why = std::string(name) + " disagrees with the h-vector oracle";
            }
        }
        criterion(2, "smooth-variety Betti tables match the h-vector oracle exactly", ok, why);
    }

    // 3. middle-stratum links: fuzzed 2-cones are rational homology 3-spheres
    {
        FuzzRng rng(kSeed + 1);
        bool ok = true;
        std::string why;
        for (int i = 0; i < 60 && ok; ++i) {
            Cone c = random_link_cone(rng, 2);
            BettiTable t = betti(build_link_complex(c));
            if (t.b != std::vector<long long>{1, 0, 0, 1}) {
                ok = false;
                why = "2-cone #" + std::to_string(i);
            }
        }
        criterion(3, "fuzzed 2-cone links have Betti (1,0,0,1) exactly", ok, why);
    }

    // 4. bottom-stratum 5-dim links: k-gon cones, k = 3..12, plus fuzz
    {
        bool ok = true;
        std::string why;
        for (int k = 3; k <= 12 && ok; ++k) {
            BettiTable t = betti(build_link_complex(polygon_cone(k)));
            if (t.b != std::vector<long long>{1, 0, k - 3, k - 3, 0, 1}) {
                ok = false;
                why = "k = " + std::to_string(k);
            }
        }
        FuzzRng rng(kSeed + 2);
        for (int i = 0; i < 40 && ok; ++i) {
            Cone c = random_link_cone(rng, 3);
            long long k = static_cast<long long>(c.rays().size());
            BettiTable t = betti(build_link_complex(c));
            if (t.b != std::vector<long long>{1, 0, k - 3, k - 3, 0, 1}) {
                ok = false;
                why = "fuzz 3-cone #" + std::to_string(i);
            }
        }
        criterion(4, "3-cone links have Betti (1,0,k-3,k-3,0,1) for k = 3..12 exactly", ok, why);
    }

    // 5. 7-dim link structure on all fuzzed 4-cones (b4 without a
    // correction term is the machine check that the paper-level b1
    // parameter vanishes).
    std::vector<LinkReport> fuzz_reports;
    {
        bool ok = true;
        std::string why;
        auto t0 = Clock::now();
        double slowest = 0.0;
        for (const Cone& c : fuzz4) {
            auto tc = Clock::now();
            fuzz_reports.push_back(verify_paper_formulas(c, "fuzz-" + std::to_string(fuzz_reports.size())));
            slowest = std::max(slowest, seconds_since(tc));
        }
        for (const LinkReport& rep : fuzz_reports) {
            if (!check_named(rep,
                             {"link_b7", "link_b6", "link_b5", "link_b4", "link_b1", "link_b0",
                              "link_euler"},
                             why)) {
                ok = false;
                break;
            }
        }
        std::ostringstream text;
        text << "b7=1, b6=0, b5=f1-4, b4=3f1-f2-6, b1=0, b0=1, chi=0 on " << kFuzz4Cones
             << " fuzzed 4-cones (" << seconds_since(t0) << " s total, slowest " << slowest << " s)";
        criterion(5, text.str(), ok && slowest < 120.0, why);
    }

    // 6. b2 triangulation: both Betti extractions, the projection-route b,
    // and the Euler-class kernel rank agree on every input that projects.
    {
        bool ok = true;
        std::string why;
        int projected = 0;
        auto check_b2 = [&](const LinkReport& rep) {
            if (!check_named(rep, {"b2_routes_agree", "b2_nonnegative"}, why)) return false;
            if (!rep.projection_ok) {
                why = rep.name + ": projection did not validate";
                return false;
            }
            ++projected;
            if (!check_named(rep, {"projection_b_equals_b2", "euler_class_kernel_nonnegative"}, why))
                return false;
            if (!rep.has_b2 || !rep.has_b_projection || rep.b2 != rep.b_projection) {
                why = rep.name + ": b != b2";
                return false;
            }
            return true;
        };
        for (const ParsedInput& in : corpus) {
            if (!in.is_cone()) continue;
            LinkReport rep = verify_paper_formulas(*in.cone, in.name);
            if (!check_b2(rep)) ok = false;
        }
        for (const LinkReport& rep : fuzz_reports)
            if (ok && !check_b2(rep)) ok = false;
        std::ostringstream text;
        text << "b2 triangulation (two link extractions, projection b, Euler-class kernel) on "
             << projected << " projected inputs";
        criterion(6, text.str(), ok, why);
    }

    // 7. ray-choice invariance: 20 cones x 3 distinct interior rays
    {
        bool ok = true;
        std::string why;
        std::vector<Cone> cones;
        for (const ParsedInput& in : corpus)
            if (in.is_cone()) cones.push_back(*in.cone);
        FuzzRng rng(kSeed + 3);
        while (cones.size() < 20) cones.push_back(random_link_cone(rng, 4));
        for (std::size_t i = 0; i < cones.size() && ok; ++i) {
            auto rays = interior_ray_choices(cones[i], 3);
            if (rays.size() < 3) {
                ok = false;
                why = "cone " + std::to_string(i) + ": fewer than 3 interior rays found";
                break;
            }
            BettiTable link = betti(build_link_complex(cones[i]));
            std::set<long long> bs;
            for (const IntVec& tau : rays) {
                ProjectionResult pr = project_boundary_fan(cones[i], tau);
                if (!pr.ok()) {
                    ok = false;
                    why = "cone " + std::to_string(i) + ": projection failed for a ray choice";
                    break;
                }
                bs.insert(euler_class_kernel_rank(link, betti(build_variety_complex(*pr.base_fan))));
            }
            if (ok && bs.size() != 1) {
                ok = false;
                why = "cone " + std::to_string(i) + ": b depends on the interior ray";
            }
        }
        criterion(7, "20 cones x 3 interior rays: projected fan validates and b is ray-independent", ok,
                  why);
    }

    // 8. simplex cone: rational homology 7-sphere, b2 = 0, m = 0
    {
        ParsedInput in = parse_fan_file(std::string(kCorpus) + "/simplex_cone.json");
        LinkReport rep = verify_paper_formulas(*in.cone, in.name);
        bool ok = rep.link_betti.b == std::vector<long long>{1, 0, 0, 0, 0, 0, 0, 1} && rep.has_b2 &&
                  rep.b2 == 0 && rep.m == 0 && rep.all_pass();
        criterion(8, "simplex cone: link is a rational homology 7-sphere with b2 = 0, m = 0", ok);
    }

    // 9. intersection-space table and facet census identities
    {
        bool ok = true;
        std::string why;
        auto check_is = [&](const LinkReport& rep) {
            if (!check_named(rep, {"facet_census_edges", "facet_census_excess"}, why)) return false;
            if (rep.m >= 1 &&
                !check_named(rep,
                             {"intersection_space_b0", "intersection_space_b7",
                              "intersection_space_palindrome"},
                             why))
                return false;
            return true;
        };
        for (const ParsedInput& in : corpus) {
            if (!in.is_cone()) continue;
            LinkReport rep = verify_paper_formulas(*in.cone, in.name);
            if (!check_is(rep)) ok = false;
        }
        for (const LinkReport& rep : fuzz_reports)
            if (ok && !check_is(rep)) ok = false;
        criterion(9, "intersection-space palindrome (m >= 1) and facet census identities on all inputs",
                  ok, why);
    }

    // 10. performance envelope, exact arithmetic throughout
    {
        ParsedInput in = parse_fan_file(std::string(kCorpus) + "/cube_cone.json");
        auto t0 = Clock::now();
        LinkReport rep = verify_paper_formulas(*in.cone, in.name);
        double dt = seconds_since(t0);
        std::ostringstream text;
        text << "cube-cone verify in " << dt << " s (< 10 s), fuzz cones under 2 min each; "
             << "all arithmetic exact rational";
        criterion(10, text.str(), rep.all_pass() && dt < 10.0);
    }

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
