// tv4q command-line tool: exact TV_{4,q} computation, oracles, homology,
// lens-space generation, Pachner moves, and census grouping.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tv4q/homology.hpp"
#include "tv4q/tv4.hpp"
#include "tv4q/tvr.hpp"

using json = nlohmann::ordered_json;
using namespace tv4q;

namespace {

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

json dyadic_to_json(const DyadicSqrt2& d) {
    json j;
    j["a"] = big_to_json(d.a());
    j["b"] = big_to_json(d.b());
    j["k"] = d.k();
    j["decimal"] = d.to_double();
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Triangulation load(const std::string& path, bool require_closed = true) {
    Triangulation t = parse_triangulation(read_file(path));
    if (require_closed) {
        ClosedCheck c = check_closed_manifold(t);
        if (!c.ok) throw std::runtime_error(path + ": not a closed 3-manifold: " + c.reason);
    }
    return t;
}

std::string h1_string(const IntegralH1& h) {
    std::string s;
    for (int i = 0; i < h.free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
    for (const BigInt& d : h.torsion) s += (s.empty() ? "Z/" : " + Z/") + d.str();
    return s.empty() ? "0" : s;
}

json report_to_json(const TVReport& rep) {
    json j;
    j["q"] = rep.q;
    j["z"] = rep.z_negative ? "-sqrt2" : "+sqrt2";
    j["n"] = rep.n;
    j["v"] = rep.v;
    j["e"] = rep.e;
    j["beta1_z2"] = rep.beta1;
    j["classes"] = rep.class_count;
    if (rep.multi_vertex_warning) j["multi_vertex_warning"] = true;
    j["raw"] = dyadic_to_json(rep.raw);
    j["normalized"] = dyadic_to_json(rep.normalized);
    j["triple"] = {{"trivial", dyadic_to_json(rep.triple[0])},
                   {"nontrivial_chi_even", dyadic_to_json(rep.triple[1])},
                   {"chi_odd", dyadic_to_json(rep.triple[2])}};
    json poly = json::object();
    for (const auto& [m, c] : rep.poly.coefficients()) poly[std::to_string(m)] = big_to_json(c);
    j["laurent"] = poly;
    json bp = json::object(), bm = json::object();
    for (const auto& [m, c] : rep.b_plus) bp[std::to_string(m)] = big_to_json(c);
    for (const auto& [m, c] : rep.b_minus) bm[std::to_string(m)] = big_to_json(c);
    j["b_plus"] = bp;
    j["b_minus"] = bm;
    return j;
}

// Shared per-file loop; returns the process exit code.
template <typename Fn>
int for_each_file(const std::vector<std::string>& files, bool as_json, Fn&& fn) {
    int rc = 0;
    json out = json::array();
    for (const std::string& path : files) {
        json rec;
        rec["file"] = path;
        try {
            fn(path, rec);
        } catch (const std::exception& ex) {
            rec["error"] = ex.what();
            rc = 1;
            if (!as_json) std::cerr << path << ": error: " << ex.what() << "\n";
        }
        out.push_back(std::move(rec));
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return rc;
}

int cmd_compute(const std::vector<std::string>& files, int q, bool as_json, bool oracle,
                int jobs, std::uint64_t budget) {
    return for_each_file(files, as_json, [&](const std::string& path, json& rec) {
        Triangulation t = load(path);
        auto t0 = std::chrono::steady_clock::now();
        TVReport rep = tv4_compute(t, q, jobs);
        auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        rec.update(report_to_json(rep));
        rec["wall_ms"] = ms;
        if (oracle) {
            BruteResult br = tv4_bruteforce_exact(t, q, budget);
            std::complex<double> c = tv_r_bruteforce(t, 4, q, budget);
            bool exact_ok = br.raw == rep.raw;
            bool complex_ok = std::abs(c - std::complex<double>(
                                               rep.normalized.to_double(), 0.0)) < 1e-9;
            rec["oracle"] = {{"exact_match", exact_ok}, {"complex_match", complex_ok}};
            if (!exact_ok || !complex_ok) throw std::runtime_error("oracle mismatch");
        }
        if (!as_json) {
            std::cout << path << ": TV_{4," << q << "} = " << rep.normalized.to_string()
                      << " = " << rep.normalized.to_double() << " (raw "
                      << rep.raw.to_string() << ", n=" << rep.n << ", v=" << rep.v
                      << ", beta1=" << rep.beta1 << ", classes=" << rep.class_count
                      << ")\n";
            if (rep.multi_vertex_warning)
                std::cerr << path << ": warning: " << rep.v
                          << " vertices; enumerating all 2^" << rep.beta1 + rep.v - 1
                          << " parity classes\n";
        }
    });
}

int cmd_triple(const std::vector<std::string>& files, int q, bool as_json, int jobs) {
    return for_each_file(files, as_json, [&](const std::string& path, json& rec) {
        TVReport rep = tv4_compute(load(path), q, jobs);
        rec["q"] = q;
        rec["triple"] = {{"trivial", dyadic_to_json(rep.triple[0])},
                         {"nontrivial_chi_even", dyadic_to_json(rep.triple[1])},
                         {"chi_odd", dyadic_to_json(rep.triple[2])}};
        if (!as_json)
            std::cout << path << ": (" << rep.triple[0].to_string() << ", "
                      << rep.triple[1].to_string() << ", " << rep.triple[2].to_string()
                      << ")\n";
    });
}

int cmd_poly(const std::vector<std::string>& files, bool as_json, int jobs) {
    return for_each_file(files, as_json, [&](const std::string& path, json& rec) {
        TVReport rep = tv4_compute(load(path), 1, jobs);
        json poly = json::object();
        for (const auto& [m, c] : rep.poly.coefficients())
            poly[std::to_string(m)] = big_to_json(c);
        rec["laurent"] = poly;
        rec["at_minus_sqrt2"] = dyadic_to_json(rep.poly.evaluate_sqrt2(true));
        rec["at_plus_sqrt2"] = dyadic_to_json(rep.poly.evaluate_sqrt2(false));
        if (!as_json) {
            std::cout << path << ": P_T(z) =";
            for (const auto& [m, c] : rep.poly.coefficients())
                std::cout << " " << (c >= 0 ? "+" : "") << c.str() << "*z^" << m;
            std::cout << "\n";
        }
    });
}

int cmd_oracle(const std::vector<std::string>& files, int r, int q, bool as_json,
               std::uint64_t budget) {
    return for_each_file(files, as_json, [&](const std::string& path, json& rec) {
        Triangulation t = load(path);
        rec["r"] = r;
        rec["q"] = q;
        std::complex<double> c = tv_r_bruteforce(t, r, q, budget);
        rec["complex"] = {{"re", c.real()}, {"im", c.imag()}};
        if (r == 4) {
            BruteResult br = tv4_bruteforce_exact(t, q, budget);
            rec["exact_raw"] = dyadic_to_json(br.raw);
            rec["colourings"] = big_to_json(br.colourings);
        }
        if (!as_json)
            std::cout << path << ": TV_{" << r << "," << q << "} ~ " << c.real()
                      << (c.imag() >= 0 ? "+" : "") << c.imag() << "i\n";
    });
}

int cmd_homology(const std::vector<std::string>& files, bool as_json) {
    return for_each_file(files, as_json, [&](const std::string& path, json& rec) {
        Triangulation t = load(path);
        auto [b0, b1] = betti_z2(t);
        IntegralH1 h = integral_h1(t);
        rec["v"] = t.vertex_count();
        rec["e"] = t.edge_count();
        rec["beta0"] = b0;
        rec["beta1_z2"] = b1;
        rec["h1"] = h1_string(h);
        json tor = json::array();
        for (const BigInt& d : h.torsion) tor.push_back(big_to_json(d));
        rec["h1_torsion"] = tor;
        rec["h1_free_rank"] = h.free_rank;
        if (!as_json)
            std::cout << path << ": beta0=" << b0 << " beta1(Z2)=" << b1
                      << " H1 = " << h1_string(h) << "\n";
    });
}

int cmd_gen(long p, long q, const std::string& outPath) {
    Triangulation t = generate_lens_space(p, q);
    std::string text = "# lens space L(" + std::to_string(p) + "," + std::to_string(q) +
                       "), layered solid torus construction\n" + to_tri(t);
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        if (!out) throw std::runtime_error(outPath + ": cannot write");
        out << text;
        std::cerr << "wrote " << outPath << " (" << t.tet_count() << " tetrahedra)\n";
    }
    return 0;
}

int cmd_move(const std::string& file, int count, unsigned seed, const std::string& outPath) {
    Triangulation t = load(file);
    std::mt19937 rng(seed);
    for (int i = 0; i < count; ++i) {
        std::vector<int> movable;
        for (int tc = 0; tc < t.triangle_count(); ++tc) {
            const auto& em = t.triangle_embeddings(tc);
            if (em.size() == 2 && em[0].first != em[1].first) movable.push_back(tc);
        }
        if (movable.empty()) throw std::runtime_error(file + ": no movable triangle");
        std::uniform_int_distribution<std::size_t> d(0, movable.size() - 1);
        t = pachner_23(t, movable[d(rng)]);
    }
    std::string text = to_tri(t);
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        if (!out) throw std::runtime_error(outPath + ": cannot write");
        out << text;
    }
    return 0;
}

int cmd_census_group(const std::string& dir, bool as_json, bool refine_tv, int jobs) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".tri")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::map<std::string, std::vector<std::string>> coarse, refined;
    int skipped = 0;
    for (const std::string& path : files) {
        try {
            Triangulation t = load(path);
            std::string hkey = h1_string(integral_h1(t));
            coarse[hkey].push_back(path);
            std::string key = hkey;
            if (refine_tv) {
                for (int q : {1, 3}) {
                    TVReport rep = tv4_compute(t, q, jobs);
                    for (int nu = 0; nu < 3; ++nu)
                        key += "|" + rep.triple[static_cast<std::size_t>(nu)].to_string();
                }
            }
            refined[key].push_back(path);
        } catch (const std::exception& ex) {
            std::cerr << path << ": skipped: " << ex.what() << "\n";
            ++skipped;
        }
    }
    if (as_json) {
        json j;
        j["files"] = files.size();
        j["skipped"] = skipped;
        j["homology_groups"] = coarse.size();
        j["refined_groups"] = refined.size();
        j["refinement_factor"] =
            coarse.empty() ? 0.0
                           : static_cast<double>(refined.size()) / static_cast<double>(coarse.size());
        json groups = json::array();
        for (const auto& [key, members] : refined)
            groups.push_back({{"key", key}, {"count", members.size()}, {"members", members}});
        j["groups"] = groups;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << files.size() << " files (" << skipped << " skipped): "
                  << coarse.size() << " integral-homology groups";
        if (refine_tv)
            std::cout << " -> " << refined.size() << " groups after TV_{4,q} refinement";
        std::cout << "\n";
        for (const auto& [key, members] : refined) {
            std::cout << "  [" << key << "]";
            for (const auto& m : members) std::cout << " " << m;
            std::cout << "\n";
        }
    }
    return skipped > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Turaev-Viro TV_{4,q} invariants of closed 3-manifold triangulations"};
    app.require_subcommand(1);

    int q = 1, jobs = 0, r = 4, count = 10;
    unsigned seed = 0;
    bool as_json = false, oracle = false, no_tv = false;
    std::uint64_t budget = kDefaultBudget;
    std::vector<std::string> files;
    std::string outPath, dir, genKind;
    long genP = 0, genQ = 0;

    auto add_common = [&](CLI::App* sub, bool with_q) {
        sub->add_flag("--json", as_json, "emit JSON");
        if (with_q)
            sub->add_option("--q", q, "quantum parameter q")->check(CLI::IsMember({1, 3, 5, 7}));
    };

    auto* compute = app.add_subcommand("compute", "TV_{4,q} of TRI files");
    compute->add_option("files", files)->required()->check(CLI::ExistingFile);
    add_common(compute, true);
    compute->add_flag("--oracle", oracle, "cross-check against the brute-force oracles");
    compute->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    compute->add_option("--budget", budget, "oracle enumeration budget");

    auto* triple = app.add_subcommand("triple", "triple invariant (TV_{4,q})_nu");
    triple->add_option("files", files)->required()->check(CLI::ExistingFile);
    add_common(triple, true);
    triple->add_option("--jobs", jobs, "worker threads");

    auto* poly = app.add_subcommand("poly", "Laurent polynomial P_T(z)");
    poly->add_option("files", files)->required()->check(CLI::ExistingFile);
    add_common(poly, false);
    poly->add_option("--jobs", jobs, "worker threads");

    auto* orc = app.add_subcommand("oracle", "brute-force TV_{r,q} state sum");
    orc->add_option("files", files)->required()->check(CLI::ExistingFile);
    add_common(orc, true);
    orc->add_option("--r", r, "number of colours parameter r >= 3");
    orc->add_option("--budget", budget, "enumeration budget");

    auto* hom = app.add_subcommand("homology", "Betti numbers and integral H1");
    hom->add_option("files", files)->required()->check(CLI::ExistingFile);
    add_common(hom, false);

    auto* gen = app.add_subcommand("gen", "generate a triangulation (gen lens P Q)");
    gen->add_option("kind", genKind, "family (only 'lens')")->required();
    gen->add_option("p", genP, "order of H1")->required();
    gen->add_option("q", genQ, "lens parameter q")->required();
    gen->add_option("-o,--out", outPath, "output file (default stdout)");

    auto* move = app.add_subcommand("move", "apply random Pachner 2-3 moves");
    move->add_option("file", files)->required()->expected(1)->check(CLI::ExistingFile);
    move->add_option("--count", count, "number of moves");
    move->add_option("--seed", seed, "RNG seed");
    move->add_option("-o,--out", outPath, "output file (default stdout)");

    auto* census = app.add_subcommand("census-group", "group a directory of TRI files");
    census->add_option("dir", dir, "directory of .tri files")
        ->required()
        ->check(CLI::ExistingDirectory);
    add_common(census, false);
    census->add_flag("--homology-only", no_tv, "skip the TV refinement");
    census->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit code 2
    }

    try {
        if (*compute) return cmd_compute(files, q, as_json, oracle, jobs, budget);
        if (*triple) return cmd_triple(files, q, as_json, jobs);
        if (*poly) return cmd_poly(files, as_json, jobs);
        if (*orc) return cmd_oracle(files, r, q, as_json, budget);
        if (*hom) return cmd_homology(files, as_json);
        if (*gen) {
            if (genKind != "lens") {
                std::cerr << "error: unknown family '" << genKind << "' (expected 'lens')\n";
                return 2;
            }
            return cmd_gen(genP, genQ, outPath);
        }
        if (*move) return cmd_move(files.at(0), count, seed, outPath);
        if (*census) return cmd_census_group(dir, as_json, !no_tv, jobs);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
