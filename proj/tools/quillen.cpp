// quillen: build Quillen posets of finite permutation groups, compute their
// rational homology, decide the Quillen dimension property, and run the
// formula verification suites. Exit codes: 0 ok, 1 verification mismatch,
// 2 configuration error, 3 resource-cap error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quillen/analysis.hpp"
#include "quillen/errors.hpp"
#include "quillen/fixtures.hpp"
#include "quillen/verify.hpp"

using namespace quillen;
using nlohmann::json;

namespace {

constexpr const char* kCacheVersion = "quillen-cache-v1";

struct GroupArgs {
    std::string family;
    std::uint32_t q = 0;
    std::vector<std::string> kinds;
    std::string file;
    std::uint32_t sym = 0, alt = 0, cyclic = 0, dihedral = 0;
};

struct CommonArgs {
    unsigned p = 2;
    std::string backend = "modular";
    std::uint64_t seed = 0x51e57ab1e5ull;
    std::uint64_t element_cap = 10'000'000;
    std::uint64_t brute_cap = 1'000'000;
    std::uint64_t face_budget = 200'000'000;
    int jobs = 1;
    std::string format = "text";
    std::vector<std::string> reduce;
    std::string cache_dir;

    Caps caps() const {
        Caps c;
        c.element_scan_cap = element_cap;
        c.brute_force_cap = brute_cap;
        c.face_budget = face_budget;
        c.jobs = jobs;
        return c;
    }
    RankBackend rank_backend() const {
        if (backend == "modular") return RankBackend::Modular;
        if (backend == "exact") return RankBackend::Exact;
        throw ConfigError("unknown backend '" + backend + "' (modular|exact)");
    }
    std::string cache_path() const {
        if (!cache_dir.empty()) return cache_dir;
        const char* env = std::getenv("QUILLEN_CACHE_DIR");
        return env ? env : "";
    }
};

void add_group_flags(CLI::App* cmd, GroupArgs& g) {
    cmd->add_option("--family", g.family, "PSL2|PGL2|PSL3|PGL3|PSU3|PGU3");
    cmd->add_option("--q", g.q, "field parameter");
    cmd->add_option("--extend", g.kinds, "extension kinds: field,graph,diagonal,graph-field")
        ->delimiter(',');
    cmd->add_option("--file", g.file, "group-spec file");
    cmd->add_option("--sym", g.sym, "symmetric group on n points");
    cmd->add_option("--alt", g.alt, "alternating group on n points");
    cmd->add_option("--cyclic", g.cyclic, "cyclic group of order n");
    cmd->add_option("--dihedral", g.dihedral, "dihedral group of order n (even)");
}

void add_common_flags(CLI::App* cmd, CommonArgs& c) {
    cmd->add_option("--p", c.p, "prime (default 2)");
    cmd->add_option("--backend", c.backend, "rank backend: modular|exact");
    cmd->add_option("--seed", c.seed, "seed for modular primes");
    cmd->add_option("--element-cap", c.element_cap, "element scan cap");
    cmd->add_option("--brute-cap", c.brute_cap, "brute-force group order cap");
    cmd->add_option("--face-budget", c.face_budget, "order complex face budget");
    cmd->add_option("--jobs", c.jobs, "worker threads");
    cmd->add_option("--format", c.format, "output format: text|csv");
    cmd->add_option("--reduce", c.reduce, "reductions before homology: core,cone")->delimiter(',');
    cmd->add_option("--cache-dir", c.cache_dir, "cache directory (or QUILLEN_CACHE_DIR)");
}

LabeledGroup resolve_group(const GroupArgs& g, const Caps& caps) {
    int sources = 0;
    sources += !g.family.empty();
    sources += !g.file.empty();
    sources += g.sym || g.alt || g.cyclic || g.dihedral ? 1 : 0;
    if (sources != 1)
        throw ConfigError("specify exactly one of --family/--q, --file, or a fixture flag");
    if (!g.file.empty()) return load_group_file(g.file);
    if (g.sym) return make_sym(g.sym);
    if (g.alt) return make_alt(g.alt);
    if (g.cyclic) return make_cyclic(g.cyclic);
    if (g.dihedral) return make_dihedral(g.dihedral);
    auto fam = parse_family(g.family);
    if (!fam) throw ConfigError("unknown family '" + g.family + "'");
    if (g.q == 0) throw ConfigError("--family needs --q");
    auto base = projective_group(*fam, g.q);
    if (g.kinds.empty()) return base;
    std::vector<ExtensionKind> ks;
    for (const auto& s : g.kinds) {
        auto k = parse_kind(s);
        if (!k) throw ConfigError("unknown extension kind '" + s + "'");
        ks.push_back(*k);
    }
    return extend(base, ks, caps).ext;
}

std::string group_cache_key(const LabeledGroup& g, unsigned p, const CommonArgs& c) {
    std::ostringstream blob;
    blob << kCacheVersion << '|' << g.group.degree() << '|' << p << '|' << c.backend << '|'
         << c.seed;
    for (const auto& r : c.reduce) blob << '|' << r;
    for (const auto& gen : g.group.generators()) blob << '|' << gen.cycle_string(false);
    auto s = blob.str();
    std::uint64_t h1 = hash_images(reinterpret_cast<const std::uint32_t*>(s.data()),
                                   s.size() / 4, 17);
    std::uint64_t h2 = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h2 ^= ch;
        h2 *= 1099511628211ull;
    }
    std::ostringstream key;
    key << std::hex << h1 << h2;
    return key.str();
}

struct PipelineResult {
    unsigned m_p = 0;
    std::uint32_t components = 0;
    std::vector<std::uint64_t> f;
    std::vector<std::int64_t> betti;
    bool empty_poset = false;
    std::string backend;
    std::string chi_faces, chi_classes;
};

PipelineResult run_pipeline(const LabeledGroup& g, unsigned p, const CommonArgs& c,
                            const std::string& dump_path = "") {
    PipelineResult out;
    const Caps caps = c.caps();
    auto P = build_quillen_poset(g.group, p, caps);
    out.m_p = P.max_rank();
    out.components = P.component_count();
    out.empty_poset = P.empty();
    out.chi_classes = P.empty() ? "-1" : euler_from_classes(class_summaries(P), p).str();

    bool do_core = false, do_cone = false;
    for (const auto& r : c.reduce) {
        if (r == "core")
            do_core = true;
        else if (r == "cone")
            do_cone = true;
        else
            throw ConfigError("unknown reduction '" + r + "' (core|cone)");
    }
    QuillenPoset Q = P;
    if (do_core) Q = core_reduction(Q, caps);
    if (do_cone) Q = cone_point_removal(Q);
    if (!dump_path.empty()) {
        std::ofstream f(dump_path);
        if (!f) throw ConfigError("cannot write poset dump: " + dump_path);
        dump_poset(Q, f);
    }
    auto C = order_complex(Q, caps);
    out.f = C.f;
    out.chi_faces = euler_from_faces(C).str();
    auto B = betti(C, c.rank_backend(), c.seed, caps);
    out.betti = B.betti;
    out.backend = B.backend;
    return out;
}

int cmd_group(const GroupArgs& ga, const CommonArgs& ca) {
    auto g = resolve_group(ga, ca.caps());
    auto P = build_quillen_poset(g.group, ca.p, ca.caps());
    auto core = p_core(g.group, ca.p, ca.caps());
    std::cout << "name:    " << g.name << "\n";
    std::cout << "degree:  " << g.group.degree() << "\n";
    std::cout << "order:   " << g.group.order() << "\n";
    std::cout << "m_" << ca.p << ":     " << P.max_rank() << "\n";
    std::cout << "p-core:  " << core.group.order() << "\n";
    return 0;
}

int cmd_qd(const GroupArgs& ga, const CommonArgs& ca) {
    auto g = resolve_group(ga, ca.caps());
    std::string cache = ca.cache_path();
    std::string key = cache.empty() ? "" : group_cache_key(g, ca.p, ca);
    json cached;
    bool hit = false;
    if (!cache.empty()) {
        std::ifstream in(cache + "/" + key + ".json");
        if (in) {
            in >> cached;
            hit = cached.value("version", "") == kCacheVersion;
        }
    }
    PipelineResult r;
    if (hit) {
        r.m_p = cached["m_p"].get<unsigned>();
        r.components = cached["components"].get<std::uint32_t>();
        r.f = cached["f"].get<std::vector<std::uint64_t>>();
        r.betti = cached["betti"].get<std::vector<std::int64_t>>();
        r.empty_poset = cached["empty"].get<bool>();
        r.backend = cached["backend"].get<std::string>() + "+cache";
        r.chi_faces = cached["chi_faces"].get<std::string>();
        r.chi_classes = cached["chi_classes"].get<std::string>();
    } else {
        r = run_pipeline(g, ca.p, ca,
                         cache.empty() ? "" : cache + "/" + key + ".poset");
        if (!cache.empty()) {
            std::filesystem::create_directories(cache);
            json j;
            j["version"] = kCacheVersion;
            j["name"] = g.name;
            j["m_p"] = r.m_p;
            j["components"] = r.components;
            j["f"] = r.f;
            j["betti"] = r.betti;
            j["empty"] = r.empty_poset;
            j["backend"] = r.backend;
            j["chi_faces"] = r.chi_faces;
            j["chi_classes"] = r.chi_classes;
            std::ofstream out(cache + "/" + key + ".json");
            out << j.dump(2) << "\n";
        }
    }
    auto core = p_core(g.group, ca.p, ca.caps());
    bool satisfies =
        r.empty_poset ? true : (r.m_p >= 1 && r.m_p - 1 < r.betti.size() && r.betti[r.m_p - 1] > 0);
    if (ca.format == "csv") {
        std::cout << "group,p,m_p,f,betti,chi_faces,chi_classes,verdict,p_core,components,backend\n";
        std::cout << g.name << ',' << ca.p << ',' << r.m_p << ",[";
        for (std::size_t i = 0; i < r.f.size(); ++i) std::cout << (i ? ";" : "") << r.f[i];
        std::cout << "],[";
        for (std::size_t i = 0; i < r.betti.size(); ++i) std::cout << (i ? ";" : "") << r.betti[i];
        std::cout << "]," << r.chi_faces << ',' << r.chi_classes << ','
                  << (satisfies ? "satisfies" : "fails") << ',' << core.group.order() << ','
                  << r.components << ',' << r.backend << "\n";
    } else {
        std::cout << g.name << " at p=" << ca.p << "\n";
        std::cout << "  p-rank m_p:     " << r.m_p << "\n";
        std::cout << "  f-vector:       ";
        for (auto x : r.f) std::cout << x << ' ';
        if (r.f.empty()) std::cout << "(empty poset)";
        std::cout << "\n  reduced Betti:  ";
        for (auto b : r.betti) std::cout << b << ' ';
        if (r.empty_poset) std::cout << "(degree -1: 1)";
        std::cout << "\n  chi~ (faces):   " << r.chi_faces << "\n";
        std::cout << "  chi~ (classes): " << r.chi_classes << "\n";
        std::cout << "  p-core order:   " << core.group.order() << "\n";
        std::cout << "  components:     " << r.components << "\n";
        std::cout << "  backend:        " << r.backend << "\n";
        std::cout << "  verdict:        " << (satisfies ? "satisfies" : "fails")
                  << " the Quillen dimension property\n";
    }
    return 0;
}

int cmd_poset(const GroupArgs& ga, const CommonArgs& ca, const std::string& out_path) {
    auto g = resolve_group(ga, ca.caps());
    auto P = build_quillen_poset(g.group, ca.p, ca.caps());
    QuillenPoset Q = P;
    for (const auto& r : ca.reduce) {
        if (r == "core")
            Q = core_reduction(Q, ca.caps());
        else if (r == "cone")
            Q = cone_point_removal(Q);
        else
            throw ConfigError("unknown reduction '" + r + "'");
    }
    if (out_path.empty()) {
        dump_poset(Q, std::cout);
    } else {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot write " + out_path);
        dump_poset(Q, f);
    }
    return 0;
}

int cmd_verify(const CommonArgs& ca, const std::string& suite, const std::string& family,
               std::vector<std::uint32_t> qs, std::uint32_t q_max, bool allow_hours,
               const std::string& fixtures, const std::string& g2_fixture,
               const std::string& out_path) {
    verify::Options opt;
    opt.caps = ca.caps();
    opt.backend = ca.rank_backend();
    opt.seed = ca.seed;
    opt.fixture_dir = fixtures;
    opt.g2_fixture = g2_fixture;
    opt.allow_hours = allow_hours;

    verify::SuiteResult result;
    if (!suite.empty()) {
        if (suite == "paper-small") {
            result = verify::paper_small(opt);
        } else if (suite == "g2_3") {
            opt.allow_hours = allow_hours;
            result = verify::g2_long_run(opt);
        } else {
            throw ConfigError("unknown suite '" + suite + "' (paper-small|g2_3)");
        }
    } else if (!family.empty()) {
        if (family == "ree-euler") {
            result = verify::ree_family(opt, q_max ? q_max : 19683);
        } else {
            auto fam = parse_family(family);
            if (!fam) throw ConfigError("unknown family '" + family + "'");
            if (qs.empty()) {
                if (*fam == Family::PSL2 || *fam == Family::PGL2)
                    qs = {5, 7, 9, 11, 13};
                else
                    qs = {3};
            }
            result = verify::family_suite(*fam, qs, opt);
        }
    } else {
        throw ConfigError("verify needs --suite or --family");
    }

    std::ostringstream csv;
    verify::write_csv(result, csv);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << csv.str();
    }
    if (ca.format == "csv") {
        std::cout << csv.str();
    } else {
        verify::write_markdown_summary(result, std::cout);
    }
    return result.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quillen posets of finite permutation groups: homology, "
                 "Quillen-dimension verdicts, formula verification"};
    app.require_subcommand(1);

    GroupArgs ga_group, ga_qd, ga_poset;
    CommonArgs ca_group, ca_qd, ca_poset, ca_verify;

    auto* group = app.add_subcommand("group", "print basic group data");
    add_group_flags(group, ga_group);
    add_common_flags(group, ca_group);

    auto* qd = app.add_subcommand("qd", "Quillen dimension verdict");
    add_group_flags(qd, ga_qd);
    add_common_flags(qd, ca_qd);

    std::string poset_out;
    auto* poset = app.add_subcommand("poset", "dump the Quillen poset");
    add_group_flags(poset, ga_poset);
    add_common_flags(poset, ca_poset);
    poset->add_option("--out", poset_out, "output file (default stdout)");

    std::string suite, family, fixtures = "fixtures", g2_fixture, verify_out;
    std::vector<std::uint32_t> qs;
    std::uint32_t q_max = 0;
    bool allow_hours = false;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "paper-small|g2_3");
    verify_cmd->add_option("--family", family, "PSL2|PGL2|PSL3|PSU3|ree-euler");
    verify_cmd->add_option("--q", qs, "parameters to check")->delimiter(',');
    verify_cmd->add_option("--q-max", q_max, "upper bound for ree-euler");
    verify_cmd->add_flag("--allow-hours", allow_hours, "enable long-running targets");
    verify_cmd->add_option("--fixtures", fixtures, "fixture directory");
    verify_cmd->add_option("--g2-fixture", g2_fixture, "path to a G2(3) generator file");
    verify_cmd->add_option("--out", verify_out, "write CSV to a file");
    add_common_flags(verify_cmd, ca_verify);

    try {
        app.parse(argc, argv);
        if (group->parsed()) return cmd_group(ga_group, ca_group);
        if (qd->parsed()) return cmd_qd(ga_qd, ca_qd);
        if (poset->parsed()) return cmd_poset(ga_poset, ca_poset, poset_out);
        if (verify_cmd->parsed())
            return cmd_verify(ca_verify, suite, family, qs, q_max, allow_hours, fixtures,
                              g2_fixture, verify_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
