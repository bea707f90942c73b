#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "simplicia/bistellar.hpp"
#include "simplicia/canonical.hpp"
#include "simplicia/catalog.hpp"
#include "simplicia/constructions.hpp"
#include "simplicia/enumerate.hpp"
#include "simplicia/error.hpp"
#include "simplicia/homology.hpp"
#include "simplicia/invariants.hpp"
#include "simplicia/io.hpp"
#include "simplicia/parallel.hpp"
#include "simplicia/recognition.hpp"

using namespace simplicia;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNo = 1, kUnknown = 2, kUsage = 64, kParse = 65 };

class UsageError : public Error {
public:
    using Error::Error;
};

struct Outcome {
    json results = json::object();
    Status status = Status::Yes;
    std::string raw;  // printed verbatim in text mode when set
};

const char* status_word(Status s) { return s == Status::Yes ? "ok" : s == Status::No ? "no" : "unknown"; }

int exit_code(Status s) { return s == Status::Yes ? kOk : s == Status::No ? kNo : kUnknown; }

json facets_json(const Complex& K) {
    json out = json::array();
    for (const auto& f : K.facets()) {
        auto t = K.tokens(f);
        std::sort(t.begin(), t.end(), token_less);
        out.push_back(t);
    }
    return out;
}

json verdict_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    if (!v.certificate.empty()) j["certificate"] = v.certificate;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json bound_json(const BoundReport& r) {
    json j;
    j["ok"] = r.ok;
    json items = json::object();
    for (std::size_t i = 0; i < r.items.size(); ++i) items[r.items[i]] = r.values[i];
    j["values"] = items;
    if (!r.failed.empty()) j["failed"] = r.failed;
    return j;
}

Simplex face_of(const Complex& K, const std::vector<std::string>& tokens) {
    std::vector<Vertex> ids;
    for (const auto& t : tokens) {
        auto v = K.find_vertex(t);
        if (!v) throw UsageError("unknown vertex: " + t);
        ids.push_back(*v);
    }
    return Simplex(ids);
}

void write_text(std::ostream& out, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            write_text(out, v, indent + 2);
        } else if (v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object())) {
            out << pad << it.key() << ":\n";
            for (const auto& row : v) {
                if (row.is_object()) {
                    write_text(out, row, indent + 2);
                    out << "\n";
                } else {
                    out << pad << "  ";
                    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << (row[i].is_string() ? row[i].get<std::string>() : row[i].dump());
                    out << "\n";
                }
            }
        } else if (v.is_array()) {
            out << pad << it.key() << " = (";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            out << ")\n";
        } else {
            out << pad << it.key() << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

// ---- commands ---------------------------------------------------------------

Outcome cmd_invariants(const Complex& K) {
    Outcome o;
    auto& r = o.results;
    r["name"] = K.name();
    r["vertices"] = K.vertex_count();
    r["dimension"] = K.dim();
    r["facets"] = K.facet_count();
    r["pure"] = K.is_pure();
    r["connected"] = is_connected(K);
    r["f_vector"] = f_vector(K);
    if (K.is_pure()) r["h_vector"] = h_vector(K);
    r["euler_characteristic"] = euler_characteristic(K);
    r["neighborliness"] = neighborliness(K);
    return o;
}

Outcome cmd_verify(const Complex& K, const Budget& budget, std::uint64_t seed) {
    Outcome o;
    auto& r = o.results;
    if (!K.is_pure()) {
        r["pseudomanifold"] = verdict_json(Verdict::no("not pure"));
        o.status = Status::No;
        return o;
    }
    auto pm = is_pseudomanifold(K);
    r["pseudomanifold"] = verdict_json(pm);
    o.status = pm.status;
    if (!pm.is_yes()) return o;
    r["orientable"] = orientable(K).is_yes();
    auto normal = is_normal_pseudomanifold(K);
    r["normal"] = verdict_json(normal);
    o.status = worst(o.status, normal.status);
    if (!normal.is_yes()) return o;
    auto manifold = is_combinatorial_manifold(K, budget, seed);
    r["manifold"] = verdict_json(manifold);
    o.status = worst(o.status, manifold.status);
    return o;
}

Outcome cmd_homology(const Complex& K) {
    Outcome o;
    const auto h = homology(K);
    for (std::size_t i = 0; i < h.groups.size(); ++i) o.results["H_" + std::to_string(i)] = format_group(h.groups[i]);
    o.results["betti"] = h.betti();
    return o;
}

Outcome cmd_link(const Complex& K, const std::vector<std::string>& tokens) {
    const auto s = face_of(K, tokens);
    if (!K.is_face(s)) throw UsageError("not a face of " + K.name());
    const auto L = link(K, s);
    Outcome o;
    o.results["face"] = tokens;
    o.results["f_vector"] = f_vector(L);
    o.results["facets"] = facets_json(L);
    return o;
}

Outcome cmd_iso(const Complex& K, const Complex& L) {
    Outcome o;
    auto v = are_isomorphic(K, L);
    o.status = v.status;
    o.results["isomorphic"] = verdict_json(v);
    if (v.is_yes()) {
        json map = json::object();
        for (Vertex x = 0; x < K.vertex_count(); ++x)
            map[K.label(x)] = L.label(static_cast<Vertex>(v.values[static_cast<std::size_t>(x)]));
        o.results["mapping"] = map;
    }
    return o;
}

int int_arg(const std::vector<std::string>& args, std::size_t i, const char* what) {
    if (i >= args.size()) throw UsageError(std::string("missing argument: ") + what);
    try {
        std::size_t used = 0;
        const int v = std::stoi(args[i], &used);
        if (used != args[i].size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::logic_error&) {
        throw UsageError(std::string("not an integer: ") + args[i]);
    }
}

Complex construct(const std::string& name, const std::vector<std::string>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw UsageError(name + " takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "sphere") return need(1), standard_sphere(int_arg(args, 0, "d"));
    if (name == "cyclic") return need(2), cyclic_sphere(int_arg(args, 0, "d"), int_arg(args, 1, "n"));
    if (name == "kuhnel") return need(2), kuhnel_complex(int_arg(args, 0, "d"), int_arg(args, 1, "n"));
    if (name == "kuhnel-p") {
        need(2);
        Partition p;
        std::stringstream in(args[1]);
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(in, part, ',')) parts.push_back(part);
        for (std::size_t i = 0; i < parts.size(); ++i) p.parts.push_back(int_arg(parts, i, "part"));
        std::sort(p.parts.begin(), p.parts.end());
        return kuhnel_partition(int_arg(args, 0, "d"), p);
    }
    if (name == "stacked") {
        need(3);
        return stacked_sphere(int_arg(args, 1, "n"), int_arg(args, 0, "d"),
                              static_cast<std::uint64_t>(int_arg(args, 2, "seed")));
    }
    if (name == "rp") return need(1), real_projective_space(int_arg(args, 0, "d"));
    if (name == "torus") return need(1), torus(int_arg(args, 0, "d"));
    if (name == "barycentric") return need(1), barycentric_subdivision(read_cplx(args[0]));
    if (name == "suspend") {
        need(2);
        const auto K = read_cplx(args[0]);
        return one_point_suspension(K, face_of(K, {args[1]})[0]);
    }
    if (name == "quotient") {
        need(2);
        const auto K = read_cplx(args[0]);
        std::ifstream in(args[1]);
        if (!in) throw ParseError("cannot read " + args[1]);
        std::stringstream buf;
        buf << in.rdbuf();
        return quotient(K, parse_group(buf.str(), K));
    }
    throw UsageError("unknown construction: " + name);
}

Outcome emit_complex(const Complex& K, const std::string& path) {
    Outcome o;
    if (!path.empty()) {
        write_cplx(path, K);
        o.results["written"] = path;
        o.results["f_vector"] = f_vector(K);
    } else {
        o.raw = to_cplx(K);
        o.results["name"] = K.name();
        o.results["facets"] = facets_json(K);
    }
    return o;
}

Outcome cmd_catalog_verify(const std::vector<std::string>& names, bool deep) {
    Outcome o;
    for (const auto& name : names) {
        const auto r = catalog_verify(name, deep);
        json j;
        j["ok"] = r.ok;
        j["passed"] = r.passed.size();
        if (!r.failed.empty()) j["failed"] = r.failed;
        if (!r.undecided.empty()) j["undecided"] = r.undecided;
        o.results[name] = j;
        if (!r.ok) o.status = Status::No;
        else if (!r.undecided.empty()) o.status = worst(o.status, Status::Unknown);
    }
    return o;
}

Outcome cmd_reduce(const Complex& K, const Budget& budget, std::uint64_t seed, const std::string& trace_path) {
    Outcome o;
    auto red = reduce_to_sphere(K, budget, seed);
    o.status = red.verdict.status;
    o.results["sphere"] = verdict_json(red.verdict);
    o.results["restart"] = red.restart;
    o.results["moves"] = red.trace.steps.size();
    if (!red.trace.steps.empty()) o.results["final_f_vector"] = red.trace.steps.back().f;
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw Error("cannot write " + trace_path);
        out << red.trace.to_json_lines();
        o.results["trace"] = trace_path;
    }
    return o;
}

Outcome cmd_moves(const Complex& K, bool zero) {
    Outcome o;
    const auto moves = valid_moves(K, zero);
    json by_k = json::object();
    json list = json::array();
    const auto f = f_vector(K);
    for (const auto& m : moves) {
        auto key = std::to_string(m.k);
        by_k[key] = by_k.value(key, 0) + 1;
        auto step = describe(K, m, {});
        list.push_back(json{{"k", m.k}, {"a", step.a}, {"b", step.b}});
    }
    o.results["count"] = moves.size();
    o.results["by_k"] = by_k;
    o.results["moves"] = list;
    return o;
}

Outcome cmd_bounds(const Complex& K) {
    Outcome o;
    auto& r = o.results;
    auto add = [&](const char* key, const BoundReport& b) {
        r[key] = bound_json(b);
        if (!b.ok) o.status = Status::No;
    };
    const int d = K.dim();
    add("dehn_sommerville", dehn_sommerville_residuals(K));
    if (K.vertex_count() >= d + 2 && d >= 1) {
        add("lower_bound", lbt_check(K));
        add("upper_bound", ubt_check(K));
    }
    if (K.vertex_count() <= 20) r["complementarity"] = complementarity_check(K);
    const long long chi = euler_characteristic(K);
    if (d == 2 && chi <= 2) {
        const int bound = surface_vertex_bound(chi);
        r["surface_vertex_bound"] = bound;
        if (K.vertex_count() < bound) o.status = Status::No;
    }
    if (d == 3) add("walkup_3d", walkup_3d_bound(K));
    if (d == 4) {
        add("kuhnel_4d", kuhnel_4d_report(K));
        add("walkup_4d", walkup_4d_bound(K));
    }
    return o;
}

Outcome cmd_enumerate(const EnumerationReport& rep, const std::string& emit_dir) {
    Outcome o;
    o.results["n"] = rep.n;
    o.results["total"] = rep.total;
    o.results["breakdown"] = rep.breakdown;
    o.results["elapsed_ms"] = rep.elapsed.count();
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const auto& K : rep.complexes) {
            std::ostringstream name;
            name << std::hex << std::setw(16) << std::setfill('0') << canonical_hash(K);
            write_cplx(std::filesystem::path(emit_dir) / (name.str() + ".cplx"), K.with_name(name.str()));
        }
        o.results["emitted"] = rep.complexes.size();
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial manifolds: invariants, recognition, catalog and enumeration"};
    app.require_subcommand(1);
    bool as_json = false;
    int jobs = 0;
    app.add_flag("--json", as_json, "JSON report on stdout");
    app.add_option("--jobs", jobs, "worker threads (default: SIMPLICIA_JOBS or all cores)")->check(CLI::NonNegativeNumber);

    std::string file, file2, out_path, trace_path, emit_dir, name;
    std::vector<std::string> rest;
    std::uint64_t seed = 1;
    Budget budget;
    bool zero = false, shallow = false, connected = false, extended = false;
    int n = 0, d = 0;

    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", budget.moves_per_restart, "moves per restart")->check(CLI::PositiveNumber);
        c->add_option("--restarts", budget.restarts, "annealing restarts")->check(CLI::PositiveNumber);
        c->add_option("--seed", seed, "random seed");
    };

    auto* inv = app.add_subcommand("invariants", "f- and h-vectors, Euler characteristic");
    inv->add_option("FILE", file)->required();
    auto* ver = app.add_subcommand("verify", "pseudomanifold, normal and manifold checks");
    ver->add_option("FILE", file)->required();
    add_budget(ver);
    auto* hom = app.add_subcommand("homology", "integral homology");
    hom->add_option("FILE", file)->required();
    auto* lnk = app.add_subcommand("link", "link of a face");
    lnk->add_option("FILE", file)->required();
    lnk->add_option("VERTICES", rest)->required();
    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("FILE1", file)->required();
    iso->add_option("FILE2", file2)->required();
    auto* con = app.add_subcommand("construct", "build a complex: sphere d | cyclic d n | kuhnel d n | kuhnel-p d p1,p2,.. | "
                                                "stacked d n seed | rp d | torus d | barycentric F | suspend F u | quotient F PERMS");
    con->add_option("NAME", name)->required();
    con->add_option("ARGS", rest);
    con->add_option("-o,--output", out_path);
    auto* cat = app.add_subcommand("catalog", "built-in examples");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "entry names and titles");
    auto* cat_emit = cat->add_subcommand("emit", "write an entry as .cplx");
    cat_emit->add_option("NAME", name)->required();
    cat_emit->add_option("-o,--output", out_path);
    auto* cat_verify = cat->add_subcommand("verify", "compare entries with their stated properties");
    cat_verify->add_option("NAME", name);
    cat_verify->add_flag("--shallow", shallow, "skip the recognizers");
    auto* red = app.add_subcommand("reduce", "bistellar reduction towards the boundary of a simplex");
    red->add_option("FILE", file)->required();
    add_budget(red);
    red->add_option("--trace", trace_path, "write the move trace as JSON lines");
    auto* mov = app.add_subcommand("moves", "valid bistellar moves");
    mov->add_option("FILE", file)->required();
    mov->add_flag("--zero", zero, "include facet starrings");
    auto* enu = app.add_subcommand("enumerate", "isomorph-free generation");
    enu->require_subcommand(1);
    auto* enu_s = enu->add_subcommand("surfaces", "complexes whose vertex links are cycles");
    enu_s->add_option("-n", n)->required();
    enu_s->add_flag("--connected", connected);
    enu_s->add_flag("--extended", extended, "allow n = 9");
    enu_s->add_option("--emit", emit_dir, "write each complex to DIR/<hash>.cplx");
    auto* enu_p = enu->add_subcommand("d-plus-3", "d-pseudomanifolds on d + 3 vertices");
    enu_p->add_option("-d", d)->required();
    enu_p->add_option("--emit", emit_dir);
    auto* enu_nb = enu->add_subcommand("neighbourly-3-spheres", "2-neighbourly 3-manifolds on 8 vertices");
    enu_nb->add_flag("--extended", extended)->required();
    enu_nb->add_option("--emit", emit_dir);
    auto* bnd = app.add_subcommand("bounds", "Dehn-Sommerville residuals and face-number bounds");
    bnd->add_option("FILE", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (jobs > 0) set_default_jobs(jobs);
    budget.jobs = jobs;

    std::vector<std::string> args(argv + 1, argv + argc);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (*inv) o = cmd_invariants(read_cplx(file));
        else if (*ver) o = cmd_verify(read_cplx(file), budget, seed);
        else if (*hom) o = cmd_homology(read_cplx(file));
        else if (*lnk) o = cmd_link(read_cplx(file), rest);
        else if (*iso) o = cmd_iso(read_cplx(file), read_cplx(file2));
        else if (*con) o = emit_complex(construct(name, rest), out_path);
        else if (*cat_list) {
            for (const auto& nm : catalog_names()) o.results[nm] = catalog_get(nm).title;
        } else if (*cat_emit) o = emit_complex(catalog_get(name).complex, out_path);
        else if (*cat_verify) o = cmd_catalog_verify(name.empty() ? catalog_names() : std::vector<std::string>{name}, !shallow);
        else if (*red) o = cmd_reduce(read_cplx(file), budget, seed, trace_path);
        else if (*mov) o = cmd_moves(read_cplx(file), zero);
        else if (*enu_s) {
            EnumerationOptions opt;
            opt.connected_only = connected;
            opt.extended = extended;
            opt.jobs = jobs;
            o = cmd_enumerate(surfaces(n, opt), emit_dir);
        } else if (*enu_p) o = cmd_enumerate(pseudomanifolds_d_plus_3(d), emit_dir);
        else if (*enu_nb) {
            EnumerationOptions opt;
            opt.extended = extended;
            opt.jobs = jobs;
            o = cmd_enumerate(neighbourly_3spheres_8(opt), emit_dir);
        } else if (*bnd) o = cmd_bounds(read_cplx(file));
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

    if (as_json) {
        json report;
        report["command"] = args;
        report["results"] = o.results;
        report["status"] = status_word(o.status);
        report["elapsed_ms"] = ms;
        std::cout << report.dump(2) << "\n";
    } else if (!o.raw.empty()) {
        std::cout << o.raw;
    } else {
        write_text(std::cout, o.results, 0);
        std::cout << "status = " << status_word(o.status) << "\n";
    }
    return exit_code(o.status);
}
