// ptri: periodic lattice triangulations toolkit
//
// Exact-arithmetic enumeration, certification and classification of
// Z^n-periodic triangulations.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ptri/enumerate.hpp"
#include "ptri/io.hpp"
#include "ptri/predicates.hpp"
#include "ptri/refine.hpp"
#include "ptri/stats.hpp"
#include "ptri/symmetry.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace ptri;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

int default_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

struct Args {
    int workers = default_workers();
};

int cmd_enumerate(int dim, const std::string& out_dir, int workers) {
    fs::create_directories(out_dir);
    CompatCache cache;
    LocalEnumResult r = local_enumerate(dim, workers, &cache, &std::cerr);
    StatsOptions so;
    so.threads = workers;
    so.with_point_group = false;
    long delaunay = 0;
    for (size_t i = 0; i < r.triangulations.size(); ++i) {
        char name[32];
        snprintf(name, sizeof(name), "tri_%zu.ptri", i + 1);
        write_triangulation((fs::path(out_dir) / name).string(), r.triangulations[i]);
        if (delaunay_test(r.triangulations[i], workers).is_delaunay) ++delaunay;
    }
    std::ostringstream audit;
    audit << "dim " << dim << "\n"
          << "triangulations " << r.triangulations.size() << "\n"
          << "delaunay " << delaunay << "\n"
          << "non_delaunay " << (r.triangulations.size() - delaunay) << "\n"
          << "dead_ends " << r.dead_ends << "\n"
          << "states_explored " << r.states_explored << "\n";
    write_file((fs::path(out_dir) / "audit.txt").string(), audit.str());
    std::cout << r.triangulations.size() << " triangulations, " << delaunay << " Delaunay, "
              << (r.triangulations.size() - delaunay) << " non-Delaunay\n"
              << "extensibility audit: " << r.dead_ends << " dead ends\n";
    return kExitOk;
}

int cmd_seed(int dim, const std::string& out) {
    write_triangulation(out, freudenthal_seed(dim));
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_closure(const std::string& seed_path, const std::string& ckpt, long max_nodes,
                const std::string& out_dir, int workers) {
    Complex seed = read_triangulation(seed_path);
    CompatCache cache;
    ClosureOptions opt;
    opt.threads = workers;
    opt.cache = &cache;
    opt.checkpoint_path = ckpt;
    opt.max_nodes = max_nodes;
    opt.log = &std::cerr;
    ClosureResult r = flip_closure(seed, opt);
    fs::create_directories(out_dir);
    write_archive_dir(out_dir, r.archive);
    std::ostringstream sum;
    sum << "archive " << r.archive.size() << "\nprocessed " << r.processed << "\n"
        << (r.budget_exhausted ? "status budget-exhausted (archive partial, resumable)\n"
                               : "status complete\n");
    write_file((fs::path(out_dir) / "summary.txt").string(), sum.str());
    std::cout << sum.str();
    return kExitOk;
}

int cmd_check_delaunay(const std::string& path, int workers) {
    Complex t = read_triangulation(path);
    DelaunayResult r = delaunay_test(t, workers);
    if (r.is_delaunay) {
        std::cout << "delaunay: yes (cone slack " << to_string(r.slack) << ")\nwitness form:\n"
                  << serialize_form(r.witness);
        return kExitOk;
    }
    std::cout << "delaunay: no (cone slack " << to_string(r.slack) << ", witness "
              << (r.witness_pd ? "PD" : "not PD") << ")\n";
    return kExitNegative;
}

int cmd_check_regular(const std::string& path, int radius, int workers) {
    Complex t = read_triangulation(path);
    RegularityResult r = nonregularity_test(t, radius, workers);
    std::cout << "radius " << r.radius << ": " << r.num_simplices << " simplices, "
              << r.num_points << " points, " << r.num_constraints << " constraints\n";
    if (r.feasible) {
        std::cout << "feasible (inconclusive: heights exist at this radius)\n";
        return kExitOk;
    }
    long support = 0;
    for (const Rat& y : r.farkas)
        if (y != 0) ++support;
    std::cout << "infeasible: certified non-regular\nfarkas certificate size " << support << " of "
              << r.farkas.size() << " constraints\n";
    return kExitNegative;
}

int cmd_check_valid(const std::string& path, int workers) {
    Complex t = read_triangulation(path);
    ValidateOptions vo;
    vo.threads = workers;
    CompatCache cache;
    vo.cache = &cache;
    ValidationReport rep = validate(t, vo);
    if (rep.valid) {
        std::cout << "valid\n";
        return kExitOk;
    }
    std::cout << "invalid: " << rep.message << "\n";
    return kExitNegative;
}

int cmd_iso(const std::string& p1, const std::string& p2, int workers) {
    Complex a = read_triangulation(p1), b = read_triangulation(p2);
    IsoOptions io;
    io.threads = workers;
    auto map = isomorphic(a, b, io);
    if (!map) {
        std::cout << "not isomorphic\n";
        return kExitNegative;
    }
    std::cout << "isomorphic: x -> Ax + b with\nA =\n";
    for (int i = 0; i < map->n; ++i) {
        for (int j = 0; j < map->n; ++j) std::cout << (j ? " " : "") << map->a[i][j];
        std::cout << "\n";
    }
    std::cout << "b = " << to_string(map->b) << "\n";
    return kExitOk;
}

int cmd_stats(const std::string& path, bool json, int workers) {
    Complex t = read_triangulation(path);
    StatsOptions so;
    so.threads = workers;
    TriStats s = compute_stats(t, so);
    std::cout << (json ? stats_to_json(s) + "\n" : stats_to_text(s));
    return kExitOk;
}

int cmd_classify(const std::string& dir, bool json, int workers) {
    std::vector<Complex> archive = read_archive_dir(dir);
    if (archive.empty()) {
        std::cerr << "no .ptri files in " << dir << "\n";
        return kExitUsage;
    }
    std::vector<TriStats> stats(archive.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers > 0 ? workers : 1)
    for (long i = 0; i < (long)archive.size(); ++i) {
        StatsOptions so;
        so.threads = 1;
        stats[i] = compute_stats(archive[i], so);
    }
    long delaunay = 0, cs_non_delaunay = 0, max_pg = 0, bad_bounds = 0;
    Int max_vol = 0;
    for (const TriStats& s : stats) {
        if (s.delaunay) ++delaunay;
        if (s.centrally_symmetric && !s.delaunay) ++cs_non_delaunay;
        max_pg = std::max(max_pg, s.point_group_order);
        if (!s.volume_bounds) ++bad_bounds;
        if (!s.volumes.empty()) max_vol = std::max(max_vol, s.volumes.back());
    }
    if (json) {
        std::cout << "[";
        for (size_t i = 0; i < stats.size(); ++i)
            std::cout << (i ? "," : "") << stats_to_json(stats[i]);
        std::cout << "]\n";
    } else {
        std::cout << "member  classes  maxvol  delaunay  cs  pg_order\n";
        for (size_t i = 0; i < stats.size(); ++i) {
            const TriStats& s = stats[i];
            std::cout << i + 1 << "  " << s.class_count << "  "
                      << to_string(s.volumes.empty() ? Int(0) : s.volumes.back()) << "  "
                      << (s.delaunay ? "yes" : "no") << "  "
                      << (s.centrally_symmetric ? "yes" : "no") << "  " << s.point_group_order
                      << "\n";
        }
    }
    std::cout << archive.size() << " total, " << delaunay << " Delaunay, " << cs_non_delaunay
              << " centrally symmetric non-Delaunay\n"
              << "max simplex volume " << to_string(max_vol) << ", max point group order "
              << max_pg << ", volume bounds " << (bad_bounds ? "VIOLATED" : "ok") << "\n";
    return kExitOk;
}

int cmd_thm61(int kmax, int workers) {
    (void)workers;
    Thm61Report rep = thm61_harness(kmax);
    if (rep.ok) {
        std::cout << "compatible for all k in 0.." << kmax << "\n";
        return kExitOk;
    }
    std::cout << "FAILED at k = " << rep.failed_k << ": " << rep.detail << "\n";
    return kExitNegative;
}

int cmd_refine(const std::string& tiling, int dim, const std::string& form_path,
               const std::string& out, int workers) {
    if (tiling != "cube") {
        std::cerr << "only --tiling cube is supported\n";
        return kExitUsage;
    }
    QuadForm a = read_form(form_path);
    RefineResult r = refine(dim, cube_tiling(dim), a, workers);
    if (!r.generic) {
        std::cout << "form is not generic for this tiling (a lower face ties); no output\n";
        return kExitNegative;
    }
    write_triangulation(out, r.triangulation);
    std::cout << "wrote " << out << " (" << r.triangulation.classes.size() << " classes)\n";
    return kExitOk;
}

int cmd_extend(const std::string& seed_path, int dim, const std::string& form_path,
               const std::string& out, int workers) {
    Complex t = read_triangulation(seed_path);
    QuadForm a = read_form(form_path);
    RefineResult r = prism_extend(t, dim, a, workers);
    if (!r.generic) {
        std::cout << "form is not generic for the prism tiling; no output\n";
        return kExitNegative;
    }
    write_triangulation(out, r.triangulation);
    std::cout << "wrote " << out << " (" << r.triangulation.classes.size() << " classes)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Z^n-periodic lattice triangulations"};
    app.require_subcommand(1);
    Args args;
    app.add_option("--workers", args.workers, "worker threads");

    int dim = 3, radius = 1, kmax = 10;
    long max_nodes = -1;
    std::string out, seed_path, ckpt, path1, path2, form_path, tiling = "cube";
    bool json = false, freudenthal = false;

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "local BFS enumeration (dims 3, 4)");
    enumerate_cmd->add_option("--dim", dim)->required()->check(CLI::IsMember({3, 4}));
    enumerate_cmd->add_option("--out", out)->required();

    CLI::App* seed_cmd = app.add_subcommand("seed", "write a seed triangulation");
    seed_cmd->add_flag("--freudenthal", freudenthal, "the n! permutation simplices");
    seed_cmd->add_option("--dim", dim)->required();
    seed_cmd->add_option("--out", out)->required();

    CLI::App* closure_cmd = app.add_subcommand("closure", "flip closure (resumable)");
    closure_cmd->add_option("--seed", seed_path)->required();
    closure_cmd->add_option("--checkpoint", ckpt)->required();
    closure_cmd->add_option("--max-nodes", max_nodes);
    closure_cmd->add_option("--out", out)->required();

    CLI::App* check_cmd = app.add_subcommand("check", "certification checks");
    check_cmd->require_subcommand(1);
    CLI::App* chk_del = check_cmd->add_subcommand("delaunay");
    chk_del->add_option("file", path1)->required();
    CLI::App* chk_reg = check_cmd->add_subcommand("regular");
    chk_reg->add_option("file", path1)->required();
    chk_reg->add_option("--radius", radius)->required()->check(CLI::PositiveNumber);
    CLI::App* chk_val = check_cmd->add_subcommand("valid");
    chk_val->add_option("file", path1)->required();

    CLI::App* iso_cmd = app.add_subcommand("iso", "unimodular-affine equivalence");
    iso_cmd->add_option("file1", path1)->required();
    iso_cmd->add_option("file2", path2)->required();

    CLI::App* stats_cmd = app.add_subcommand("stats", "statistics of one triangulation");
    stats_cmd->add_option("file", path1)->required();
    stats_cmd->add_flag("--json", json);

    CLI::App* classify_cmd = app.add_subcommand("classify", "summary over an archive directory");
    classify_cmd->add_option("dir", path1)->required();
    classify_cmd->add_flag("--json", json);

    CLI::App* thm61_cmd = app.add_subcommand("thm61", "infinite-neighbor family harness");
    thm61_cmd->add_option("--kmax", kmax)->required()->check(CLI::NonNegativeNumber);

    CLI::App* refine_cmd = app.add_subcommand("refine", "refine a tiling by a quadratic form");
    refine_cmd->add_option("--tiling", tiling);
    refine_cmd->add_option("--dim", dim)->required();
    refine_cmd->add_option("--form", form_path)->required();
    refine_cmd->add_option("--out", out)->required();

    CLI::App* extend_cmd = app.add_subcommand("extend", "prism extension to a higher dimension");
    extend_cmd->add_option("--seed", seed_path)->required();
    extend_cmd->add_option("--dim", dim)->required();
    extend_cmd->add_option("--form", form_path)->required();
    extend_cmd->add_option("--out", out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate_cmd->parsed()) return cmd_enumerate(dim, out, args.workers);
        if (seed_cmd->parsed()) {
            if (!freudenthal) {
                std::cerr << "seed: --freudenthal is the only seed family\n";
                return kExitUsage;
            }
            return cmd_seed(dim, out);
        }
        if (closure_cmd->parsed())
            return cmd_closure(seed_path, ckpt, max_nodes, out, args.workers);
        if (check_cmd->parsed()) {
            if (chk_del->parsed()) return cmd_check_delaunay(path1, args.workers);
            if (chk_reg->parsed()) return cmd_check_regular(path1, radius, args.workers);
            if (chk_val->parsed()) return cmd_check_valid(path1, args.workers);
        }
        if (iso_cmd->parsed()) return cmd_iso(path1, path2, args.workers);
        if (stats_cmd->parsed()) return cmd_stats(path1, json, args.workers);
        if (classify_cmd->parsed()) return cmd_classify(path1, json, args.workers);
        if (thm61_cmd->parsed()) return cmd_thm61(kmax, args.workers);
        if (refine_cmd->parsed()) return cmd_refine(tiling, dim, form_path, out, args.workers);
        if (extend_cmd->parsed()) return cmd_extend(seed_path, dim, form_path, out, args.workers);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
