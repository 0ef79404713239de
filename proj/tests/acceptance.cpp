// Acceptance suite: one pass/fail line per criterion. Heavy artifacts
// (notably the dim-5 flip closure) live in a work directory and are
// checkpointed, so reruns resume instead of recomputing.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ptri/enumerate.hpp"
#include "ptri/io.hpp"
#include "ptri/predicates.hpp"
#include "ptri/refine.hpp"
#include "ptri/stats.hpp"
#include "ptri/symmetry.hpp"

namespace fs = std::filesystem;
using namespace ptri;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_work;
int g_threads = 2;
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!pass) ++g_failures;
}

int run_cli(const std::string& args, const std::string& log_name) {
    std::string cmd = g_cli + " " + args + " >" + g_work + "/" + log_name + " 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- per-member stats over the dim-5 archive, cached on disk ----

struct MemberInfo {
    bool delaunay = false;
    bool cs = false;
    long pg = 0;
    long maxvol = 0;
    bool bounds = false;
};

std::vector<MemberInfo> archive_info(const std::vector<Complex>& archive) {
    std::string cache_path = g_work + "/classify_cache.txt";
    std::vector<MemberInfo> info(archive.size());
    std::vector<char> have(archive.size(), 0);
    {
        std::ifstream in(cache_path);
        size_t i;
        MemberInfo m;
        int d, c, b;
        while (in >> i >> d >> c >> m.pg >> m.maxvol >> b) {
            if (i < archive.size()) {
                m.delaunay = d;
                m.cs = c;
                m.bounds = b;
                info[i] = m;
                have[i] = 1;
            }
        }
    }
    std::ofstream out(cache_path, std::ios::app);
#pragma omp parallel for schedule(dynamic) num_threads(g_threads)
    for (long i = 0; i < (long)archive.size(); ++i) {
        if (have[i]) continue;
        StatsOptions so;
        so.threads = 1;
        TriStats s = compute_stats(archive[i], so);
        MemberInfo m;
        m.delaunay = s.delaunay;
        m.cs = s.centrally_symmetric;
        m.pg = s.point_group_order;
        m.maxvol = s.volumes.empty() ? 0 : (long)s.volumes.back().get_si();
        m.bounds = s.volume_bounds;
        info[i] = m;
#pragma omp critical(acc_cache)
        out << i << " " << m.delaunay << " " << m.cs << " " << m.pg << " " << m.maxvol << " "
            << m.bounds << "\n"
            << std::flush;
    }
    return info;
}

// ---------------------------------------------------------------- 1 -------

void criterion1() {
    auto t0 = Clock::now();
    int rc = run_cli("enumerate --dim 3 --out " + g_work + "/enum3", "enum3.log");
    double secs = elapsed(t0);
    bool ok = rc == 0;
    std::string audit = slurp(g_work + "/enum3/audit.txt");
    ok = ok && audit.find("triangulations 1\n") != std::string::npos;
    Complex t;
    if (ok) {
        t = read_triangulation(g_work + "/enum3/tri_1.ptri");
        ok = t.classes.size() == 6;
        for (const SimplexClass& c : t.classes) ok = ok && c.volume == 1;
        ok = ok && delaunay_test(t, g_threads).is_delaunay;
    }
    ok = ok && secs < 60;
    std::ostringstream d;
    d << "dim-3 enumeration: 1 triangulation, 6 unimodular classes, Delaunay, "
      << (int)secs << "s";
    report(1, ok, d.str());
}

// ---------------------------------------------------------------- 2 -------

void criterion2() {
    auto t0 = Clock::now();
    int rc = run_cli("enumerate --dim 4 --out " + g_work + "/enum4", "enum4.log");
    double secs = elapsed(t0);
    bool ok = rc == 0;
    std::string audit = slurp(g_work + "/enum4/audit.txt");
    ok = ok && audit.find("triangulations 4\n") != std::string::npos;
    ok = ok && audit.find("dead_ends 0\n") != std::string::npos;
    int delaunay = 0, non_cs_non_delaunay = 0;
    for (int i = 1; i <= 4 && ok; ++i) {
        Complex t = read_triangulation(g_work + "/enum4/tri_" + std::to_string(i) + ".ptri");
        ok = t.classes.size() == 24;
        for (const SimplexClass& c : t.classes) ok = ok && c.volume == 1;
        bool del = delaunay_test(t, g_threads).is_delaunay;
        if (del) ++delaunay;
        if (!del && !is_centrally_symmetric(t)) ++non_cs_non_delaunay;
    }
    ok = ok && delaunay == 3 && non_cs_non_delaunay == 1 && secs < 1800;
    std::ostringstream d;
    d << "dim-4 enumeration: 4 triangulations of 24 unimodular classes, 3 Delaunay, "
         "red-triangular not centrally symmetric, 0 dead ends, "
      << (int)secs << "s";
    report(2, ok, d.str());
}

// ---------------------------------------------------------------- 3 -------

void criterion3() {
    std::vector<Point> v{Point::zero(4)};
    for (int i = 0; i < 4; ++i) v.push_back(Point::unit(4, i));
    CompatCache cache;
    NeighborResult r = neighbor_candidates(Simplex(4, v), 0, NeighborMode::Search, 4, &cache);
    std::set<Point> apexes;
    for (const NeighborCandidate& c : r.candidates) apexes.insert(c.apex);
    std::set<Point> expect;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            Point p = Point::zero(4);
            p.x[i] = p.x[j] = 1;
            expect.insert(p);  // permutations of (1,1,0,0)
            Point q{1, 1, 1, 1};
            q.x[i] = -1;
            expect.insert(q);  // permutations of (1,1,1,-1)
        }
    bool ok = apexes == expect && apexes.size() == 10;
    report(3, ok, "dim-4 search-mode neighbors: exactly the 10 apexes (6 of (1,1,0,0), 4 of (1,1,1,-1))");
}

// ---------------------------------------------------------------- 4 -------

void criterion4() {
    auto t0 = Clock::now();
    int rc = run_cli("thm61 --kmax 50", "thm61.log");
    double secs = elapsed(t0);
    bool ok = rc == 0 && secs < 300;
    std::ostringstream d;
    d << "infinite-neighbor harness: compatible and facet-adjacent for k = 0..50, " << (int)secs
      << "s";
    report(4, ok, d.str());
}

// ---------------------------------------------------------------- 5 -------

std::vector<Complex> g_archive;  // shared with criteria 6 and 8
std::vector<MemberInfo> g_info;

void criterion5() {
    fs::create_directories(g_work + "/dim5_archive");
    if (!fs::exists(g_work + "/seed5.ptri")) {
        if (run_cli("seed --freudenthal --dim 5 --out " + g_work + "/seed5.ptri", "seed5.log")) {
            report(5, false, "could not write the dim-5 seed");
            return;
        }
    }
    auto t0 = Clock::now();
    int rc = run_cli("closure --seed " + g_work + "/seed5.ptri --checkpoint " + g_work +
                         "/closure.ckpt --out " + g_work + "/dim5_archive",
                     "closure.log");
    double secs = elapsed(t0);
    if (rc != 0) {
        report(5, false, "closure run failed");
        return;
    }
    g_archive = read_archive_dir(g_work + "/dim5_archive");
    bool ok = g_archive.size() == 950;

    // classify via the CLI surface
    run_cli("classify " + g_work + "/dim5_archive", "classify.log");
    std::string cls = slurp(g_work + "/classify.log");
    bool classify_line =
        cls.find("950 total, 222 Delaunay, 23 centrally symmetric non-Delaunay") !=
        std::string::npos;

    // library cross-check with the cached per-member stats
    g_info = archive_info(g_archive);
    long delaunay = 0, cs_nd = 0, pg720 = 0;
    long max_pg = 0, vol3_members = 0;
    for (size_t i = 0; i < g_info.size(); ++i) {
        if (g_info[i].delaunay) ++delaunay;
        if (g_info[i].cs && !g_info[i].delaunay) ++cs_nd;
        if (g_info[i].pg == 720) ++pg720;
        max_pg = std::max(max_pg, g_info[i].pg);
        if (g_info[i].maxvol > 2) ++vol3_members;
    }
    ok = ok && classify_line && delaunay == 222 && cs_nd == 23;

    // adjacency encodings against the five pairs of the classification list
    std::vector<AdjacencyCode> codes = adjacency_classification(g_archive);
    std::set<AdjacencyCode> expect;
    expect.insert(canonical_adjacency_code({-1, 1, 1, 0, 0, 0}, 0));
    expect.insert(canonical_adjacency_code({-1, -1, 1, 1, 1, 0}, 0));
    expect.insert(canonical_adjacency_code({-1, -1, -1, 1, 1, 2}, 0));
    expect.insert(canonical_adjacency_code({-2, -1, 1, 1, 1, 1}, 1));
    expect.insert(canonical_adjacency_code({-1, -1, -1, -1, 2, 3}, 0));
    std::set<AdjacencyCode> found(codes.begin(), codes.end());
    bool adj_exact = found == expect;
    bool adj_superset = true;
    for (const AdjacencyCode& c : expect) adj_superset = adj_superset && found.count(c);

    // partial-progress prefix property: a fresh bounded run writes a prefix
    // of the final archive
    fs::path tmp = fs::path(g_work) / "prefix_probe";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    run_cli("closure --seed " + g_work + "/seed5.ptri --checkpoint " + (tmp / "c.ckpt").string() +
                " --max-nodes 3 --out " + (tmp / "arch").string(),
            "prefix.log");
    bool prefix_ok = true;
    {
        std::vector<Complex> part = read_archive_dir((tmp / "arch").string());
        prefix_ok = !part.empty() && part.size() <= g_archive.size();
        for (size_t i = 0; i < part.size() && prefix_ok; ++i)
            prefix_ok = serialize(part[i]) == serialize(g_archive[i]);
    }
    ok = ok && prefix_ok;

    std::ostringstream d;
    d << "dim-5 closure terminated: " << g_archive.size() << " classes, " << delaunay
      << " Delaunay, " << cs_nd << " CS non-Delaunay, prefix property "
      << (prefix_ok ? "ok" : "VIOLATED") << ", "
      << (secs > 5 ? "(resumed/ran " + std::to_string((long)secs) + "s)" : "(cached)");
    report(5, ok, d.str());

    // Literal sub-checks from the criterion text, reported as their own
    // lines. Each red one is analyzed in the decisions log: the artifact
    // itself falsifies them (a fully verified member carries one volume-3
    // simplex and contributes a sixth adjacency pair; the seed's point group
    // has order 1440 = 2 * 6!).
    std::ostringstream d2;
    d2 << "dim-5 closure, literal sub-check: all volumes in {1,2}: members exceeding 2: "
       << vol3_members << " (member 950: one volume-3 simplex, independently re-verified)";
    report(5, vol3_members == 0, d2.str());
    std::ostringstream d3;
    d3 << "dim-5 closure, literal sub-check: exactly the 5 adjacency pairs: found "
       << codes.size() << "; the five published ones " << (adj_superset ? "all present" : "MISSING");
    report(5, adj_exact, d3.str());
    std::ostringstream d4;
    d4 << "dim-5 closure, literal sub-check: max point-group order == 720: found max " << max_pg
       << "; members with order exactly 720: " << pg720;
    report(5, max_pg == 720, d4.str());
}

// ---------------------------------------------------------------- 6 -------

std::string constraint_signature(const RegularitySystem& sys,
                                 const RegularitySystem::Constraint& con) {
    std::vector<std::pair<Point, std::string>> terms;
    for (const auto& [v, coef] : con.terms) terms.push_back({sys.vertices[v], to_string(coef)});
    std::sort(terms.begin(), terms.end());
    std::string sig = to_string(con.rhs) + "#";
    for (auto& [p, c] : terms) sig += to_string(p) + "*" + c + ";";
    return sig;
}

void criterion6() {
    if (g_archive.size() != 950 || g_info.size() != g_archive.size()) {
        report(6, false, "non-regularity search skipped: closure archive unavailable");
        return;
    }
    // scan order: non-Delaunay members; those containing the adjacency pair
    // seen only outside Delaunay triangulations first
    AdjacencyCode exotic = canonical_adjacency_code({-1, -1, -1, -1, 2, 3}, 0);
    std::vector<int> order;
    for (int pass = 0; pass < 2; ++pass)
        for (size_t i = 0; i < g_archive.size(); ++i) {
            if (g_info[i].delaunay) continue;
            std::vector<Complex> one{g_archive[i]};
            bool has_exotic = false;
            for (const auto& c : adjacency_classification(one))
                if (c == exotic) has_exotic = true;
            if (has_exotic == (pass == 0)) order.push_back((int)i);
        }

    std::string cache_path = g_work + "/regularity_scan.txt";
    std::map<int, int> scanned;  // member -> last ladder step certified, or -1
    {
        std::ifstream in(cache_path);
        int i, f;
        while (in >> i >> f) scanned[i] = f;
    }
    std::ofstream cache(cache_path, std::ios::app);

    // certificate hunt on nested sub-boxes of the radius-1 selection; a
    // Farkas certificate of a sub-box system extends by zeros to the full
    // radius-1 system (its constraints are a subset) and is re-verified there
    const int radius = 1;
    int found = -1, found_step = -1;
    long cert_size = 0, full_constraints = 0;
    for (int idx : order) {
        auto it = scanned.find(idx);
        if (it != scanned.end()) {
            if (it->second >= 0 && found < 0) {
                found = idx;
                found_step = it->second;
                break;
            }
            continue;
        }
        const Complex& t = g_archive[idx];
        int cert_step = -1;
        std::vector<Rat> sub_farkas;
        RegularitySystem sub_sys;
        for (int step = 1; step <= t.n && cert_step < 0; ++step) {
            Point lo = Point::zero(t.n), hi = Point::zero(t.n);
            for (int k = 0; k < t.n; ++k) {
                lo.x[k] = k < step ? -1 : 0;
                hi.x[k] = 1;
            }
            try {
                RegularityProbe p = nonregularity_probe(t, lo, hi, 4000);
                if (!p.feasible) {
                    cert_step = step;
                    sub_farkas = std::move(p.farkas);
                    sub_sys = std::move(p.sys);
                }
            } catch (const error&) {
                // iteration cap: inconclusive at this scale
            }
        }
        cache << idx << " " << cert_step << "\n" << std::flush;
        if (cert_step < 0) continue;

        // pad onto the full radius-1 system and re-verify exactly
        RegularitySystem full = build_regularity_system(t, radius);
        std::map<std::string, int> index;
        for (size_t c = 0; c < full.constraints.size(); ++c)
            index[constraint_signature(full, full.constraints[c])] = (int)c;
        std::vector<Rat> farkas(full.constraints.size(), Rat(0));
        bool mapped = true;
        for (size_t c = 0; c < sub_sys.constraints.size(); ++c) {
            if (sub_farkas[c] == 0) continue;
            auto fit = index.find(constraint_signature(sub_sys, sub_sys.constraints[c]));
            if (fit == index.end()) {
                mapped = false;
                break;
            }
            farkas[fit->second] += sub_farkas[c];
        }
        if (!mapped) continue;
        std::map<Point, Rat> combo;
        Rat rhs = 0;
        long support = 0;
        for (size_t c = 0; c < full.constraints.size(); ++c) {
            if (farkas[c] == 0) continue;
            if (farkas[c] < 0) { mapped = false; break; }
            ++support;
            for (const auto& [v, coef] : full.constraints[c].terms)
                combo[full.vertices[v]] += farkas[c] * Rat(coef);
            rhs += farkas[c] * Rat(full.constraints[c].rhs);
        }
        for (auto& [p, x] : combo) mapped = mapped && x == 0;
        if (!mapped || rhs <= 0) continue;

        std::ostringstream cert;
        cert << "member " << idx + 1 << "\nradius " << radius << "\nsub_box_steps " << cert_step
             << "\nfull_system_constraints " << full.constraints.size() << "\nfull_system_points "
             << full.vertices.size() << "\ncertificate_support " << support
             << "\ncombined_rhs " << to_string(rhs) << "\nfarkas_nonzero";
        for (size_t c = 0; c < full.constraints.size(); ++c)
            if (farkas[c] != 0) cert << " " << c << ":" << to_string(farkas[c]);
        cert << "\n";
        write_file(g_work + "/nonregular_certificate.txt", cert.str());
        found = idx;
        found_step = cert_step;
        cert_size = support;
        full_constraints = (long)full.constraints.size();
        break;
    }
    std::ostringstream d;
    if (found >= 0) {
        d << "non-regularity: member " << found + 1
          << " certified non-regular by LP infeasibility at radius " << radius;
        if (cert_size)
            d << " (certificate support " << cert_size << " of " << full_constraints
              << " constraints, found at sub-box step " << found_step
              << ", re-verified exactly against the full system)";
        else
            d << " (cached)";
    } else {
        d << "non-regularity: no certificate found at radius " << radius << " over "
          << order.size() << " non-Delaunay members";
    }
    report(6, found >= 0, d.str());
}

// ---------------------------------------------------------------- 7 -------

void criterion7() {
    auto t0 = Clock::now();
    QuadForm a(3);
    a.set(0, 0, 4);
    a.set(1, 1, 5);
    a.set(2, 2, 6);
    a.set(0, 1, 1);
    a.set(1, 2, 1);
    a.set(0, 2, frac(1, 2));
    write_form(g_work + "/generic3.qform", a);
    int rc = run_cli("refine --tiling cube --dim 3 --form " + g_work + "/generic3.qform --out " +
                         g_work + "/refined3.ptri",
                     "refine3.log");
    bool ok = rc == 0;
    if (ok) {
        rc = run_cli("iso " + g_work + "/refined3.ptri " + g_work + "/enum3/tri_1.ptri",
                     "refine_iso.log");
        ok = rc == 0;
    }
    double secs = elapsed(t0);
    ok = ok && secs < 60;
    std::ostringstream d;
    d << "cube refinement in dim 3 is isomorphic to the unique triangulation, " << (int)secs
      << "s";
    report(7, ok, d.str());
}

// ---------------------------------------------------------------- 8 -------

void criterion8() {
    std::mt19937_64 rng(2026);
    bool ok = true;
    std::ostringstream fail;

    // flip involution on 100 random flips across dims 2..5
    {
        CompatCache cache;
        int flips_done = 0;
        auto involution_walk = [&](Complex t, int steps) {
            for (int s = 0; s < steps; ++s) {
                std::vector<FlipSpec> specs = find_flips(t, g_threads);
                if (specs.empty()) return;
                const FlipSpec& spec = specs[rng() % specs.size()];
                Complex next = apply_flip(t, spec, ApplyMode::Structural, &cache, g_threads);
                Complex back = apply_flip(next, spec.inverse(), ApplyMode::Structural, &cache,
                                          g_threads);
                bool same = back.classes.size() == t.classes.size();
                for (const SimplexClass& c : back.classes) same = same && t.has(c.key);
                if (!same) {
                    ok = false;
                    fail << "involution failed in dim " << t.n << "; ";
                    return;
                }
                ++flips_done;
                t = std::move(next);
            }
        };
        involution_walk(freudenthal_seed(2), 30);
        involution_walk(freudenthal_seed(3), 30);
        involution_walk(freudenthal_seed(4), 25);
        if (!g_archive.empty()) {
            involution_walk(g_archive[0], 8);
            involution_walk(g_archive[g_archive.size() / 2], 7);
        } else {
            involution_walk(freudenthal_seed(5), 15);
        }
        if (flips_done < 100) {
            ok = false;
            fail << "only " << flips_done << " involution flips exercised; ";
        }
    }

    // volume identity on every stored triangulation
    {
        std::vector<Complex> stored;
        for (int n = 2; n <= 5; ++n) stored.push_back(freudenthal_seed(n));
        for (const auto& e : {"/enum3", "/enum4"})
            if (fs::exists(g_work + e))
                for (const Complex& t : read_archive_dir(g_work + e)) stored.push_back(t);
        Int nf;
        for (const Complex& t : stored) {
            nf = 1;
            for (int i = 2; i <= t.n; ++i) nf *= i;
            if (t.volume_sum() != nf) {
                ok = false;
                fail << "volume identity failed on a stored triangulation; ";
            }
        }
        for (const Complex& t : g_archive)
            if (t.volume_sum() != 120) {
                ok = false;
                fail << "volume identity failed on an archive member; ";
                break;
            }
    }

    // regulator linearity and circumsphere-sign agreement, 50 instances
    {
        auto rand_point = [&](int n, int64_t lo, int64_t hi) {
            Point p = Point::zero(n);
            std::uniform_int_distribution<int64_t> d(lo, hi);
            for (int i = 0; i < n; ++i) p.x[i] = d(rng);
            return p;
        };
        int done = 0;
        while (done < 50) {
            int n = 2 + (int)(rng() % 2);
            std::vector<Point> verts;
            for (int i = 0; i <= n; ++i) verts.push_back(rand_point(n, -3, 3));
            Simplex s(n, verts);
            if (simplex_volume(s) == 0) continue;
            Point w = rand_point(n, -3, 3);
            bool vertex = false;
            for (const Point& p : verts) vertex = vertex || p == w;
            if (vertex) continue;
            ++done;
            Regulator reg = voronoi_regulator(s, w);
            // linearity
            QuadForm qa(n), qb(n);
            std::uniform_int_distribution<long> dc(-3, 3);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    qa.set(i, j, frac(dc(rng), 2));
                    qb.set(i, j, frac(dc(rng), 3));
                }
            QuadForm mix(n);
            Rat al = frac(2, 3), be = frac(-1, 2);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) mix.set(i, j, al * qa(i, j) + be * qb(i, j));
            if (reg.eval(mix) != al * reg.eval(qa) + be * reg.eval(qb)) {
                ok = false;
                fail << "regulator linearity failed; ";
            }
            // circumsphere sign via an independent rational solve
            {
                std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
                auto norm2 = [&](const Point& p) {
                    Rat r = 0;
                    for (int i = 0; i < n; ++i) r += Rat((long)p.x[i]) * Rat((long)p.x[i]);
                    return r;
                };
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j)
                        m[i][j] = Rat(2) * Rat((long)(verts[i + 1].x[j] - verts[0].x[j]));
                    m[i][n] = norm2(verts[i + 1]) - norm2(verts[0]);
                }
                for (int k = 0; k < n; ++k) {
                    int p = -1;
                    for (int i = k; i < n; ++i)
                        if (m[i][k] != 0) { p = i; break; }
                    std::swap(m[k], m[p]);
                    for (int i = 0; i < n; ++i) {
                        if (i == k || m[i][k] == 0) continue;
                        Rat f = m[i][k] / m[k][k];
                        for (int j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
                    }
                }
                Rat r2 = 0, d2 = 0;
                for (int i = 0; i < n; ++i) {
                    Rat c = m[i][n] / m[i][i];
                    Rat t0 = Rat((long)verts[0].x[i]) - c;
                    Rat tv = Rat((long)w.x[i]) - c;
                    r2 += t0 * t0;
                    d2 += tv * tv;
                }
                int oracle = d2 > r2 ? 1 : d2 < r2 ? -1 : 0;
                if (sign(reg.eval(QuadForm::identity(n))) != oracle) {
                    ok = false;
                    fail << "circumsphere sign disagreement; ";
                }
            }
        }
    }

    // canonicalization translation invariance
    {
        Complex t5 = g_archive.empty() ? freudenthal_seed(5) : g_archive[0];
        std::uniform_int_distribution<int64_t> d(-40, 40);
        for (int it = 0; it < 100; ++it) {
            const SimplexClass& c = t5.classes[rng() % t5.classes.size()];
            Point v = Point::zero(t5.n);
            for (int i = 0; i < t5.n; ++i) v.x[i] = d(rng);
            Simplex moved = c.rep;
            for (Point& p : moved.v) p = p + v;
            if (canonicalize(moved).key != c.key) {
                ok = false;
                fail << "canonicalization translation invariance failed; ";
                break;
            }
        }
    }

    // isomorphism reflexivity and symmetry
    {
        std::vector<Complex> sample;
        for (int n = 2; n <= 4; ++n) sample.push_back(freudenthal_seed(n));
        if (!g_archive.empty()) {
            sample.push_back(g_archive[0]);
            sample.push_back(g_archive[g_archive.size() - 1]);
        }
        IsoOptions io;
        io.threads = g_threads;
        for (const Complex& t : sample)
            if (!isomorphic(t, t, io)) {
                ok = false;
                fail << "isomorphism not reflexive; ";
            }
        Complex a = freudenthal_seed(3);
        std::vector<SimplexClass> mapped;
        for (const SimplexClass& c : a.classes) {
            Simplex s = c.rep;
            for (Point& p : s.v) {
                Point q = Point::zero(3);
                q.x[0] = p.x[0] + p.x[1];
                q.x[1] = -p.x[1];
                q.x[2] = p.x[2] + p.x[0];
                p = q;
            }
            mapped.push_back(canonicalize(s));
        }
        Complex b = make_complex(3, std::move(mapped));
        if (!isomorphic(a, b, io) || !isomorphic(b, a, io)) {
            ok = false;
            fail << "isomorphism not symmetric on a relabeled pair; ";
        }
    }

    // split symmetry groups on every enumerated triangulation
    {
        IsoOptions io;
        io.threads = 1;
        std::vector<Complex> enumerated;
        for (const auto& e : {"/enum3", "/enum4"})
            if (fs::exists(g_work + e))
                for (const Complex& t : read_archive_dir(g_work + e)) enumerated.push_back(t);
        for (const Complex& t : enumerated)
            if (!verify_split(t, io)) {
                ok = false;
                fail << "verify_split failed on an enumerated triangulation; ";
            }
        std::vector<char> split_ok(g_archive.size(), 1);
#pragma omp parallel for schedule(dynamic) num_threads(g_threads)
        for (long i = 0; i < (long)g_archive.size(); ++i)
            if (!verify_split(g_archive[i], io)) split_ok[i] = 0;
        for (size_t i = 0; i < g_archive.size(); ++i)
            if (!split_ok[i]) {
                ok = false;
                fail << "verify_split failed on archive member " << i + 1 << "; ";
            }
    }

    // volume bounds on every archive member
    {
        for (size_t i = 0; i < g_info.size(); ++i)
            if (!g_info[i].bounds) {
                ok = false;
                fail << "volume bound violated on member " << i + 1 << "; ";
            }
    }

    report(8, ok,
           ok ? "property suites: flip involution (100), volume identity, regulator linearity "
                "and circumsphere signs (50), canonicalization invariance, isomorphism "
                "reflexivity/symmetry, split symmetry groups, volume bounds"
              : fail.str());
}

}  // namespace

int main(int argc, char** argv) {
    g_cli = argc > 1 ? argv[1] : "./ptri";
    const char* wd = std::getenv("PTRI_WORK_DIR");
    g_work = argc > 2 ? argv[2] : (wd ? wd : "ptri_acceptance_work");
    fs::create_directories(g_work);
    g_work = fs::absolute(g_work).string();

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    std::cout << (g_failures ? "ACCEPTANCE: FAILURES = " + std::to_string(g_failures)
                             : "ACCEPTANCE: ALL CRITERIA PASS")
              << std::endl;
    return g_failures ? 1 : 0;
}
