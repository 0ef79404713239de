#include "ptri/stats.hpp"

#include <algorithm>
#include <sstream>

#include "ptri/predicates.hpp"
#include "ptri/symmetry.hpp"

namespace ptri {

TriStats compute_stats(const Complex& t, const StatsOptions& opt) {
    TriStats s;
    s.dim = t.n;
    s.class_count = (long)t.classes.size();
    for (const SimplexClass& c : t.classes) s.volumes.push_back(c.volume);
    std::sort(s.volumes.begin(), s.volumes.end());
    s.facet_class_count = (long)facet_records(t).size();
    s.centrally_symmetric = is_centrally_symmetric(t);
    s.volume_bounds = volume_bounds_ok(t);
    if (opt.with_delaunay) s.delaunay = delaunay_test(t, opt.threads).is_delaunay;
    if (opt.with_point_group) {
        IsoOptions io;
        io.threads = opt.threads;
        s.point_group_order = stabilizer(t, io).point_group.order();
    }
    return s;
}

std::string stats_to_text(const TriStats& s) {
    std::ostringstream out;
    out << "dim " << s.dim << "\n";
    out << "classes " << s.class_count << "\n";
    out << "volumes";
    for (const Int& v : s.volumes) out << " " << to_string(v);
    out << "\n";
    out << "facet_classes " << s.facet_class_count << "\n";
    out << "centrally_symmetric " << (s.centrally_symmetric ? "yes" : "no") << "\n";
    out << "delaunay " << (s.delaunay ? "yes" : "no") << "\n";
    out << "point_group_order " << s.point_group_order << "\n";
    out << "volume_bounds " << (s.volume_bounds ? "ok" : "VIOLATED") << "\n";
    return out.str();
}

std::string stats_to_json(const TriStats& s) {
    std::ostringstream out;
    out << "{\"dim\":" << s.dim << ",\"classes\":" << s.class_count << ",\"volumes\":[";
    for (size_t i = 0; i < s.volumes.size(); ++i)
        out << (i ? "," : "") << to_string(s.volumes[i]);
    out << "],\"facet_classes\":" << s.facet_class_count
        << ",\"centrally_symmetric\":" << (s.centrally_symmetric ? "true" : "false")
        << ",\"delaunay\":" << (s.delaunay ? "true" : "false")
        << ",\"point_group_order\":" << s.point_group_order
        << ",\"volume_bounds\":" << (s.volume_bounds ? "true" : "false") << "}";
    return out.str();
}

}  // namespace ptri
