#include "ptri/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace ptri {

std::string serialize(const Complex& t) {
    std::ostringstream out;
    out << "ptri 1\n";
    out << "dim " << t.n << "\n";
    out << "classes " << t.classes.size() << "\n";
    for (const SimplexClass& c : t.classes) {
        out << "simplex\n";
        for (const Point& p : c.rep.v) {
            for (int i = 0; i < t.n; ++i) out << (i ? " " : "") << p.x[i];
            out << "\n";
        }
    }
    return out.str();
}

namespace {

// reads one triangulation from the stream; returns false on clean EOF
bool parse_stream(std::istream& in, Complex& out) {
    std::string line;
    do {
        if (!std::getline(in, line)) return false;
    } while (line.empty());
    if (line != "ptri 1")
        throw parse_error(parse_error::Kind::BadHeader, "expected 'ptri 1', got '" + line + "'");
    int n = -1;
    long m = -1;
    if (!std::getline(in, line) || sscanf(line.c_str(), "dim %d", &n) != 1 || n < 1 ||
        n > kMaxDim)
        throw parse_error(parse_error::Kind::BadHeader, "bad dim line");
    if (!std::getline(in, line) || sscanf(line.c_str(), "classes %ld", &m) != 1 || m < 0)
        throw parse_error(parse_error::Kind::BadHeader, "bad classes line");

    std::vector<SimplexClass> classes;
    for (long c = 0; c < m; ++c) {
        if (!std::getline(in, line) || line != "simplex")
            throw parse_error(parse_error::Kind::BadFormat, "expected 'simplex' line");
        Simplex s(n, {});
        for (int v = 0; v <= n; ++v) {
            if (!std::getline(in, line))
                throw parse_error(parse_error::Kind::BadVertexCount, "truncated simplex block");
            std::istringstream ls(line);
            Point p = Point::zero(n);
            long long coord;
            int got = 0;
            while (ls >> coord) {
                if (got >= n)
                    throw parse_error(parse_error::Kind::BadVertexCount,
                                      "too many coordinates on a vertex line");
                p.x[got++] = coord;
            }
            if (got != n)
                throw parse_error(parse_error::Kind::BadVertexCount,
                                  "expected " + std::to_string(n) + " coordinates");
            s.v.push_back(p);
        }
        try {
            classes.push_back(canonicalize(s));
        } catch (const error& e) {
            throw parse_error(parse_error::Kind::Degenerate, e.what());
        }
    }
    out = make_complex(n, std::move(classes));
    return true;
}

}  // namespace

Complex parse(const std::string& text) {
    std::istringstream in(text);
    Complex t;
    if (!parse_stream(in, t))
        throw parse_error(parse_error::Kind::BadHeader, "empty input");
    return t;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw error("cannot write " + tmp);
        out << content;
    }
    fs::rename(tmp, path);
}

Complex read_triangulation(const std::string& path) { return parse(read_file(path)); }

void write_triangulation(const std::string& path, const Complex& t) {
    write_file(path, serialize(t));
}

std::string serialize_form(const QuadForm& a) {
    std::ostringstream out;
    out << "qform 1\ndim " << a.dim() << "\n";
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) out << (j ? " " : "") << to_string(a(i, j));
        out << "\n";
    }
    return out.str();
}

QuadForm parse_form(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "qform 1")
        throw parse_error(parse_error::Kind::BadHeader, "expected 'qform 1'");
    int n = -1;
    if (!std::getline(in, line) || sscanf(line.c_str(), "dim %d", &n) != 1 || n < 1)
        throw parse_error(parse_error::Kind::BadHeader, "bad dim line");
    QuadForm a(n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw parse_error(parse_error::Kind::BadFormat, "truncated form");
        std::istringstream ls(line);
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(ls >> tok)) throw parse_error(parse_error::Kind::BadFormat, "short form row");
            Rat q(tok);
            q.canonicalize();
            if (i <= j) a.set(i, j, q);
            else if (a(i, j) != q)
                throw parse_error(parse_error::Kind::BadFormat, "form not symmetric");
        }
    }
    return a;
}

QuadForm read_form(const std::string& path) { return parse_form(read_file(path)); }
void write_form(const std::string& path, const QuadForm& a) { write_file(path, serialize_form(a)); }

bool checkpoint_exists(const std::string& path) { return fs::exists(path); }

void write_checkpoint(const std::string& path, const CheckpointData& data) {
    std::ostringstream out;
    for (const Complex& t : data.archive) out << serialize(t);
    out << "queue\n";
    for (int q : data.queue) out << q << "\n";
    write_file(path, out.str());
}

CheckpointData read_checkpoint(const std::string& path) {
    std::string text = read_file(path);
    size_t qpos = text.find("\nqueue\n");
    if (qpos == std::string::npos) throw error("checkpoint: missing queue separator");
    std::istringstream archive_in(text.substr(0, qpos + 1));
    CheckpointData data;
    Complex t;
    while (parse_stream(archive_in, t)) data.archive.push_back(std::move(t));
    std::istringstream queue_in(text.substr(qpos + 7));
    int idx;
    while (queue_in >> idx) {
        if (idx < 0 || idx >= (int)data.archive.size())
            throw error("checkpoint: queue index out of range");
        data.queue.push_back(idx);
    }
    return data;
}

void write_archive_dir(const std::string& dir, const std::vector<Complex>& archive) {
    fs::create_directories(dir);
    char name[64];
    for (size_t i = 0; i < archive.size(); ++i) {
        snprintf(name, sizeof(name), "member_%04zu.ptri", i + 1);
        write_triangulation((fs::path(dir) / name).string(), archive[i]);
    }
}

std::vector<Complex> read_archive_dir(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        std::string name = e.path().filename().string();
        if (name.size() > 5 && name.substr(name.size() - 5) == ".ptri") files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<Complex> out;
    for (const std::string& f : files) out.push_back(read_triangulation(f));
    return out;
}

}  // namespace ptri
