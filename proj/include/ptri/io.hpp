#pragma once

#include <string>
#include <vector>

#include "ptri/quadform.hpp"
#include "ptri/triangulation.hpp"

namespace ptri {

// Line-oriented exact-integer format:
//   ptri 1
//   dim N
//   classes M
// then M blocks, each the line "simplex" followed by N+1 lines of N
// space-separated integers (the canonical representative's sorted vertices),
// blocks in canonical class order. parse(serialize(t)) == t.
struct parse_error : error {
    enum class Kind { BadHeader, BadVertexCount, Degenerate, BadFormat };
    Kind kind;
    parse_error(Kind k, const std::string& msg) : error(msg), kind(k) {}
};

std::string serialize(const Complex& t);
Complex parse(const std::string& text);

Complex read_triangulation(const std::string& path);
void write_triangulation(const std::string& path, const Complex& t);

// quadratic form file: "qform 1", "dim N", then N rows of N rationals
std::string serialize_form(const QuadForm& a);
QuadForm parse_form(const std::string& text);
QuadForm read_form(const std::string& path);
void write_form(const std::string& path, const QuadForm& a);

// checkpoint: archive blocks back to back, a separator line "queue", then
// one pending archive index per line
struct CheckpointData {
    std::vector<Complex> archive;
    std::vector<int> queue;
};
bool checkpoint_exists(const std::string& path);
void write_checkpoint(const std::string& path, const CheckpointData& data);
CheckpointData read_checkpoint(const std::string& path);

// archive directory: member_0001.ptri, member_0002.ptri, ...
void write_archive_dir(const std::string& dir, const std::vector<Complex>& archive);
std::vector<Complex> read_archive_dir(const std::string& dir);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ptri
