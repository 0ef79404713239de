#include <filesystem>

#include "doctest.h"
#include "ptri/enumerate.hpp"
#include "ptri/io.hpp"
#include "ptri/refine.hpp"

using namespace ptri;

TEST_CASE("serialize format and round trip") {
    Complex t = freudenthal_seed(3);
    std::string text = serialize(t);
    CHECK(text.substr(0, 7) == "ptri 1\n");
    CHECK(text.find("dim 3\n") != std::string::npos);
    CHECK(text.find("classes 6\n") != std::string::npos);
    Complex back = parse(text);
    CHECK(back.n == t.n);
    REQUIRE(back.classes.size() == t.classes.size());
    for (size_t i = 0; i < t.classes.size(); ++i) CHECK(back.classes[i].key == t.classes[i].key);
    CHECK(serialize(back) == text);
}

TEST_CASE("round trip of the dim-5 seed is byte-identical") {
    Complex t = freudenthal_seed(5);
    CHECK(serialize(parse(serialize(t))) == serialize(t));
}

TEST_CASE("parse errors are distinct") {
    CHECK_THROWS_AS(parse("nonsense\n"), parse_error);
    try {
        parse("nonsense\n");
    } catch (const parse_error& e) {
        CHECK(e.kind == parse_error::Kind::BadHeader);
    }
    // wrong vertex count
    try {
        parse("ptri 1\ndim 2\nclasses 1\nsimplex\n0 0\n1 0 0\n0 1\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.kind == parse_error::Kind::BadVertexCount);
    }
    // degenerate simplex
    try {
        parse("ptri 1\ndim 2\nclasses 1\nsimplex\n0 0\n1 1\n2 2\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.kind == parse_error::Kind::Degenerate);
    }
}

TEST_CASE("parser accepts volume-deficient files; validate rejects them") {
    std::string text = "ptri 1\ndim 2\nclasses 1\nsimplex\n0 0\n1 0\n0 1\n";
    Complex t = parse(text);
    CHECK(t.classes.size() == 1);
    CHECK(!validate(t).valid);
}

TEST_CASE("form file round trip") {
    QuadForm a(3);
    a.set(0, 0, 2);
    a.set(0, 1, frac(1, 2));
    a.set(1, 1, 3);
    a.set(2, 2, frac(7, 3));
    QuadForm b = parse_form(serialize_form(a));
    CHECK(b == a);
}

TEST_CASE("checkpoint round trip and closure resume determinism") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ptri_test_ckpt";
    fs::create_directories(dir);
    std::string ckpt = (dir / "closure.ckpt").string();
    fs::remove(ckpt);

    CompatCache cache;
    // full run, no checkpoint
    ClosureOptions base;
    base.threads = 2;
    base.cache = &cache;
    ClosureResult full = flip_closure(freudenthal_seed(4), base);

    // interrupted run: budget 2 nodes, checkpoint every node
    ClosureOptions part = base;
    part.max_nodes = 2;
    part.checkpoint_every = 1;
    part.checkpoint_path = ckpt;
    ClosureResult first = flip_closure(freudenthal_seed(4), part);
    CHECK(first.budget_exhausted);
    REQUIRE(checkpoint_exists(ckpt));

    // resume to completion
    ClosureOptions rest = base;
    rest.checkpoint_path = ckpt;
    ClosureResult resumed = flip_closure(freudenthal_seed(4), rest);
    CHECK(!resumed.budget_exhausted);
    REQUIRE(resumed.archive.size() == full.archive.size());
    for (size_t i = 0; i < full.archive.size(); ++i)
        CHECK(serialize(resumed.archive[i]) == serialize(full.archive[i]));

    // partial archive is a prefix of the final one
    CheckpointData cp = read_checkpoint(ckpt);
    REQUIRE(cp.archive.size() <= full.archive.size());
    fs::remove(ckpt);

    // archive directory io
    write_archive_dir((dir / "arch").string(), full.archive);
    std::vector<Complex> loaded = read_archive_dir((dir / "arch").string());
    REQUIRE(loaded.size() == full.archive.size());
    for (size_t i = 0; i < loaded.size(); ++i)
        CHECK(serialize(loaded[i]) == serialize(full.archive[i]));
    fs::remove_all(dir);
}
