#include <doctest.h>

#include "fourient/problem.hpp"

using namespace fourient;

TEST_CASE("problem parsing") {
    const ProblemFile p = ProblemFile::parse_text(R"({
        "name": "demo",
        "vertices": 3,
        "edges": [[0, 1], [1, 2]],
        "B": [[0, 2]]
    })");
    CHECK(p.name == "demo");
    CHECK(p.vertices == 3);
    CHECK(p.edges == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(p.a_pairs.empty());
    CHECK(p.b_pairs == std::vector<VertexPair>{{0, 2}});
    CHECK(p.graph().edge_count() == 2);
}

TEST_CASE("problem errors name the offending field") {
    CHECK_THROWS_WITH_AS(ProblemFile::parse_text("{"), doctest::Contains("invalid JSON"),
                         problem_error);
    CHECK_THROWS_WITH_AS(ProblemFile::parse_text(R"({"edges": []})"),
                         doctest::Contains("vertices"), problem_error);
    CHECK_THROWS_WITH_AS(
        ProblemFile::parse_text(R"({"vertices": 2, "edges": [[0, 5]]})"),
        doctest::Contains("edges[0][1]"), problem_error);
    CHECK_THROWS_WITH_AS(
        ProblemFile::parse_text(R"({"vertices": 2, "edges": [], "A": [[0]]})"),
        doctest::Contains("A[0]"), problem_error);
    CHECK_THROWS_AS(ProblemFile::load("/nonexistent/file.json"), problem_error);
}

TEST_CASE("digest is stable and input-sensitive") {
    const char* text = R"({"vertices": 2, "edges": [[0, 1]]})";
    const std::string digest = ProblemFile::parse_text(text).digest();
    CHECK(digest == ProblemFile::parse_text(text).digest());
    CHECK(digest.size() == 16);
    CHECK(digest != ProblemFile::parse_text(R"({"vertices": 2, "edges": [[1, 0]]})").digest());
}

TEST_CASE("solid spec parsing") {
    CHECK(parse_solid_spec("none", 4).mask == EdgeMask{0});
    CHECK(parse_solid_spec("all", 4).mask == EdgeMask{0b1111});
    CHECK_FALSE(parse_solid_spec("every", 4).mask.has_value());
    CHECK(parse_solid_spec("0,2", 4).mask == EdgeMask{0b101});
    CHECK(parse_solid_spec("3", 4).mask == EdgeMask{0b1000});
    CHECK_THROWS_AS(parse_solid_spec("4", 4), problem_error);
    CHECK_THROWS_AS(parse_solid_spec("x", 4), problem_error);
    CHECK_THROWS_AS(parse_solid_spec("1,,2", 4), problem_error);
}
