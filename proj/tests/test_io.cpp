#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "eqsp/io.hpp"
#include "support/generators.hpp"

using namespace eqsp;
using nlohmann::json;

namespace {

const char* kGap1d = R"({
  "dim": 1,
  "simplex": [[0.0], [1.0]],
  "sets": [
    {"type": "vpolytope", "points": [[0.7], [1.0]]},
    {"type": "vpolytope", "points": [[0.0], [0.3]]}
  ]
})";

const char* kFaces2d = R"({
  "dim": 2,
  "simplex": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
  "sets": [
    {"type": "face", "index": 1},
    {"type": "face", "index": 2},
    {"type": "face", "index": 3}
  ]
})";

const char* kHellyNeg = R"({
  "dim": 1,
  "simplex": [[0.0], [1.0]],
  "sets": [
    {"type": "vpolytope", "points": [[0.6], [1.0]]},
    {"type": "vpolytope", "points": [[0.0], [0.4]]},
    {"type": "vpolytope", "points": [[0.3], [0.7]]}
  ]
})";

std::string write_temp(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "eqsp_io_tests";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / name).string();
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

std::string run_to_string(const std::vector<std::string>& args, int expected_code) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    INFO("stderr: ", err.str());
    CHECK(code == expected_code);
    return out.str();
}

}  // namespace

TEST_SUITE("io") {

    TEST_CASE("parsing a minimal instance") {
        const Instance inst = parse_instance(kGap1d);
        CHECK(inst.dim == 1);
        REQUIRE(inst.sets.size() == 2);
        CHECK(inst.sets[0].type == "vpolytope");
        CHECK(inst.sets[0].points[0][0] == doctest::Approx(0.7));
        const BuiltInstance built = build_instance(inst);
        CHECK(built.ambient.dim() == 1);
        CHECK(built.bodies[1]->kind() == "vpolytope");
    }

    TEST_CASE("face-hull descriptors expand to the face plus extras") {
        const char* doc = R"({
          "dim": 2,
          "simplex": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
          "sets": [{"type": "face-hull", "index": 1,
                    "extras": [[0.3333333333333333, 0.3333333333333333]]}]
        })";
        const BuiltInstance built = build_instance(parse_instance(doc));
        REQUIRE(built.bodies.size() == 1);
        // Distance zero at the barycenter and at the face, positive at vertex 0.
        CHECK(built.bodies[0]->distance(testsupport::vec({1.0 / 3, 1.0 / 3})) <= 1e-9);
        CHECK(built.bodies[0]->distance(testsupport::vec({0.0, 1.0})) <= 1e-12);
        CHECK(built.bodies[0]->distance(testsupport::vec({0.0, 0.0})) > 0.1);
    }

    TEST_CASE("validation errors carry field context") {
        CHECK_THROWS_AS(parse_instance("{not json"), ParseError);
        CHECK_THROWS_AS(
            parse_instance(R"({"dim": 1, "simplex": [[0],[1]], "sets": [{"type": "bogus"}]})"),
            ValidationError);
        // Degenerate simplex.
        CHECK_THROWS_AS(parse_instance(R"({"dim": 2,
            "simplex": [[0,0],[1,0],[2,0]],
            "sets": []})"),
                        ValidationError);
        // Wrong arity.
        CHECK_THROWS_AS(parse_instance(R"({"dim": 2,
            "simplex": [[0,0],[1,0],[0,1]],
            "sets": [{"type": "vpolytope", "points": [[0.1]]}]})"),
                        ValidationError);
        // Generator outside the simplex.
        CHECK_THROWS_AS(parse_instance(R"({"dim": 1, "simplex": [[0],[1]],
            "sets": [{"type": "vpolytope", "points": [[2.0]]}]})"),
                        ValidationError);
        // Face index out of range.
        CHECK_THROWS_AS(parse_instance(R"({"dim": 1, "simplex": [[0],[1]],
            "sets": [{"type": "face", "index": 3}]})"),
                        ValidationError);
    }

    TEST_CASE("instances round-trip through serialization") {
        const char* zoo = R"({
          "dim": 2,
          "simplex": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
          "sets": [
            {"type": "vpolytope", "points": [[0.1, 0.1], [0.5, 0.25]]},
            {"type": "ball", "center": [0.25, 0.25], "radius": 0.125},
            {"type": "halfspaces", "normals": [[-1.0, 0.0]], "offsets": [-0.05]},
            {"type": "face", "index": 2},
            {"type": "face-hull", "index": 3, "extras": [[0.125, 0.625]]}
          ],
          "assignment": [4, 4, 5]
        })";
        const Instance inst = parse_instance(zoo);
        REQUIRE(inst.assignment.size() == 3);
        CHECK(inst.assignment[0] == 3);
        const Instance again = parse_instance(serialize_instance(inst));
        CHECK(again == inst);
    }

    TEST_CASE("solve command on the gap fixture") {
        const std::string path = write_temp("gap1d.json", kGap1d);
        const std::string text = run_to_string({"solve", "--instance", path}, 0);
        const json doc = json::parse(text);
        CHECK(std::abs(doc["eps0"].get<double>() - 0.2) <= 1e-6);
        CHECK(std::abs(doc["v"][0].get<double>() - 0.5) <= 1e-6);
        CHECK(doc["covering"].get<bool>() == false);
        CHECK(doc["distances"].size() == 2);

        // Deterministic byte-identical output.
        CHECK(run_to_string({"solve", "--instance", path}, 0) == text);
    }

    TEST_CASE("oracle command approximates the inradius from both sides") {
        const std::string path = write_temp("faces2d.json", kFaces2d);
        const std::string text =
            run_to_string({"oracle", "--instance", path, "--grid-depth", "256"}, 0);
        const json doc = json::parse(text);
        const double inradius = (2.0 - std::sqrt(2.0)) / 2.0;
        const double mesh = doc["mesh"].get<double>();
        CHECK(std::abs(doc["maximin"].get<double>() - inradius) <= mesh);
        CHECK(std::abs(doc["minimax"].get<double>() - inradius) <= mesh);
    }

    TEST_CASE("cover and boundary commands") {
        const std::string path = write_temp("faces2d_b.json", kFaces2d);
        const json cover = json::parse(run_to_string({"cover", "--instance", path}, 0));
        CHECK(cover["covered"].get<bool>() == false);
        CHECK(cover.contains("witness_uncovered"));
        const json boundary = json::parse(run_to_string({"boundary", "--instance", path}, 0));
        CHECK(boundary["covered"].get<bool>() == true);
        CHECK_FALSE(boundary.contains("witness_uncovered"));
    }

    TEST_CASE("helly command emits one-based counterexamples") {
        const std::string path = write_temp("helly_neg.json", kHellyNeg);
        const json doc = json::parse(run_to_string({"helly", "--instance", path}, 0));
        CHECK(doc["intersects"].get<bool>() == false);
        REQUIRE(doc.contains("counterexample"));
        CHECK(doc["counterexample"] == json::array({1, 2}));
    }

    TEST_CASE("homotopy command writes the summary and the curve") {
        const char* covers = R"({
          "dim": 1, "simplex": [[0.0], [1.0]],
          "sets": [
            {"type": "vpolytope", "points": [[0.0], [1.0]]},
            {"type": "vpolytope", "points": [[0.0], [1.0]]}
          ]
        })";
        const std::string path = write_temp("covers1d.json", covers);
        const std::string text =
            run_to_string({"homotopy", "--instance", path, "--t-samples", "8"}, 0);
        const auto newline = text.find('\n');
        const json doc = json::parse(text.substr(0, newline));
        CHECK(std::abs(doc["t0"].get<double>() - 0.5) <= 1e-4);
        CHECK(doc["delta0"].get<double>() >= 0.0);
        CHECK(text.substr(newline + 1).rfind("t,eps_t,v0\n", 0) == 0);

        // --out routes the curve to the file and keeps the summary on stdout.
        const std::string out_path = write_temp("curve.csv", "");
        const std::string with_file = run_to_string(
            {"homotopy", "--instance", path, "--t-samples", "8", "--out", out_path}, 0);
        CHECK(json::parse(with_file.substr(0, with_file.find('\n'))) == doc);
        std::ifstream csv(out_path);
        std::string header;
        std::getline(csv, header);
        CHECK(header == "t,eps_t,v0");
    }

    TEST_CASE("t0 command") {
        const char* covers = R"({
          "dim": 1, "simplex": [[0.0], [1.0]],
          "sets": [
            {"type": "vpolytope", "points": [[0.0], [1.0]]},
            {"type": "vpolytope", "points": [[0.0], [1.0]]}
          ]
        })";
        const std::string path = write_temp("covers1d_t0.json", covers);
        const json doc = json::parse(run_to_string({"t0", "--instance", path}, 0));
        CHECK(std::abs(doc["t0"].get<double>() - 0.5) <= 1e-4);
    }

    TEST_CASE("exit codes distinguish validation failures") {
        std::ostringstream out, err;
        CHECK(run_command({"solve", "--instance", "/nonexistent/x.json"}, out, err) == 1);
        const std::string degenerate = write_temp(
            "degenerate.json", R"({"dim": 2, "simplex": [[0,0],[1,0],[2,0]], "sets": []})");
        CHECK(run_command({"solve", "--instance", degenerate}, out, err) == 1);
        CHECK(run_command({"bogus-command"}, out, err) == 1);
        // solve requires exactly n+1 sets
        const std::string short_family = write_temp(
            "short.json", R"({"dim": 1, "simplex": [[0],[1]],
                              "sets": [{"type": "vpolytope", "points": [[0.0],[1.0]]}]})");
        CHECK(run_command({"solve", "--instance", short_family}, out, err) == 1);
    }

    TEST_CASE("solve --out writes the document to a file") {
        const std::string path = write_temp("gap1d_out.json", kGap1d);
        const auto dir = std::filesystem::temp_directory_path() / "eqsp_io_tests";
        const std::string out_path = (dir / "result.json").string();
        std::ostringstream out, err;
        REQUIRE(run_command({"solve", "--instance", path, "--out", out_path}, out, err) == 0);
        CHECK(out.str().empty());
        std::ifstream in(out_path);
        json doc;
        in >> doc;
        CHECK(std::abs(doc["eps0"].get<double>() - 0.2) <= 1e-6);
    }
}
