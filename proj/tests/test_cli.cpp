#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "lgcat/cli.hpp"
#include "lgcat/problem.hpp"

using namespace lgcat;
using nlohmann::json;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path(std::filesystem::temp_directory_path() / name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

const char* kGood = R"(# one-variable example
[ring]
field = Q
vars = x
order = degrevlex

[potential]
f = x^2

[object E]
kind = mf
d0 = [["x"]]
d1 = [["x"]]

[object M]
kind = koszul
lo = -1
ranks = 1, 1
d[-1] = [["x"]]
h[0] = [["x"]]

[object P]
kind = presentation
m = [["x"]]
)";

const char* kCorrupt = R"([ring]
field = Q
vars = x

[potential]
f = x^2

[object E]
kind = mf
d0 = [["x"]]
d1 = [["x^2"]]
)";

json run_json(const std::vector<std::string>& args, int expect_code) {
    CliResult r = run_command(args);
    CHECK(r.exit_code == expect_code);
    return json::parse(r.output);
}

} // namespace

TEST_CASE("validate accepts a well-formed file") {
    TempFile f("lgcat_cli_good.lg", kGood);
    json rep = run_json({"validate", f.str()}, 0);
    CHECK(rep["schema"] == "lgcat-report/1");
    CHECK(rep["command"] == "validate");
    CHECK(rep["status"] == "ok");
}

TEST_CASE("validate rejects a corrupted factorization with exit code 1") {
    TempFile f("lgcat_cli_bad.lg", kCorrupt);
    CliResult r = run_command({"validate", f.str()});
    CHECK(r.exit_code == 1);
    json rep = json::parse(r.output);
    CHECK(rep["status"] == "invalid");
    // the note names the offending entry
    std::string notes = rep["notes"].dump();
    CHECK(notes.find("(0, 0)") != std::string::npos);
}

TEST_CASE("missing file and bad arguments give exit code 2") {
    CHECK(run_command({"validate", "/nonexistent/file.lg"}).exit_code == 2);
    CHECK(run_command({"no-such-command"}).exit_code == 2);
    CHECK(run_command({}).exit_code == 2);
}

TEST_CASE("resource caps surface as exit code 3") {
    // k over the cone x^2 + y^2 needs one syzygy step, so cap 0 must fail
    const char* cone = R"([ring]
field = Q
vars = x, y

[potential]
f = x^2 + y^2

[object P]
kind = presentation
m = [["x", "y"]]
)";
    TempFile f("lgcat_cli_cap.lg", cone);
    CliResult r =
        run_command({"stabilize", f.str(), "--object", "P", "--cap", "0"});
    CHECK(r.exit_code == 3);
    CHECK(json::parse(r.output)["status"] == "error");
    CHECK(run_command({"stabilize", f.str(), "--object", "P"}).exit_code == 0);
}

TEST_CASE("stable hom dims of the k-representative") {
    TempFile f("lgcat_cli_hom.lg", kGood);
    json rep = run_json(
        {"stable-hom", f.str(), "--source", "E", "--target", "E"}, 0);
    CHECK(rep["dims"]["even"] == 1);
    CHECK(rep["dims"]["odd"] == 1);
    // the folded koszul object agrees
    json rep2 = run_json(
        {"stable-hom", f.str(), "--source", "M", "--target", "M"}, 0);
    CHECK(rep2["dims"] == rep["dims"]);
}

TEST_CASE("milnor and ts-check from flags") {
    json rep = run_json({"milnor", "--vars", "x,y", "--f", "x^3 + y^2"}, 0);
    CHECK(rep["milnor"] == 2);
    rep = run_json({"milnor", "--vars", "x,y", "--f", "x^2*y"}, 0);
    CHECK(rep["milnor"] == "INFINITE");
    rep = run_json({"ts-check", "--vars", "x", "--f", "x^3", "--vars2", "y",
                    "--g", "y^3"}, 0);
    CHECK(rep["multiplicative"] == true);
    CHECK(rep["mu_sum"] == 4);
}

TEST_CASE("point-report over both fields") {
    for (const char* field : {"Q", "F101"}) {
        json rep = run_json({"point-report", "--field", field}, 0);
        CHECK(rep["dims"]["even"] == 1);
        CHECK(rep["dims"]["odd"] == 0);
        CHECK(rep["perfect"] == false);
        CHECK(rep["au_pattern_ok"] == true);
        CHECK(rep["torsion_free_ok"] == true);
    }
}

TEST_CASE("u-cone command on a point-case file") {
    const char* point = R"([ring]
field = Q
vars =

[potential]
f = 0

[object T]
kind = koszul
lo = 0
ranks = 1
)";
    TempFile f("lgcat_cli_pt.lg", point);
    json rep = run_json({"u-cone", f.str(), "--object", "T"}, 0);
    CHECK(rep["equal"] == true);
    // the same command on a positive-dimensional ring is a math error
    TempFile g("lgcat_cli_pos.lg", kGood);
    CHECK(run_command({"u-cone", g.str(), "--object", "M"}).exit_code == 1);
}

TEST_CASE("output is byte-identical across runs") {
    TempFile f("lgcat_cli_det.lg", kGood);
    std::vector<std::string> args = {"stable-hom", f.str(), "--source", "E",
                                     "--target", "M"};
    CliResult a = run_command(args);
    CliResult b = run_command(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
}

TEST_CASE("problem files round-trip through print and parse") {
    ProblemFile p = parse_problem(kGood);
    std::string printed = print_problem(p);
    ProblemFile again = parse_problem(printed);
    CHECK(p == again);
    CHECK(print_problem(again) == printed);
}

TEST_CASE("modulus flag overrides the field") {
    TempFile f("lgcat_cli_mod.lg", kGood);
    json rep = run_json({"stable-hom", f.str(), "--source", "E", "--target",
                         "E", "--modulus", "101"}, 0);
    CHECK(rep["dims"]["even"] == 1);
    CHECK(rep["dims"]["odd"] == 1);
}
