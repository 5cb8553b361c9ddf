#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support/test_util.hpp"

// End-to-end checks of the command-line driver, run against the built
// binary through a shell.

namespace fs = std::filesystem;

namespace {

#ifndef AHPRANK_CLI_PATH
#error "AHPRANK_CLI_PATH must be defined by the build"
#endif

const std::string kBin = AHPRANK_CLI_PATH;

std::string q(const std::string& s) { return "'" + s + "'"; }

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("ahprank_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string grades() { return testutil::fixture_path("grades-sample.csv"); }
std::string records() { return testutil::fixture_path("appendix-b-records.json"); }

} // namespace

TEST_CASE("rank writes the report bundle and prints the table") {
    TempDir tmp;
    const auto r = testutil::run_command(kBin + " rank --grades " + q(grades()) +
                                         " --records " + q(records()) +
                                         " --weights equal --reference-date 2016-01-15 --out " +
                                         q(tmp.path.string()));
    CAPTURE(r.err);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("GRASS") != std::string::npos);
    CHECK(r.out.find("rank") != std::string::npos);

    // report.json + 13 per-quality csv + final.csv at the top level.
    std::size_t top_level = 0;
    for (const auto& entry : fs::directory_iterator(tmp.path))
        if (entry.is_regular_file()) ++top_level;
    CHECK(top_level == 15);
    CHECK(fs::exists(tmp.path / "report.json"));
    CHECK(fs::exists(tmp.path / "installability.csv"));
    CHECK(fs::exists(tmp.path / "final.csv"));

    std::size_t svgs = 0;
    for (const auto& entry : fs::directory_iterator(tmp.path / "svg"))
        if (entry.is_regular_file()) ++svgs;
    CHECK(svgs == 14);
    CHECK(fs::exists(tmp.path / "svg" / "ahp_installability.svg"));
    CHECK(fs::exists(tmp.path / "svg" / "ahp_final.svg"));
}

TEST_CASE("rank exit codes follow the 0/1/2 contract") {
    TempDir tmp;
    SUBCASE("missing grades file is an io failure") {
        const auto r = testutil::run_command(kBin + " rank --grades /nonexistent/g.csv --out " +
                                             q(tmp.path.string()));
        CHECK(r.exit_code == 2);
    }
    SUBCASE("out-of-range grade is a validation failure with coordinates") {
        const fs::path bad = tmp.path / "bad.csv";
        std::ofstream(bad) << "name,group,installability\nA,desktop_gis,0\nB,desktop_gis,5\n";
        const auto r = testutil::run_command(kBin + " rank --grades " + q(bad.string()) +
                                             " --out " + q(tmp.path.string()));
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("(2,3)") != std::string::npos);
    }
    SUBCASE("strict mode fails on records violations, --no-strict continues") {
        const fs::path records_path = tmp.path / "r.json";
        std::ofstream(records_path)
            << R"([{"name": "A", "group": "desktop_gis", "answers": {"install.automated": "yes"}},
                   {"name": "B", "group": "desktop_gis", "answers": {}}])";
        const fs::path grades_path = tmp.path / "g.csv";
        std::ofstream(grades_path) << "name,group,installability\nA,desktop_gis,5\nB,desktop_gis,7\n";

        const auto strict = testutil::run_command(kBin + " rank --grades " + q(grades_path.string()) +
                                                  " --records " + q(records_path.string()) +
                                                  " --out " + q((tmp.path / "o1").string()));
        CHECK(strict.exit_code == 1);
        CHECK(strict.err.find("install.automated") != std::string::npos);

        const auto lax = testutil::run_command(kBin + " rank --no-strict --grades " +
                                               q(grades_path.string()) + " --records " +
                                               q(records_path.string()) + " --reference-date 2016-01-15 --out " +
                                               q((tmp.path / "o2").string()));
        CHECK(lax.exit_code == 0);
    }
}

TEST_CASE("rank runs are byte-identical under a pinned reference date") {
    TempDir tmp;
    const std::string common = kBin + " rank --grades " + q(grades()) +
                               " --weights equal --reference-date 2016-01-15 --out ";
    const fs::path a = tmp.path / "a", b = tmp.path / "b";
    CHECK(testutil::run_command(common + q(a.string())).exit_code == 0);
    CHECK(testutil::run_command(common + q(b.string())).exit_code == 0);

    std::size_t compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(a)) {
        if (!entry.is_regular_file()) continue;
        const fs::path relative = fs::relative(entry.path(), a);
        CHECK(testutil::read_file(entry.path().string()) ==
              testutil::read_file((b / relative).string()));
        ++compared;
    }
    CHECK(compared == 29); // 15 data files + 14 svg charts
}

TEST_CASE("weights file drives the aggregation") {
    TempDir tmp;
    const fs::path weights = tmp.path / "w.json";
    // Everything on installability; raw sum != 1 triggers the renormalize warning.
    std::ofstream out(weights);
    out << "{\"installability\": 3.0";
    for (const char* quality :
         {"correctness_verifiability", "reliability", "robustness", "performance", "usability",
          "maintainability", "reusability", "portability", "understandability", "interoperability",
          "transparency", "reproducibility"})
        out << ", \"" << quality << "\": 0.0";
    out << "}";
    out.close();

    const auto r = testutil::run_command(kBin + " rank --grades " + q(grades()) + " --weights " +
                                         q(weights.string()) +
                                         " --reference-date 2016-01-15 --out " +
                                         q(tmp.path.string()));
    CAPTURE(r.err);
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("renormalized") != std::string::npos);
    const std::string report = testutil::read_file((tmp.path / "report.json").string());
    CHECK(report.find("\"installability\": 1.000000") != std::string::npos);
    // With all weight on installability the final ranking is the
    // installability ranking: geopy and NumPy share the top grade.
    const std::string final_csv = testutil::read_file((tmp.path / "final.csv").string());
    CHECK(final_csv.find("geopy") < final_csv.find("GRASS"));
}

TEST_CASE("stats reproduces the published counts and writes stats.json") {
    TempDir tmp;
    const auto r = testutil::run_command(kBin + " stats --records " + q(records()) +
                                         " --reference-date 2016-01-15 --out " +
                                         q(tmp.path.string()));
    CAPTURE(r.err);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("open_source: 19/30") != std::string::npos);
    CHECK(r.out.find("dead: 9/30") != std::string::npos);
    CHECK(r.out.find("windows: 29/30") != std::string::npos);
    CHECK(r.out.find("cpp: 13/30") != std::string::npos);
    CHECK(fs::exists(tmp.path / "stats.json"));
}

TEST_CASE("stats on an empty records file reports zero counts") {
    TempDir tmp;
    const fs::path empty = tmp.path / "empty.json";
    std::ofstream(empty) << "[]";
    const auto r = testutil::run_command(kBin + " stats --records " + q(empty.string()) + " --out " +
                                         q(tmp.path.string()));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("open_source: 0/0") != std::string::npos);
}

TEST_CASE("validate reports violations and exit status") {
    TempDir tmp;
    SUBCASE("clean fixtures pass") {
        const auto r = testutil::run_command(kBin + " validate --records " + q(records()) +
                                             " --grades " + q(grades()));
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("0 violations") != std::string::npos);
    }
    SUBCASE("starred answer without note names the question") {
        const fs::path bad = tmp.path / "bad.json";
        std::ofstream(bad) << R"([{"name": "A", "group": "desktop_gis",
            "answers": {"install.automated": "yes"}}])";
        const auto r = testutil::run_command(kBin + " validate --records " + q(bad.string()));
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("install.automated") != std::string::npos);
    }
    SUBCASE("duplicate product row in the matrix") {
        const fs::path bad = tmp.path / "dup.csv";
        std::ofstream(bad) << "name,group,installability\nA,desktop_gis,5\nA,desktop_gis,6\n";
        const auto r = testutil::run_command(kBin + " validate --grades " + q(bad.string()));
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("duplicate product name") != std::string::npos);
    }
}

TEST_CASE("template export round-trips through a file") {
    TempDir tmp;
    const fs::path schema = tmp.path / "template.json";
    const auto r = testutil::run_command(kBin + " template export --out " + q(schema.string()));
    CHECK(r.exit_code == 0);
    const std::string text = testutil::read_file(schema.string());
    CHECK(text.find("\"question_count\": 88") != std::string::npos);
    CHECK(text.find("install.uninstall_problems") != std::string::npos);

    const auto to_stdout = testutil::run_command(kBin + " template export");
    CHECK(to_stdout.exit_code == 0);
    CHECK(to_stdout.out == text);
}
