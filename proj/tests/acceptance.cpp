// Acceptance suite: exercises the full pipeline against its pinned
// thresholds and prints one PASS/FAIL line per criterion. Exit status is
// the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ahprank/ahp.hpp"
#include "ahprank/dataset.hpp"
#include "ahprank/grading_template.hpp"
#include "ahprank/report.hpp"
#include "support/ahp_reference.hpp"
#include "support/test_util.hpp"

namespace fs = std::filesystem;
using namespace ahprank;

namespace {

#ifndef AHPRANK_CLI_PATH
#error "AHPRANK_CLI_PATH must be defined by the build"
#endif

struct Criterion {
    int number;
    std::string title;
    std::function<void(std::string&)> run; // appends failure details
};

bool approx_contains(const std::string& haystack, const std::string& needle, std::string& fail) {
    if (haystack.find(needle) != std::string::npos) return true;
    fail += "missing \"" + needle + "\"; ";
    return false;
}

GradeMatrix load_fixture_matrix() {
    return parse_grade_matrix(testutil::read_file(testutil::fixture_path("grades-sample.csv")));
}

// 1. Exact reproduction of the dataset's summary statistics through the
//    stats command, in under a second.
void criterion_stats(std::string& fail) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = testutil::run_command(std::string(AHPRANK_CLI_PATH) + " stats --records '" +
                                         testutil::fixture_path("appendix-b-records.json") +
                                         "' --reference-date 2016-01-15 --out /tmp/ahprank_acc_stats");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.exit_code != 0) fail += "exit code " + std::to_string(r.exit_code) + "; ";
    for (const char* needle :
         {"open_source: 19/30", "dead: 9/30", "windows: 29/30", "cpp: 13/30",
          "developers_lte_5: 17/30", "install_instructions: 21/30", "linear_instructions: 14/21",
          "automated_install: 27/30"})
        approx_contains(r.out, needle, fail);
    if (seconds >= 1.0) fail += "took " + std::to_string(seconds) + "s (limit 1s); ";
    fs::remove_all("/tmp/ahprank_acc_stats");
}

// 2. Priority vectors match an independent reimplementation of the
//    derivation formulas to 1e-12 over 200 random small columns.
void criterion_oracle(std::string& fail) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const auto grades = testutil::random_grades(rng, n);

        GradeMatrix gm;
        gm.qualities = {Quality::installability};
        for (std::size_t j = 0; j < n; ++j) {
            gm.products.push_back("p" + std::to_string(j));
            gm.groups.push_back(Group::desktop_gis);
            gm.grades.push_back(grades[j]);
        }
        const PriorityVector p = rank_quality(gm, Quality::installability);
        const auto oracle = ahpref::priority_vector(grades);
        for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(p[j] - oracle[j]));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (worst > 1e-12) fail += "max deviation " + std::to_string(worst) + " > 1e-12; ";
    if (seconds >= 5.0) fail += "took " + std::to_string(seconds) + "s (limit 5s); ";
}

// 3. Consistent matrices w_j/w_k give back w: column method to 1e-12,
//    eigenvector to 1e-6, consistency ratio at most 1e-6.
void criterion_consistent(std::string& fail) {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(1.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 5; // up to 6
        std::vector<double> w(n);
        double sum = 0.0;
        for (auto& v : w) sum += (v = dist(rng));
        for (auto& v : w) v /= sum;

        const auto a = ComparisonMatrix::from_upper_triangle(
            n, [&](std::size_t j, std::size_t k) { return w[j] / w[k]; });

        const PriorityVector col = priority_from_normalized(normalize_columns(a));
        const PriorityVector eig = priority_eigenvector(a, 1e-12, 1000);
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(col[j] - w[j]) > 1e-12) {
                fail += "column method off by " + std::to_string(std::abs(col[j] - w[j])) + "; ";
                return;
            }
            if (std::abs(eig[j] - w[j]) > 1e-6) {
                fail += "eigenvector off by " + std::to_string(std::abs(eig[j] - w[j])) + "; ";
                return;
            }
        }
        if (n >= 3 && consistency_ratio(a) > 1e-6) {
            fail += "CR " + std::to_string(consistency_ratio(a)) + " > 1e-6; ";
            return;
        }
    }
}

// 4. Invariant suite, 100+ randomized cases per property.
void criterion_invariants(std::string& fail) {
    std::mt19937 rng(4096);

    for (int trial = 0; trial < 120 && fail.empty(); ++trial) { // reciprocity
        const auto grades = testutil::random_grades(rng, 2 + rng() % 9);
        const ComparisonMatrix a = build_comparison_matrix(grades);
        for (std::size_t j = 0; j < a.size() && fail.empty(); ++j)
            for (std::size_t k = j + 1; k < a.size(); ++k)
                if (a.at(k, j) != 1.0 / a.at(j, k) || a.at(j, k) * a.at(k, j) != 1.0) {
                    fail += "reciprocity broken; ";
                    break;
                }
    }

    for (int trial = 0; trial < 120 && fail.empty(); ++trial) { // normalization
        const auto grades = testutil::random_grades(rng, 2 + rng() % 9);
        for (const PriorityVector& p :
             {priority_from_normalized(normalize_columns(build_comparison_matrix(grades))),
              priority_eigenvector(build_comparison_matrix(grades))}) {
            const double sum = std::accumulate(p.weights.begin(), p.weights.end(), 0.0);
            if (std::abs(sum - 1.0) > 1e-9) fail += "priority sum off; ";
            for (double v : p.weights)
                if (!(v > 0.0)) fail += "non-positive priority; ";
        }
    }

    for (int trial = 0; trial < 120 && fail.empty(); ++trial) { // monotone dominance
        const auto grades = testutil::random_grades(rng, 2 + rng() % 7, 2, 9);
        const auto p = ahpref::priority_vector(grades);
        GradeMatrix gm;
        gm.qualities = {Quality::installability};
        for (std::size_t j = 0; j < grades.size(); ++j) {
            gm.products.push_back("p" + std::to_string(j));
            gm.groups.push_back(Group::desktop_gis);
            gm.grades.push_back(grades[j]);
        }
        const PriorityVector lib = rank_quality(gm, Quality::installability);
        for (std::size_t j = 0; j < grades.size(); ++j)
            for (std::size_t k = 0; k < grades.size(); ++k)
                if (grades[j] > grades[k] && !(lib[j] > lib[k])) fail += "dominance broken; ";
        (void)p;
    }

    for (int trial = 0; trial < 120 && fail.empty(); ++trial) { // shift invariance
        const auto grades = testutil::random_grades(rng, 2 + rng() % 7, 3, 7);
        std::uniform_int_distribution<int> shift_dist(-2, 3);
        const int shift = shift_dist(rng);
        auto shifted = grades;
        for (auto& g : shifted) g += shift;
        const ComparisonMatrix a = build_comparison_matrix(grades);
        const ComparisonMatrix b = build_comparison_matrix(shifted);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a.at(j, k) != b.at(j, k)) fail += "shift changed the matrix; ";
    }

    for (int trial = 0; trial < 120 && fail.empty(); ++trial) { // permutation equivariance
        const std::size_t n = 2 + rng() % 7;
        const auto grades = testutil::random_grades(rng, n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> permuted(n);
        for (std::size_t j = 0; j < n; ++j) permuted[j] = grades[perm[j]];
        const auto p = ahpref::priority_vector(grades);
        const auto p2 = ahpref::priority_vector(permuted);
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(p2[j] - p[perm[j]]) > 1e-12) fail += "permutation equivariance broken; ";
    }

    for (int trial = 0; trial < 110 && fail.empty(); ++trial) { // argmax invariance
        const std::size_t n = 3 + rng() % 4;
        const std::size_t m = 2 + rng() % 5;
        GradeMatrix gm;
        for (std::size_t q = 0; q < m; ++q) gm.qualities.push_back(all_qualities()[q]);
        for (std::size_t j = 0; j < n; ++j) {
            gm.products.push_back("p" + std::to_string(j));
            gm.groups.push_back(Group::desktop_gis);
            for (std::size_t q = 0; q < m; ++q) gm.grades.push_back(1 + rng() % 10);
        }
        std::uniform_real_distribution<double> weight_dist(0.1, 4.0);
        std::map<Quality, double> raw;
        for (Quality q : gm.qualities) raw[q] = weight_dist(rng);
        std::map<Quality, double> scaled(raw);
        std::uniform_real_distribution<double> scale_dist(0.05, 20.0);
        const double scale = scale_dist(rng);
        for (auto& [q, v] : scaled) v *= scale;

        const auto base = run_ahp(gm, CriteriaWeights::normalized(raw));
        const auto again = run_ahp(gm, CriteriaWeights::normalized(scaled));
        auto order_of = [&](const PriorityVector& p) {
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                if (p[x] != p[y]) return p[x] > p[y];
                return gm.products[x] < gm.products[y];
            });
            return order;
        };
        if (order_of(base.final_scores) != order_of(again.final_scores))
            fail += "weight scaling changed the ranking; ";
    }
}

// 5. Qualitative orderings built into the bundled sample matrix.
void criterion_sample_orderings(std::string& fail) {
    const GradeMatrix gm = load_fixture_matrix();
    const auto result = run_ahp(gm, CriteriaWeights::equal(gm.qualities));
    std::map<std::string, Group> groups;
    for (std::size_t j = 0; j < gm.products.size(); ++j) groups[gm.products[j]] = gm.groups[j];
    const RankingReport report = build_report(result, gm.products, groups, Date(2016, 1, 15));

    const PlotSeries install = quality_series(report, result, Quality::installability);
    for (std::size_t i = 0; i < 5; ++i)
        if (install.bars[i].group != Group::programming_library) {
            fail += "installability rank " + std::to_string(i + 1) + " is " + install.bars[i].product + "; ";
            break;
        }

    const double standalone = report.group_means.at(Group::standalone_tool);
    if (!(standalone < report.group_means.at(Group::desktop_gis) &&
          standalone < report.group_means.at(Group::programming_library)))
        fail += "stand-alone tools are not the lowest-scoring group; ";

    std::map<Group, std::pair<double, int>> transparency;
    const auto& tvec = result.per_quality.at(Quality::transparency);
    for (std::size_t j = 0; j < gm.products.size(); ++j) {
        transparency[gm.groups[j]].first += tvec[j];
        transparency[gm.groups[j]].second += 1;
    }
    auto mean = [&](Group g) {
        return transparency.at(g).first / transparency.at(g).second;
    };
    if (!(mean(Group::desktop_gis) > mean(Group::standalone_tool) &&
          mean(Group::desktop_gis) > mean(Group::programming_library)))
        fail += "desktop GIS does not lead transparency; ";
}

// 6. Byte-identical outputs across repeated runs with a pinned date.
void criterion_determinism(std::string& fail) {
    const fs::path base = "/tmp/ahprank_acc_det";
    fs::remove_all(base);
    const std::string common = std::string(AHPRANK_CLI_PATH) + " rank --grades '" +
                               testutil::fixture_path("grades-sample.csv") +
                               "' --weights equal --reference-date 2016-01-15 --out ";
    const auto r1 = testutil::run_command(common + "'" + (base / "a").string() + "'");
    const auto r2 = testutil::run_command(common + "'" + (base / "b").string() + "'");
    if (r1.exit_code != 0 || r2.exit_code != 0) {
        fail += "rank run failed; ";
        return;
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::recursive_directory_iterator(base / "a")) {
        if (!entry.is_regular_file()) continue;
        const fs::path relative = fs::relative(entry.path(), base / "a");
        if (testutil::read_file(entry.path().string()) !=
            testutil::read_file((base / "b" / relative).string())) {
            fail += relative.string() + " differs between runs; ";
            return;
        }
        ++compared;
    }
    if (compared != 29) fail += "expected 29 output files, compared " + std::to_string(compared) + "; ";
    fs::remove_all(base);
}

// 7. The liveness boundary is inclusive at exactly 18 months.
void criterion_liveness(std::string& fail) {
    const Date reference(2016, 1, 15);
    if (classify_liveness(Date(2014, 8, 15), reference) != Liveness::alive)
        fail += "17 months should be alive; ";
    if (classify_liveness(Date(2014, 7, 15), reference) != Liveness::alive)
        fail += "exactly 18 months should be alive; ";
    if (classify_liveness(Date(2014, 6, 15), reference) != Liveness::dead)
        fail += "19 months should be dead; ";
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "summary statistics match the published counts (< 1 s)", criterion_stats},
        {2, "priority vectors match the independent oracle to 1e-12", criterion_oracle},
        {3, "consistent matrices recover their weights (column 1e-12, eigen 1e-6, CR 1e-6)",
         criterion_consistent},
        {4, "invariant suite: reciprocity, normalization, dominance, shift, permutation, scaling",
         criterion_invariants},
        {5, "sample matrix encodes the documented group orderings", criterion_sample_orderings},
        {6, "pinned-date rank runs are byte-identical", criterion_determinism},
        {7, "liveness boundary is inclusive at 18 months", criterion_liveness},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string fail;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(fail);
        } catch (const std::exception& e) {
            fail += std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (fail.empty()) {
            std::printf("PASS  %d. %s (%.2fs)\n", criterion.number, criterion.title.c_str(), seconds);
        } else {
            std::printf("FAIL  %d. %s: %s\n", criterion.number, criterion.title.c_str(), fail.c_str());
            ++failures;
        }
    }
    return failures;
}
