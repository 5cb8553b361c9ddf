#ifndef AHPRANK_AHP_HPP
#define AHPRANK_AHP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ahprank/dataset.hpp"
#include "ahprank/quality.hpp"

namespace ahprank {

inline constexpr double kSaatyMax = 9.0;

/// Maps a pair of 1..10 grades onto the 1..9 comparison scale:
/// min(|gj - gk| + 1, 9) when gj >= gk, the reciprocal otherwise. Equal
/// grades map to 1. Throws AhpError on an out-of-range grade.
double grade_pair_to_saaty(int grade_j, int grade_k);

using GradePairFn = double (*)(int, int);

/// Positive reciprocal pairwise-comparison matrix. The lower triangle is
/// stored as the exact reciprocal of the computed upper triangle, never
/// recomputed, so a[j][k] * a[k][j] == 1 holds bit-for-bit.
class ComparisonMatrix {
  public:
    explicit ComparisonMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    double at(std::size_t j, std::size_t k) const { return a_[j * n_ + k]; }

    /// Fills from the upper triangle only; (j,k) with j<k gets f(j,k),
    /// the mirror entry its reciprocal. Values must lie in [1/9, 9].
    template <typename F>
    static ComparisonMatrix from_upper_triangle(std::size_t n, F&& f) {
        ComparisonMatrix m(n);
        for (std::size_t j = 0; j < n; ++j) {
            m.a_[j * n + j] = 1.0;
            for (std::size_t k = j + 1; k < n; ++k) {
                const double v = f(j, k);
                m.set_pair(j, k, v);
            }
        }
        return m;
    }

  private:
    void set_pair(std::size_t j, std::size_t k, double value);

    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Builds the per-criterion matrix from one column of grades; n >= 2.
ComparisonMatrix build_comparison_matrix(std::span<const int> grades,
                                         GradePairFn mapping = grade_pair_to_saaty);

/// Column-stochastic form of a comparison matrix (each entry divided by
/// its column sum).
struct NormalizedMatrix {
    std::size_t n = 0;
    std::vector<double> b; // row-major

    double at(std::size_t j, std::size_t k) const { return b[j * n + k]; }
};

NormalizedMatrix normalize_columns(const ComparisonMatrix& a);

/// Option weights under one criterion; strictly positive, sums to 1.
struct PriorityVector {
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t j) const { return weights[j]; }
};

/// Row means of the normalized matrix.
PriorityVector priority_from_normalized(const NormalizedMatrix& b);

/// Principal right eigenvector by power iteration, normalized to sum 1.
/// Stops when successive iterates differ by < tol in max-norm; throws
/// AhpError if max_iter is exhausted first.
PriorityVector priority_eigenvector(const ComparisonMatrix& a, double tol = 1e-12,
                                    std::size_t max_iter = 500);

/// Saaty's consistency ratio (lambda_max - n) / (n - 1) / RI(n).
/// Returns 0 for n < 3; throws for n > 10 where the random index table
/// is undefined.
double consistency_ratio(const ComparisonMatrix& a);

enum class Method { column_normalization, eigenvector };

std::string_view method_id(Method m);
std::optional<Method> parse_method(std::string_view id);

/// Per-quality criteria weights; non-negative, sum 1.
struct CriteriaWeights {
    std::map<Quality, double> weights;

    static CriteriaWeights equal(const std::vector<Quality>& qualities);
    /// Renormalizes raw non-negative weights to sum 1. Returns the raw
    /// sum so callers can warn when it was not 1 to begin with.
    static CriteriaWeights normalized(std::map<Quality, double> raw, double* raw_sum = nullptr);
    /// Drops entries for qualities not present and renormalizes.
    CriteriaWeights restricted_to(const std::vector<Quality>& qualities) const;
};

/// Derives the priority vector for one quality of the grade matrix.
PriorityVector rank_quality(const GradeMatrix& gm, Quality q,
                            Method method = Method::column_normalization);

/// final[j] = sum over qualities of weight(q) * per_quality[q][j].
/// All vectors must have the same length and the weight keys must match
/// the per-quality keys exactly.
PriorityVector aggregate(const std::map<Quality, PriorityVector>& per_quality,
                         const CriteriaWeights& weights);

struct AhpResult {
    std::map<Quality, PriorityVector> per_quality;
    // Diagnostic only; absent when the option count is outside the
    // random-index table (n > 10). Never blocks a run.
    std::map<Quality, std::optional<double>> per_quality_cr;
    PriorityVector final_scores;
    Method method = Method::column_normalization;
    CriteriaWeights weights;
};

/// Full pipeline over every quality in the matrix. Per-quality work runs
/// in parallel when OpenMP is enabled; each quality's arithmetic is
/// self-contained and summation order is fixed, so results are identical
/// to a sequential run.
AhpResult run_ahp(const GradeMatrix& gm, const CriteriaWeights& weights,
                  Method method = Method::column_normalization);

} // namespace ahprank

#endif
