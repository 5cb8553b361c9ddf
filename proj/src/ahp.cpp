#include "ahprank/ahp.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include "ahprank/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ahprank {

namespace {

// Parallel kernels pay off only once the option count is large; below
// this the serial loop wins.
constexpr std::size_t kParallelThreshold = 128;

void check_grade(int g) {
    if (g < 1 || g > 10) throw AhpError("grade " + std::to_string(g) + " out of range 1..10");
}

} // namespace

double grade_pair_to_saaty(int grade_j, int grade_k) {
    check_grade(grade_j);
    check_grade(grade_k);
    const int diff = grade_j >= grade_k ? grade_j - grade_k : grade_k - grade_j;
    const double v = std::min(static_cast<double>(diff + 1), kSaatyMax);
    return grade_j >= grade_k ? v : 1.0 / v;
}

ComparisonMatrix::ComparisonMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
    if (n < 1) throw AhpError("comparison matrix needs at least one option");
    for (std::size_t j = 0; j < n; ++j) a_[j * n + j] = 1.0;
}

void ComparisonMatrix::set_pair(std::size_t j, std::size_t k, double value) {
    if (!(value >= 1.0 / kSaatyMax && value <= kSaatyMax) || !std::isfinite(value))
        throw AhpError("comparison value " + std::to_string(value) + " outside [1/9, 9]");
    a_[j * n_ + k] = value;
    a_[k * n_ + j] = 1.0 / value; // the stored reciprocal, never recomputed
}

ComparisonMatrix build_comparison_matrix(std::span<const int> grades, GradePairFn mapping) {
    const std::size_t n = grades.size();
    if (n < 2) throw AhpError("pairwise comparison needs at least two options");
    for (int g : grades) check_grade(g);
    return ComparisonMatrix::from_upper_triangle(
        n, [&](std::size_t j, std::size_t k) { return mapping(grades[j], grades[k]); });
}

NormalizedMatrix normalize_columns(const ComparisonMatrix& a) {
    const std::size_t n = a.size();
    NormalizedMatrix out{n, std::vector<double>(n * n)};

    // Columns are independent; each one is summed in index order so the
    // result does not depend on the thread count.
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
#endif
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += a.at(j, k);
        for (std::size_t j = 0; j < n; ++j) out.b[j * n + k] = a.at(j, k) / sum;
    }
    return out;
}

PriorityVector priority_from_normalized(const NormalizedMatrix& b) {
    const std::size_t n = b.n;
    PriorityVector p{std::vector<double>(n)};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
#endif
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) sum += b.at(j, k);
        p.weights[j] = sum / static_cast<double>(n);
    }
    return p;
}

PriorityVector priority_eigenvector(const ComparisonMatrix& a, double tol, std::size_t max_iter) {
    if (tol <= 0.0) throw AhpError("tolerance must be positive");
    const std::size_t n = a.size();
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
#endif
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += a.at(j, k) * w[k];
            next[j] = sum;
        }
        double total = 0.0;
        for (double v : next) total += v;
        for (double& v : next) v /= total;

        double delta = 0.0;
        for (std::size_t j = 0; j < n; ++j) delta = std::max(delta, std::abs(next[j] - w[j]));
        w.swap(next);
        if (delta < tol) return PriorityVector{std::move(w)};
    }
    throw AhpError("power iteration did not converge within " + std::to_string(max_iter) +
                   " iterations");
}

double consistency_ratio(const ComparisonMatrix& a) {
    const std::size_t n = a.size();
    if (n < 3) return 0.0;
    if (n > 10) throw AhpError("random index undefined for n = " + std::to_string(n));

    // Random consistency index for n = 3..10, from Saaty, "The Analytic
    // Hierarchy Process", McGraw-Hill 1980.
    static constexpr double kRandomIndex[] = {0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};

    const PriorityVector w = priority_eigenvector(a, 1e-13, 10000);
    double lambda = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double row = 0.0;
        for (std::size_t k = 0; k < n; ++k) row += a.at(j, k) * w[k];
        lambda += row / w[j];
    }
    lambda /= static_cast<double>(n);

    const double ci = (lambda - static_cast<double>(n)) / static_cast<double>(n - 1);
    const double cr = ci / kRandomIndex[n - 3];
    return std::max(cr, 0.0); // lambda can undershoot n by rounding
}

std::string_view method_id(Method m) {
    return m == Method::column_normalization ? "column_normalization" : "eigenvector";
}

std::optional<Method> parse_method(std::string_view id) {
    if (id == "column_normalization" || id == "column") return Method::column_normalization;
    if (id == "eigenvector" || id == "eigen") return Method::eigenvector;
    return std::nullopt;
}

CriteriaWeights CriteriaWeights::equal(const std::vector<Quality>& qualities) {
    if (qualities.empty()) throw AhpError("no qualities to weight");
    CriteriaWeights w;
    const double share = 1.0 / static_cast<double>(qualities.size());
    for (Quality q : qualities) w.weights[q] = share;
    return w;
}

CriteriaWeights CriteriaWeights::normalized(std::map<Quality, double> raw, double* raw_sum) {
    double sum = 0.0;
    for (const auto& [q, v] : raw) {
        if (v < 0.0 || !std::isfinite(v))
            throw AhpError(std::string("weight for ") + std::string(quality_id(q)) +
                           " must be a non-negative number");
        sum += v;
    }
    if (raw_sum) *raw_sum = sum;
    if (sum <= 0.0) throw AhpError("criteria weights sum to zero");
    CriteriaWeights w;
    for (auto& [q, v] : raw) w.weights[q] = v / sum;
    return w;
}

CriteriaWeights CriteriaWeights::restricted_to(const std::vector<Quality>& qualities) const {
    std::map<Quality, double> raw;
    for (Quality q : qualities) {
        auto it = weights.find(q);
        if (it == weights.end())
            throw AhpError(std::string("no weight for quality ") + std::string(quality_id(q)));
        raw[q] = it->second;
    }
    return normalized(std::move(raw));
}

namespace {

PriorityVector derive_priority(const ComparisonMatrix& a, Method method) {
    if (method == Method::eigenvector) return priority_eigenvector(a);
    return priority_from_normalized(normalize_columns(a));
}

} // namespace

PriorityVector rank_quality(const GradeMatrix& gm, Quality q, Method method) {
    const auto idx = gm.quality_index(q);
    if (!idx)
        throw AhpError(std::string("quality ") + std::string(quality_id(q)) +
                       " not present in grade matrix");
    const std::vector<int> grades = gm.column(*idx);
    return derive_priority(build_comparison_matrix(grades), method);
}

PriorityVector aggregate(const std::map<Quality, PriorityVector>& per_quality,
                         const CriteriaWeights& weights) {
    if (per_quality.empty()) throw AhpError("nothing to aggregate");
    if (per_quality.size() != weights.weights.size())
        throw AhpError("criteria weights do not match the per-quality vectors");

    const std::size_t n = per_quality.begin()->second.size();
    PriorityVector final_scores{std::vector<double>(n, 0.0)};
    for (const auto& [q, vec] : per_quality) {
        auto wit = weights.weights.find(q);
        if (wit == weights.weights.end())
            throw AhpError(std::string("missing weight for ") + std::string(quality_id(q)));
        if (vec.size() != n) throw AhpError("per-quality vectors cover different product lists");
        for (std::size_t j = 0; j < n; ++j) final_scores.weights[j] += wit->second * vec[j];
    }
    return final_scores;
}

AhpResult run_ahp(const GradeMatrix& gm, const CriteriaWeights& weights, Method method) {
    const std::size_t m = gm.quality_count();
    const std::size_t n = gm.product_count();
    if (m == 0) throw AhpError("grade matrix has no qualities");
    if (n < 2) throw AhpError("pairwise comparison needs at least two options");

    AhpResult result;
    result.method = method;
    result.weights = weights.restricted_to(gm.qualities);

    for (int g : gm.grades) check_grade(g); // keep throws out of the parallel region

    std::vector<PriorityVector> vectors(m);
    std::vector<std::optional<double>> crs(m);
    std::exception_ptr failure;

    // Qualities are independent slices; thread count cannot change the
    // arithmetic within any slice.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t qi = 0; qi < m; ++qi) {
        try {
            const std::vector<int> grades = gm.column(qi);
            const ComparisonMatrix a = build_comparison_matrix(grades);
            vectors[qi] = derive_priority(a, method);
            if (n <= 10) crs[qi] = consistency_ratio(a);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t qi = 0; qi < m; ++qi) {
        result.per_quality[gm.qualities[qi]] = std::move(vectors[qi]);
        result.per_quality_cr[gm.qualities[qi]] = crs[qi];
    }
    result.final_scores = aggregate(result.per_quality, result.weights);
    return result;
}

} // namespace ahprank
