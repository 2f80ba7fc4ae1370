#include "ganc/model_select.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "ganc/refine.hpp"

namespace ganc {

CurvatureProfile::CurvatureProfile(std::uint32_t k_min, std::vector<double> curv,
                                   std::vector<double> values, CurvatureSource source)
    : k_min_(k_min), curv_(std::move(curv)), values_(std::move(values)), source_(source) {
    if (curv_.empty()) throw InternalError("curvature profile is empty");
    for (std::uint32_t i = 0; i < curv_.size(); ++i) {
        bool left_ok = (i == 0) || curv_[i - 1] < curv_[i];
        bool right_ok = (i + 1 == curv_.size()) || curv_[i + 1] < curv_[i];
        if (left_ok && right_ok) peaks_.push_back({k_min_ + i, curv_[i]});
    }
    std::stable_sort(peaks_.begin(), peaks_.end(), [](const CurvaturePeak& a, const CurvaturePeak& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.k < b.k;
    });
}

double CurvatureProfile::curvature(std::uint32_t k) const {
    if (k < k_min_ || k > k_max())
        throw InfeasibleError("curvature undefined at k=" + std::to_string(k));
    return curv_[k - k_min_];
}

double CurvatureProfile::value_at(std::uint32_t k) const {
    if (k + 1 < k_min_ || k > k_max() + 1)
        throw InfeasibleError("NAssoc value undefined at k=" + std::to_string(k));
    return values_[k - (k_min_ - 1)];
}

CurvatureProfile curvature_profile(std::span<const double> nassoc_series) {
    if (nassoc_series.size() < 4)  // indices 0..n with n >= 3
        throw InfeasibleError("curvature needs at least 3 levels");
    const auto n = static_cast<std::uint32_t>(nassoc_series.size()) - 1;

    std::vector<double> values(nassoc_series.begin() + 1, nassoc_series.end());
    values[0] = 1.0;  // N(1) is 1 for any graph
    std::vector<double> curv(n - 2);
    for (std::uint32_t k = 2; k + 1 <= n; ++k)
        curv[k - 2] = 2.0 * values[k - 1] - values[k - 2] - values[k];
    return CurvatureProfile(2, std::move(curv), std::move(values), CurvatureSource::raw);
}

std::uint32_t select_k(const CurvatureProfile& profile,
                       std::optional<std::pair<std::uint32_t, std::uint32_t>> range) {
    std::uint32_t lo = profile.k_min(), hi = profile.k_max();
    if (range) {
        lo = std::max(lo, range->first);
        hi = std::min(hi, range->second);
        if (lo > hi)
            throw InfeasibleError("requested range [" + std::to_string(range->first) + ", " +
                                  std::to_string(range->second) +
                                  "] does not intersect the curvature profile [" +
                                  std::to_string(profile.k_min()) + ", " +
                                  std::to_string(profile.k_max()) + "]");
    }
    std::uint32_t best = lo;
    for (std::uint32_t k = lo + 1; k <= hi; ++k)
        if (profile.curvature(k) > profile.curvature(best)) best = k;
    return best;
}

CurvatureProfile refined_curvature(const WeightedGraph& g, const Dendrogram& d,
                                   std::pair<std::uint32_t, std::uint32_t> range,
                                   std::optional<int> refine_budget) {
    const std::uint32_t n = d.node_count();
    if (n < 3) throw InfeasibleError("curvature needs at least 3 levels");
    if (range.first < 2 || range.second > n - 1 || range.first > range.second)
        throw InfeasibleError("refined curvature range [" + std::to_string(range.first) + ", " +
                              std::to_string(range.second) + "] outside [2, " +
                              std::to_string(n - 1) + "]");

    std::vector<double> values(range.second - range.first + 3);
    for (std::uint32_t k = range.first - 1; k <= range.second + 1; ++k) {
        double value;
        if (k == 1) {
            value = 1.0;
        } else {
            Partition p = d.flat_partition(g, k);
            value = nassoc(g, refine(g, p, refine_budget).partition);
        }
        values[k - (range.first - 1)] = value;
    }
    std::vector<double> curv(range.second - range.first + 1);
    for (std::uint32_t k = range.first; k <= range.second; ++k) {
        std::uint32_t i = k - (range.first - 1);
        curv[k - range.first] = 2.0 * values[i] - values[i - 1] - values[i + 1];
    }
    return CurvatureProfile(range.first, std::move(curv), std::move(values),
                            CurvatureSource::refined);
}

void write_curvature_csv(std::ostream& out, const CurvatureProfile& profile) {
    char buf[32];
    out << "k,nassoc,curvature\n";
    for (std::uint32_t k = profile.k_min(); k <= profile.k_max(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", profile.value_at(k));
        out << k << ',' << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.17g", profile.curvature(k));
        out << buf << '\n';
    }
}

}  // namespace ganc
