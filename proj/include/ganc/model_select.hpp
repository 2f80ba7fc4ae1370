#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ganc/agglomerate.hpp"

namespace ganc {

enum class CurvatureSource { raw, refined };

struct CurvaturePeak {
    std::uint32_t k;
    double value;
};

// Curv(k) = 2 N(k) - N(k-1) - N(k+1) over a contiguous k range, with the
// N(k) values it was computed from and the ranked list of local maxima.
class CurvatureProfile {
public:
    CurvatureProfile(std::uint32_t k_min, std::vector<double> curv, std::vector<double> values,
                     CurvatureSource source);

    std::uint32_t k_min() const { return k_min_; }
    std::uint32_t k_max() const { return k_min_ + static_cast<std::uint32_t>(curv_.size()) - 1; }
    double curvature(std::uint32_t k) const;
    // NAssoc value used at level k; defined on [k_min-1, k_max+1].
    double value_at(std::uint32_t k) const;
    CurvatureSource source() const { return source_; }

    // Local maxima (both neighbors strictly smaller, or range boundary),
    // ranked by curvature descending, ties toward smaller k.
    std::span<const CurvaturePeak> peaks() const { return peaks_; }

private:
    std::uint32_t k_min_;
    std::vector<double> curv_;    // curv_[k - k_min_]
    std::vector<double> values_;  // values_[k - (k_min_-1)]
    CurvatureSource source_;
    std::vector<CurvaturePeak> peaks_;
};

// Curvature of a full NAssoc series (series[k] for k in 1..n, index 0
// unused), covering k in [2, n-1]. N(1) is taken as exactly 1. Throws
// InfeasibleError when n < 3.
CurvatureProfile curvature_profile(std::span<const double> nassoc_series);

// argmax of Curv(k), optionally restricted to [range.first, range.second];
// ties resolve to the smallest k. Throws InfeasibleError when the range does
// not intersect the profile.
std::uint32_t select_k(const CurvatureProfile& profile,
                       std::optional<std::pair<std::uint32_t, std::uint32_t>> range = {});

// Curvature from refined NAssoc values: every level in [range.first - 1,
// range.second + 1] is refined independently from its raw flat partition and
// the refined NAssoc values replace the raw series. refine_budget caps the
// refinement sweeps per level.
CurvatureProfile refined_curvature(const WeightedGraph& g, const Dendrogram& d,
                                   std::pair<std::uint32_t, std::uint32_t> range,
                                   std::optional<int> refine_budget = {});

// CSV "k,nassoc,curvature" over the profile's range.
void write_curvature_csv(std::ostream& out, const CurvatureProfile& profile);

}  // namespace ganc
