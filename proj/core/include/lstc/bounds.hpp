#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lstc/invariants.hpp"
#include "lstc/presentation.hpp"

namespace lstc {

/// A space given by its cohomology presentation plus the CW data the bound
/// formulas consume. cw_dimension/connectivity may be absent for custom
/// rings, in which case reports degrade to algebra-only mode.
struct SpaceInfo {
    std::string name;
    RingPresentation presentation;
    std::optional<int> cw_dimension;
    std::optional<int> connectivity;  ///< largest c with the space c-connected
    /// Asserted for catalog spaces; an input flag for custom ones. Required
    /// for the dimensional TC upper bound.
    bool paracompact = true;
};

/// A half-open-ended integer interval with an optional collapse witness.
struct BoundInterval {
    int lower = 0;
    std::optional<int> upper;  ///< absent when no upper bound applies
    std::optional<int> exact;  ///< set when the interval is a single certified point
};

/// Everything the CLI prints: Betti numbers, cup/zcl, cat and TC intervals,
/// exactness and Ganea flags. Uses the normalization cat(point) = TC(point) = 1.
struct BoundsReport {
    SpaceInfo space;
    std::vector<int> betti;  ///< graded dimensions, degree 0..top (0..cap if truncated)
    CupResult cup;
    ZclResult zcl;
    std::optional<BoundInterval> cat;  ///< absent in algebra-only mode
    std::optional<BoundInterval> tc;   ///< absent in algebra-only mode
    bool ganea = false;                ///< cat exact and equal to cup_length + 1
    bool truncated = false;            ///< cap not sound: cup/zcl are lower bounds only

    bool algebra_only() const { return !cat.has_value(); }
};

/// cat bounds: lower = cup_length + 1; upper = floor(cw_dim / (connectivity+1)) + 1.
/// Requires cw data and connectivity >= 1.
std::pair<int, int> cat_bounds(const SpaceInfo& info, const CupResult& cup);

/// TC bounds: lower = zcl.lower + 1 (valid even when zcl is inexact);
/// upper = 2 * cat_upper - 1, present only for paracompact spaces.
std::pair<int, std::optional<int>> tc_bounds(const SpaceInfo& info, int cat_upper,
                                             const ZclResult& zcl);

/// Builds the algebra and assembles the full report, degrading to
/// algebra-only mode when CW data is missing and to lower-bound mode when the
/// cap is not sound. UnboundedAlgebraError propagates: no partial report.
BoundsReport report(const SpaceInfo& space);

}  // namespace lstc
