#include "lstc/bounds.hpp"

#include "lstc/errors.hpp"

namespace lstc {

std::pair<int, int> cat_bounds(const SpaceInfo& info, const CupResult& cup) {
    if (!info.cw_dimension || !info.connectivity)
        throw InvalidParameterError("cat bounds require cw_dimension and connectivity");
    if (*info.connectivity < 1)
        throw InvalidParameterError("cat bounds require a simply connected space");
    const int lower = cup.cup_length + 1;
    const int upper = *info.cw_dimension / (*info.connectivity + 1) + 1;
    return {lower, upper};
}

std::pair<int, std::optional<int>> tc_bounds(const SpaceInfo& info, int cat_upper,
                                             const ZclResult& zcl) {
    const int lower = zcl.lower + 1;
    if (!info.paracompact) return {lower, std::nullopt};
    return {lower, 2 * cat_upper - 1};
}

BoundsReport report(const SpaceInfo& space) {
    BoundsReport rep;
    rep.space = space;

    const QuotientAlgebra algebra = QuotientAlgebra::build(space.presentation);
    rep.truncated = !algebra.cap_sound();

    const int betti_top = algebra.cap_sound() ? algebra.top_degree() : algebra.cap();
    for (int d = 0; d <= betti_top; ++d) rep.betti.push_back(algebra.graded_dimension(d));

    rep.cup = cup_length(algebra);
    rep.zcl = zcl(algebra);

    if (algebra.cap_sound()) {
        if (space.cw_dimension && *space.cw_dimension < algebra.top_degree())
            throw InvalidParameterError("cw_dimension " + std::to_string(*space.cw_dimension) +
                                        " is below the algebra top degree " +
                                        std::to_string(algebra.top_degree()));
        if (space.connectivity)
            for (int q = 1; q <= *space.connectivity && q < static_cast<int>(rep.betti.size());
                 ++q)
                if (rep.betti[q] != 0)
                    throw InvalidParameterError(
                        "claimed connectivity " + std::to_string(*space.connectivity) +
                        " contradicts a nonzero Betti number in degree " + std::to_string(q));
    }

    if (!space.cw_dimension || !space.connectivity) return rep;  // algebra-only mode

    BoundInterval cat;
    std::tie(cat.lower, cat.upper) = [&] {
        auto [lo, hi] = cat_bounds(space, rep.cup);
        return std::pair<int, std::optional<int>>(lo, hi);
    }();
    // The collapse of an interval is certified only when the lower bound's
    // input is itself exact (a truncated cup could shift the true point).
    if (cat.upper && cat.lower == *cat.upper && rep.cup.exact) cat.exact = cat.lower;
    rep.cat = cat;

    BoundInterval tc;
    std::tie(tc.lower, tc.upper) = tc_bounds(space, *cat.upper, rep.zcl);
    if (tc.upper && tc.lower == *tc.upper && rep.zcl.exact) tc.exact = tc.lower;
    rep.tc = tc;

    rep.ganea = cat.exact.has_value() && rep.cup.exact &&
                *cat.exact == rep.cup.cup_length + 1;
    return rep;
}

}  // namespace lstc
