#include "lstc/spaces.hpp"

#include <algorithm>
#include <string>

#include "lstc/errors.hpp"

namespace lstc {

SpaceInfo fcpn_space(int n) {
    if (n < 1) throw InvalidParameterError("fcpn_space requires n >= 1");
    SpaceInfo s;
    s.name = "F(CP^" + std::to_string(n) + ",2)";
    s.presentation = fcpn_presentation(n);
    s.cw_dimension = 4 * n - 2;
    s.connectivity = 1;
    return s;
}

SpaceInfo cpn_space(int n) {
    if (n < 1) throw InvalidParameterError("cpn_space requires n >= 1");
    SpaceInfo s;
    s.name = "CP^" + std::to_string(n);
    s.presentation = cpn_presentation(n);
    s.cw_dimension = 2 * n;
    s.connectivity = 1;
    return s;
}

SpaceInfo product_space(const SpaceInfo& s1, const SpaceInfo& s2) {
    if (!s1.cw_dimension || !s2.cw_dimension || !s1.connectivity || !s2.connectivity)
        throw InvalidParameterError("product_space requires CW data on both factors");
    SpaceInfo s;
    s.name = s1.name + " x " + s2.name;
    s.presentation = product_presentation(s1.presentation, s2.presentation);
    s.cw_dimension = *s1.cw_dimension + *s2.cw_dimension;
    s.connectivity = std::min(*s1.connectivity, *s2.connectivity);
    s.paracompact = s1.paracompact && s2.paracompact;
    return s;
}

int betti_closed_form(int n, int q) {
    if (n < 1) throw InvalidParameterError("betti_closed_form requires n >= 1");
    if (q < 0 || q % 2 != 0) return 0;
    const int j = q / 2;
    if (j <= n - 1) return j + 1;
    if (j >= n && j <= 2 * n - 1) return 2 * n - j;
    return 0;
}

BettiVector convolve_even(const BettiVector& a, const BettiVector& b) {
    for (std::size_t i = 1; i < a.size(); i += 2)
        if (a[i] != 0) throw InvalidParameterError("factor sequence has a nonzero odd entry");
    for (std::size_t i = 1; i < b.size(); i += 2)
        if (b[i] != 0) throw InvalidParameterError("factor sequence has a nonzero odd entry");
    if (a.empty() || b.empty()) return {};
    BettiVector out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

BettiVector kunneth_betti(int n) {
    if (n < 1) throw InvalidParameterError("kunneth_betti requires n >= 1");
    // dimension sequences of CP^n and CP^{n-1}: one class in each even
    // degree up to 2n resp. 2n-2
    BettiVector base(2 * n + 1, 0), fiber(2 * n - 1, 0);
    for (int d = 0; d <= 2 * n; d += 2) base[d] = 1;
    for (int d = 0; d <= 2 * n - 2; d += 2) fiber[d] = 1;
    return convolve_even(base, fiber);
}

int cw_cell_counts(int n, int j) {
    if (n < 1) throw InvalidParameterError("cw_cell_counts requires n >= 1");
    if (j < 0) return 0;
    if (j <= n - 1) return j + 1;
    if (j <= 2 * n - 1) return 2 * n - j;
    return 0;
}

}  // namespace lstc
