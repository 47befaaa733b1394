#pragma once

#include <vector>

#include "lstc/bounds.hpp"

namespace lstc {

/// Graded dimensions indexed by degree 0..top.
using BettiVector = std::vector<int>;

/// F(CP^n,2), the ordered two-point configuration space of CP^n:
/// presentation fcpn_presentation(n), CW dimension 4n-2, simply connected.
SpaceInfo fcpn_space(int n);

/// CP^n: presentation cpn_presentation(n), CW dimension 2n, simply connected.
SpaceInfo cpn_space(int n);

/// Product space: product presentation, CW dimension the sum, connectivity
/// the minimum of the two factors.
SpaceInfo product_space(const SpaceInfo& s1, const SpaceInfo& s2);

/// Closed-form Betti number of F(CP^n,2) in degree q:
///   q/2 + 1   for q = 0, 2, ..., 2(n-1)
///   2n - q/2  for q = 2n, 2n+2, ..., 4n-2
///   0         otherwise.
int betti_closed_form(int n, int q);

/// Betti vector of F(CP^n,2) by the collapsed fibration route: the
/// convolution of the dimension sequences of CP^n and CP^{n-1}. The collapse
/// precondition (both sequences concentrated in even degrees) is checked.
BettiVector kunneth_betti(int n);

/// Convolution of two graded dimension sequences concentrated in even
/// degrees; throws InvalidParameterError when an odd entry is nonzero.
BettiVector convolve_even(const BettiVector& a, const BettiVector& b);

/// Number of 2j-cells of the minimal CW structure on F(CP^n,2):
/// j+1 for j <= n-1, 2n-j for n <= j <= 2n-1, 0 otherwise.
int cw_cell_counts(int n, int j);

}  // namespace lstc
