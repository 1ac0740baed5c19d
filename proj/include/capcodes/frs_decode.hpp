#pragma once

#include "capcodes/decode.hpp"
#include "capcodes/frs.hpp"

namespace capcodes {

/// floor((N(m-s+1) - k + 1) / (s+1)); throws ParamOutOfRange if negative or s not in [1, m].
int frs_interpolation_degree(const FrsParams& params, unsigned s);

/// ceil((d+k) / (m-s+1))
unsigned frs_threshold(const FrsParams& params, unsigned s);

/// Homogeneous system whose kernel is the set of valid Q. One row per
/// (column i, window start j), i major; unknowns ordered X-degree major,
/// then A_0, A_1, .., A_s.
Matrix frs_constraint_matrix(const FrsParams& params, const Matrix& y, unsigned s);

/// Nonzero Q with Q(g^{im+j}, y_{j,i}, .., y_{j+s-1,i}) = 0 for all i and 0 <= j <= m-s.
InterpolationPoly interpolate(const FrsParams& params, const Matrix& y, unsigned s);

/// A_0(X) + sum_i A_i(X) f(gamma^{i-1} X)
Poly shift_form(const InterpolationPoly& Q, const Poly& f, Elem gamma);

/// The exact set of f with deg f < k and shift_form(Q, f) = 0.
AffineSolutionSet solve_affine(const InterpolationPoly& Q, const FrsParams& params);

/// Interpolate, solve, prune at frs_threshold.
DecodeResult list_decode(const FrsParams& params, const Matrix& y, unsigned s, const DecodeOptions& opt = {});

}  // namespace capcodes
