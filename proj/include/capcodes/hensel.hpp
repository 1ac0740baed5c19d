#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "capcodes/decode.hpp"
#include "capcodes/frs.hpp"
#include "capcodes/multipoly.hpp"

namespace capcodes {

/// Q as a polynomial in (X, Y_1, .., Y_s); variable 0 is X.
MultiPoly to_multipoly(const InterpolationPoly& Q);

/// Q(X, b + X Y_1, b + gamma X Y_2, .., b + gamma^{s-1} X Y_s)
MultiPoly shift_transform(const MultiPoly& Q, Elem b, Elem gamma);

/// (Q_0, r) with Q = X^r Q_0 and X not dividing Q_0. Q must be nonzero.
std::pair<MultiPoly, unsigned> strip_x_power(const MultiPoly& Q);

/// All of GF(q) when Q(0, Y, .., Y) vanishes identically, else its roots.
std::vector<Elem> base_roots(const MultiPoly& Q);

/// Candidate roots of precision k, as polynomials of degree < k. Contains every
/// f with Q(X, f(X), f(gamma X), ..) = 0 and deg f < k. Throws BudgetExceeded
/// once more than node_budget tree nodes are visited.
std::vector<Poly> enumerate_lambda(const MultiPoly& Q, int k, Elem gamma, std::uint64_t node_budget = 100'000,
                                   std::uint64_t* nodes = nullptr);

/// Interpolate, enumerate candidates, keep true roots agreeing in >= t columns.
DecodeResult hensel_list_decode(const FrsParams& params, const Matrix& y, unsigned s, const DecodeOptions& opt = {});

}  // namespace capcodes
