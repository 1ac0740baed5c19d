#pragma once

#include <cstdint>
#include <vector>

#include "capcodes/decode.hpp"
#include "capcodes/poly.hpp"

namespace capcodes {

enum class RootMode { Shift, Derivative };

/// Calls visit(f) for every polynomial of degree < k, in lexicographic order
/// of (f_0, f_1, ..): f_0 most significant. Throws BudgetExceeded if q^k > budget.
void for_each_message(const FieldPtr& field, unsigned k, std::uint64_t budget,
                      const std::function<void(const Poly&)>& visit);

/// Every message of degree < k whose encoding agrees with y in >= t columns.
std::vector<Candidate> oracle_list_decode(const FieldPtr& field, unsigned k, const Encoder& encode, const Matrix& y,
                                          unsigned t, std::uint64_t budget = 1'000'000);

/// Every f of degree < k for which
///   Shift:      A_0 + sum_i A_i(X) f(gamma^{i-1} X)
///   Derivative: A_0 + sum_i A_i(X) f^{(i-1)}(X)
/// vanishes identically, found by composing each candidate.
std::vector<Poly> oracle_y_roots(const InterpolationPoly& Q, unsigned k, Elem gamma, RootMode mode,
                                 std::uint64_t budget = 1'000'000);

}  // namespace capcodes
