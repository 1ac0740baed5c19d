#pragma once

#include <iosfwd>
#include <vector>

#include "capcodes/decode.hpp"
#include "capcodes/field.hpp"
#include "capcodes/poly.hpp"

namespace capcodes {

/// m-th order derivative code: column i holds f, f', .., f^{(m-1)} at alpha_i.
struct DerParams {
    FieldPtr field;
    unsigned m = 1;
    unsigned n = 0;
    unsigned k = 1;
    std::vector<Elem> points;

    /// Points 1, gamma, gamma^2, ...
    static DerParams make(FieldPtr field, unsigned m, unsigned n, unsigned k);
    static DerParams make(FieldPtr field, unsigned m, unsigned k, std::vector<Elem> points);

    /// Throws ParamOutOfRange unless m <= k < nm <= q, char > k and the points are distinct.
    void validate() const;
};

/// m x n matrix with entry (j, i) = f^{(j)}(alpha_i). Throws DegreeTooLarge.
Matrix der_encode(const DerParams& params, const Poly& f);

/// B_0(X) + sum_{i=1}^{m} B_i(X) Y_i
struct DOperatorPoly {
    std::vector<Poly> B;  // B[0] .. B[m]

    static DOperatorPoly zero(const FieldPtr& field, unsigned m);
    unsigned m() const noexcept { return static_cast<unsigned>(B.size()) - 1; }
    /// B_0(x) + sum_i B_i(x) ys[i-1]
    Elem eval(Elem x, std::span<const Elem> ys) const;
    bool operator==(const DOperatorPoly& o) const { return B == o.B; }
};

/// D(p Y_i) = p' Y_i + p Y_{i+1}, D(p) = p'. Throws IndexOverflow on a Y_{m+1} term.
DOperatorPoly d_operator(const DOperatorPoly& P);

/// floor((n(m-s+1) - k + 1) / (s+1)); throws ParamOutOfRange if negative.
int der_interpolation_degree(const DerParams& params, unsigned s);
/// floor((d+k-1)/(m-s+1)) + 1
unsigned der_threshold(const DerParams& params, unsigned s);

/// Rows: for each column i, the conditions D^j Q (alpha_i, y_i) = 0 for j = 0..m-s.
Matrix der_constraint_matrix(const DerParams& params, const Matrix& y, unsigned s);
InterpolationPoly der_interpolate(const DerParams& params, const Matrix& y, unsigned s);

/// A_0 + sum_i A_i f^{(i-1)}
Poly derivative_form(const InterpolationPoly& Q, const Poly& f);

/// Direct back-substitution; requires A_s(0) != 0 (ShiftRequired otherwise).
AffineSolutionSet der_solve_affine_direct(const InterpolationPoly& Q, unsigned k);

/// The exact set of f with deg f < k and derivative_form(Q, f) = 0. Translates
/// X -> X + beta when A_s(0) = 0; *shift receives beta (or -1 when unshifted).
AffineSolutionSet der_solve_affine(const InterpolationPoly& Q, const DerParams& params, long* shift = nullptr);

DecodeResult der_list_decode(const DerParams& params, const Matrix& y, unsigned s, const DecodeOptions& opt = {});

/// Header `q m n k`, a line of the n evaluation points, then m rows of n elements.
void write_der_word(std::ostream& out, const DerParams& params, const Matrix& word);
struct DerWord {
    DerParams params;
    Matrix word;
};
DerWord read_der_word(std::istream& in);

}  // namespace capcodes
