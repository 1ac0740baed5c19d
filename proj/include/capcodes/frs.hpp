#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "capcodes/field.hpp"
#include "capcodes/linalg.hpp"
#include "capcodes/poly.hpp"
#include "capcodes/rational.hpp"

namespace capcodes {

/// m-folded Reed-Solomon code over GF(q): messages of degree < k evaluated at
/// 1, gamma, ..., gamma^{n-1} (n = q-1) and bundled into N = n/m columns.
struct FrsParams {
    FieldPtr field;
    unsigned m = 1;
    unsigned N = 0;
    unsigned k = 1;
    Elem gamma = 0;

    /// N derived from q-1, gamma the field's primitive element.
    static FrsParams make(FieldPtr field, unsigned m, unsigned k);
    /// Same, with an explicit (primitive) gamma.
    static FrsParams make(FieldPtr field, unsigned m, unsigned k, Elem gamma);

    unsigned n() const noexcept { return N * m; }
    /// gamma^e
    Elem point(std::uint64_t e) const { return field->pow(gamma, e); }
    /// Throws ParamOutOfRange unless n = q-1, m | n, 1 <= k <= n, gamma primitive.
    void validate() const;
};

/// m x N matrix with entry (j, i) = f(gamma^{im+j}). Throws DegreeTooLarge if deg f >= k.
Matrix frs_encode(const FrsParams& params, const Poly& f);

/// Column i of the result holds v[im .. im+m). Throws LengthMismatch if m does not divide |v|.
Matrix fold(std::span<const Elem> v, unsigned m);
std::vector<Elem> unfold(const Matrix& folded);

struct FrsDerived {
    Rational rate;
    unsigned min_distance;
};
FrsDerived frs_derived_params(const FrsParams& params);

/// floor(N - (1+delta) (k^s N (m-s+1))^{1/(s+1)} / (m-s+1)), evaluated exactly.
/// May be negative. Throws ParamOutOfRange unless 1 <= s <= m and delta >= 0.
long frs_decoding_radius(const FrsParams& params, unsigned s, const Rational& delta);

struct CapacityChoice {
    unsigned s;
    unsigned m;
    Rational delta;
};
/// s = ceil(1/eps), m = s^2, delta = eps. Throws ParamOutOfRange unless 0 < eps < 1.
CapacityChoice choose_capacity_params(const Rational& eps);

/// Header line `q m N k gamma`, then m rows of N elements.
void write_frs_word(std::ostream& out, const FrsParams& params, const Matrix& word);
struct FrsWord {
    FrsParams params;
    Matrix word;
};
FrsWord read_frs_word(std::istream& in);

/// Reads `rows` lines of `cols` field elements each. Throws Parse on malformed input.
Matrix read_matrix(std::istream& in, const Field& field, std::size_t rows, std::size_t cols);
void write_matrix(std::ostream& out, const Field& field, const Matrix& m);

}  // namespace capcodes
