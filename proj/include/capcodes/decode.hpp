#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "capcodes/linalg.hpp"
#include "capcodes/poly.hpp"

namespace capcodes {

/// Q(X, Y_1..Y_s) = A_0(X) + sum_i A_i(X) Y_i with deg A_0 <= d+k-1, deg A_i <= d.
struct InterpolationPoly {
    std::vector<Poly> A;  // A[0] .. A[s]
    int d = 0;
    unsigned k = 0;

    unsigned s() const noexcept { return static_cast<unsigned>(A.size()) - 1; }
    const FieldPtr& field() const { return A.front().field(); }
    bool is_zero() const;
};

/// { M x + z : x in GF(q)^dim }, a set of coefficient vectors of length k.
/// Canonical form: M is in reduced column echelon form (so it contains the
/// dim x dim identity on its pivot rows) and z vanishes on those rows.
struct AffineSolutionSet {
    Matrix M;
    std::vector<Elem> z;
    bool empty = false;

    std::size_t dim() const noexcept { return empty ? 0 : M.cols(); }
    /// Rows of M holding the identity, in column order.
    std::vector<std::size_t> pivot_rows() const;
    /// M x + z as a polynomial.
    Poly point(const FieldPtr& field, std::span<const Elem> x) const;
    bool contains(const Poly& f) const;
};

/// Brings (M, z) to the canonical form above. Columns of M must be independent.
void canonicalize(const Field& field, AffineSolutionSet& set);

/// Back-substitution bookkeeping shared by the two affine solvers. Each
/// message coordinate f_r is held as an affine form in the free coordinates:
/// slot 0 is the constant, slot 1+j the coefficient of free coordinate f_j.
class AffineBuilder {
public:
    using Form = std::vector<Elem>;

    AffineBuilder(FieldPtr field, unsigned k);

    Form zero() const { return Form(k_ + 1, 0); }
    /// acc += c * x
    void axpy(Form& acc, Elem c, const Form& x) const;

    /// f_r := form; the form may only involve free coordinates.
    void determine(unsigned r, Form form);
    void make_free(unsigned r);
    const Form& coord(unsigned r) const { return coords_.at(r); }
    /// Records the constraint form = 0.
    void constrain(Form form);

    /// Solves the recorded constraints over the free coordinates.
    AffineSolutionSet finish() const;

private:
    FieldPtr field_;
    unsigned k_;
    std::vector<Form> coords_;
    std::vector<bool> is_free_;
    std::vector<Form> constraints_;
};

struct Candidate {
    Poly message;
    unsigned agreement = 0;
};

struct DecodeDiagnostics {
    int d = 0;
    unsigned threshold = 0;
    int affine_dim = -1;  // -1 when the affine set is empty or unused
    std::uint64_t enumerated = 0;
    std::uint64_t nodes = 0;  // Hensel tree size
    long shift = -1;          // translation used by the derivative solver
};

struct DecodeResult {
    std::vector<Candidate> candidates;  // sorted canonically, no duplicates
    DecodeDiagnostics diag;

    bool contains(const Poly& f) const;
    std::vector<Poly> messages() const;
};

struct DecodeOptions {
    std::uint64_t budget = 1'000'000;     // affine points or oracle messages
    std::uint64_t node_budget = 100'000;  // Hensel enumeration tree
};

using Encoder = std::function<Matrix(const Poly&)>;

/// Number of identical columns. Throws ShapeMismatch.
unsigned agreement(const Matrix& codeword, const Matrix& y);

/// Enumerates every point of the set, keeps those whose encoding agrees with y
/// in >= t columns. Throws BudgetExceeded if q^dim > budget.
std::vector<Candidate> prune(const FieldPtr& field, const AffineSolutionSet& set, const Encoder& encode,
                             const Matrix& y, unsigned t, std::uint64_t budget,
                             std::uint64_t* enumerated = nullptr);

/// Sorts by canonical order and drops duplicates.
void normalize_candidates(std::vector<Candidate>& c);

/// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e);

}  // namespace capcodes
