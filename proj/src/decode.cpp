#include "capcodes/decode.hpp"

#include <algorithm>
#include <limits>

namespace capcodes {

bool InterpolationPoly::is_zero() const {
    return std::all_of(A.begin(), A.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<std::size_t> AffineSolutionSet::pivot_rows() const {
    std::vector<std::size_t> rows;
    for (std::size_t c = 0; c < M.cols(); ++c) {
        std::size_t r = 0;
        while (r < M.rows() && M.at(r, c) == 0) ++r;
        rows.push_back(r);
    }
    return rows;
}

Poly AffineSolutionSet::point(const FieldPtr& field, std::span<const Elem> x) const {
    require(!empty, ErrorKind::ParamOutOfRange, "empty affine set has no points");
    require(x.size() == M.cols(), ErrorKind::LengthMismatch, "affine coordinate count");
    std::vector<Elem> v = z;
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) v[r] = field->add(v[r], field->mul(M.at(r, c), x[c]));
    return Poly(field, std::move(v));
}

bool AffineSolutionSet::contains(const Poly& f) const {
    if (empty) return false;
    const auto& field = f.field();
    if (f.degree() >= Degree(static_cast<int>(z.size()))) return false;
    // In canonical form x is read off the pivot rows.
    const auto piv = pivot_rows();
    std::vector<Elem> x(piv.size());
    for (std::size_t c = 0; c < piv.size(); ++c) x[c] = f.coeff(piv[c]);
    return point(field, x) == f;
}

void canonicalize(const Field& field, AffineSolutionSet& set) {
    if (set.empty) return;
    const std::size_t k = set.M.rows(), dim = set.M.cols();
    Matrix t(dim, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < dim; ++c) t.at(c, r) = set.M.at(r, c);
    const auto piv = rref(field, t);
    require(piv.size() == dim, ErrorKind::ParamOutOfRange, "affine basis is not independent");
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < dim; ++c) set.M.at(r, c) = t.at(c, r);
    for (std::size_t c = 0; c < dim; ++c) {
        const Elem zc = set.z[piv[c]];
        if (zc == 0) continue;
        for (std::size_t r = 0; r < k; ++r) set.z[r] = field.sub(set.z[r], field.mul(zc, set.M.at(r, c)));
    }
}

AffineBuilder::AffineBuilder(FieldPtr field, unsigned k)
    : field_(std::move(field)), k_(k), coords_(k), is_free_(k, false) {}

void AffineBuilder::axpy(Form& acc, Elem c, const Form& x) const {
    if (c == 0) return;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = field_->add(acc[i], field_->mul(c, x[i]));
}

void AffineBuilder::determine(unsigned r, Form form) { coords_.at(r) = std::move(form); }

void AffineBuilder::make_free(unsigned r) {
    Form f = zero();
    f[1 + r] = 1;
    coords_.at(r) = std::move(f);
    is_free_.at(r) = true;
}

void AffineBuilder::constrain(Form form) {
    if (std::any_of(form.begin(), form.end(), [](Elem e) { return e != 0; }))
        constraints_.push_back(std::move(form));
}

AffineSolutionSet AffineBuilder::finish() const {
    const Field& f = *field_;
    std::vector<unsigned> frees;
    for (unsigned r = 0; r < k_; ++r)
        if (is_free_[r]) frees.push_back(r);

    // Residual system over the free coordinates: C x = -const.
    Matrix C(constraints_.size(), frees.size());
    std::vector<Elem> rhs(constraints_.size());
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        for (std::size_t j = 0; j < frees.size(); ++j) C.at(i, j) = constraints_[i][1 + frees[j]];
        rhs[i] = f.neg(constraints_[i][0]);
    }
    const auto sol = solve(f, C, rhs);
    AffineSolutionSet out;
    if (!sol) {
        out.empty = true;
        out.M = Matrix(k_, 0);
        out.z.assign(k_, 0);
        return out;
    }

    // f = F x + c with x = x0 + K y, so f = (F K) y + (F x0 + c).
    auto apply = [&](const std::vector<Elem>& x, bool with_constant) {
        std::vector<Elem> v(k_);
        for (unsigned r = 0; r < k_; ++r) {
            Elem acc = with_constant ? coords_[r][0] : 0;
            for (std::size_t j = 0; j < frees.size(); ++j)
                acc = f.add(acc, f.mul(coords_[r][1 + frees[j]], x[j]));
            v[r] = acc;
        }
        return v;
    };
    out.z = apply(sol->particular, true);
    out.M = Matrix(k_, sol->kernel.size());
    for (std::size_t c = 0; c < sol->kernel.size(); ++c) {
        const auto col = apply(sol->kernel[c], false);
        for (unsigned r = 0; r < k_; ++r) out.M.at(r, c) = col[r];
    }
    canonicalize(f, out);
    return out;
}

bool DecodeResult::contains(const Poly& f) const {
    return std::any_of(candidates.begin(), candidates.end(), [&](const Candidate& c) { return c.message == f; });
}

std::vector<Poly> DecodeResult::messages() const {
    std::vector<Poly> out;
    for (const auto& c : candidates) out.push_back(c.message);
    return out;
}

unsigned agreement(const Matrix& codeword, const Matrix& y) {
    require(codeword.rows() == y.rows() && codeword.cols() == y.cols(), ErrorKind::ShapeMismatch,
            "codeword and received word shapes differ");
    unsigned count = 0;
    for (std::size_t c = 0; c < y.cols(); ++c) {
        bool same = true;
        for (std::size_t r = 0; r < y.rows() && same; ++r) same = codeword.at(r, c) == y.at(r, c);
        count += same;
    }
    return count;
}

std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t e) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (q != 0 && v > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        v *= q;
    }
    return v;
}

void normalize_candidates(std::vector<Candidate>& c) {
    std::sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) { return a.message.canonical_less(b.message); });
    c.erase(std::unique(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) { return a.message == b.message; }),
            c.end());
}

std::vector<Candidate> prune(const FieldPtr& field, const AffineSolutionSet& set, const Encoder& encode,
                             const Matrix& y, unsigned t, std::uint64_t budget, std::uint64_t* enumerated) {
    std::vector<Candidate> out;
    if (enumerated) *enumerated = 0;
    if (set.empty) return out;
    const std::uint32_t q = field->order();
    const std::size_t dim = set.dim();
    const std::uint64_t total = saturating_pow(q, dim);
    require(total <= budget, ErrorKind::BudgetExceeded,
            "affine set has " + std::to_string(dim) + " free coordinates, too many points to enumerate");
    std::vector<Elem> x(dim, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t j = dim; j-- > 0;) {
            x[j] = static_cast<Elem>(rest % q);
            rest /= q;
        }
        Poly f = set.point(field, x);
        const unsigned agree = agreement(encode(f), y);
        if (agree >= t) out.push_back({std::move(f), agree});
    }
    if (enumerated) *enumerated = total;
    normalize_candidates(out);
    return out;
}

}  // namespace capcodes
