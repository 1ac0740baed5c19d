#include "capcodes/frs_decode.hpp"

#include <algorithm>

namespace capcodes {

namespace {

void check_shape(const FrsParams& params, const Matrix& y, unsigned s) {
    require(s >= 1 && s <= params.m, ErrorKind::ParamOutOfRange, "need 1 <= s <= m");
    require(y.rows() == params.m && y.cols() == params.N, ErrorKind::ShapeMismatch,
            "received word shape does not match parameters");
}

}  // namespace

int frs_interpolation_degree(const FrsParams& params, unsigned s) {
    require(s >= 1 && s <= params.m, ErrorKind::ParamOutOfRange, "need 1 <= s <= m");
    const long num = static_cast<long>(params.N) * (params.m - s + 1) - params.k + 1;
    require(num >= 0, ErrorKind::ParamOutOfRange, "interpolation degree would be negative");
    return static_cast<int>(num / (s + 1));
}

unsigned frs_threshold(const FrsParams& params, unsigned s) {
    const unsigned d = frs_interpolation_degree(params, s);
    const unsigned w = params.m - s + 1;
    return (d + params.k + w - 1) / w;
}

Matrix frs_constraint_matrix(const FrsParams& params, const Matrix& y, unsigned s) {
    check_shape(params, y, s);
    const Field& f = *params.field;
    const unsigned d = frs_interpolation_degree(params, s);
    const unsigned top = d + params.k;  // X-degrees 0 .. d+k-1
    const std::size_t unknowns = static_cast<std::size_t>(d + 1) * (s + 1) + params.k - 1;
    const unsigned windows = params.m - s + 1;
    Matrix A(static_cast<std::size_t>(params.N) * windows, unknowns);
    std::size_t row = 0;
    for (unsigned i = 0; i < params.N; ++i) {
        for (unsigned j = 0; j < windows; ++j, ++row) {
            const Elem x = params.point(static_cast<std::uint64_t>(i) * params.m + j);
            Elem xe = 1;
            std::size_t col = 0;
            for (unsigned e = 0; e < top; ++e) {
                A.at(row, col++) = xe;
                if (e <= d)
                    for (unsigned l = 0; l < s; ++l) A.at(row, col++) = f.mul(xe, y.at(j + l, i));
                xe = f.mul(xe, x);
            }
        }
    }
    return A;
}

InterpolationPoly interpolate(const FrsParams& params, const Matrix& y, unsigned s) {
    const Matrix A = frs_constraint_matrix(params, y, s);
    const int d = frs_interpolation_degree(params, s);
    const auto kernel = null_space(*params.field, A);
    require(!kernel.empty(), ErrorKind::NoNonzeroSolution, "interpolation system has only the zero solution");
    const auto& v = kernel.front();

    const unsigned top = d + params.k;
    std::vector<std::vector<Elem>> coeffs(s + 1);
    coeffs[0].assign(top, 0);
    for (unsigned l = 1; l <= s; ++l) coeffs[l].assign(d + 1, 0);
    std::size_t col = 0;
    for (unsigned e = 0; e < top; ++e) {
        coeffs[0][e] = v[col++];
        if (e <= static_cast<unsigned>(d))
            for (unsigned l = 1; l <= s; ++l) coeffs[l][e] = v[col++];
    }
    InterpolationPoly Q;
    Q.d = d;
    Q.k = params.k;
    for (auto& c : coeffs) Q.A.emplace_back(params.field, std::move(c));
    return Q;
}

Poly shift_form(const InterpolationPoly& Q, const Poly& f, Elem gamma) {
    const Field& fld = *Q.field();
    Poly acc = Q.A[0];
    Elem g = 1;
    for (unsigned i = 1; i <= Q.s(); ++i) {
        acc = acc + Q.A[i] * f.scale_argument(g);
        g = fld.mul(g, gamma);
    }
    return acc;
}

AffineSolutionSet solve_affine(const InterpolationPoly& Q, const FrsParams& params) {
    require(!Q.is_zero(), ErrorKind::ParamOutOfRange, "Q must be nonzero");
    const FieldPtr& field = params.field;
    const Field& f = *field;
    const unsigned s = Q.s(), k = params.k;

    // Divide out the largest common power of X.
    std::size_t strip = SIZE_MAX;
    for (const auto& a : Q.A)
        if (!a.is_zero()) strip = std::min(strip, a.x_adic_valuation());
    std::vector<std::vector<Elem>> a(s + 1);
    int top = -1;  // highest X-power of the composed polynomial
    for (unsigned i = 0; i <= s; ++i) {
        const auto& c = Q.A[i].coeffs();
        if (c.size() > strip) a[i].assign(c.begin() + static_cast<long>(strip), c.end());
        if (!a[i].empty()) top = std::max(top, static_cast<int>(a[i].size()) - 1 + (i ? static_cast<int>(k) - 1 : 0));
    }
    auto coef = [&](unsigned i, long j) -> Elem {
        return j >= 0 && static_cast<std::size_t>(j) < a[i].size() ? a[i][j] : 0;
    };

    // gpow[i][l] = gamma^{(i-1) l}
    std::vector<std::vector<Elem>> gpow(s + 1, std::vector<Elem>(k, 1));
    for (unsigned i = 1; i <= s; ++i) {
        const Elem gi = f.pow(params.gamma, i - 1);
        for (unsigned l = 1; l < k; ++l) gpow[i][l] = f.mul(gpow[i][l - 1], gi);
    }

    // Coefficient of X^r: a_{0,r} + sum_{l <= r} f_l sum_i a_{i,r-l} gamma^{(i-1)l};
    // f_r itself carries B(gamma^r) with B(X) = sum_i a_{i,0} X^{i-1}.
    AffineBuilder builder(field, k);
    for (int r = 0; r <= top; ++r) {
        auto lambda = builder.zero();
        lambda[0] = coef(0, r);
        const unsigned lmax = std::min<unsigned>(r, k - 1);
        for (unsigned l = 0; l <= lmax; ++l) {
            if (static_cast<unsigned>(r) == l && static_cast<unsigned>(r) < k) continue;
            Elem c = 0;
            for (unsigned i = 1; i <= s; ++i) c = f.add(c, f.mul(coef(i, r - l), gpow[i][l]));
            builder.axpy(lambda, c, builder.coord(l));
        }
        if (static_cast<unsigned>(r) >= k) {
            builder.constrain(std::move(lambda));
            continue;
        }
        Elem b = 0;
        for (unsigned i = 1; i <= s; ++i) b = f.add(b, f.mul(coef(i, 0), gpow[i][r]));
        if (b != 0) {
            auto form = builder.zero();
            builder.axpy(form, f.neg(f.inv(b)), lambda);
            builder.determine(r, std::move(form));
        } else {
            builder.make_free(r);
            builder.constrain(std::move(lambda));
        }
    }
    // Coordinates beyond the composed degree never appear: they are free.
    for (unsigned r = static_cast<unsigned>(std::max(top + 1, 0)); r < k; ++r) builder.make_free(r);
    return builder.finish();
}

DecodeResult list_decode(const FrsParams& params, const Matrix& y, unsigned s, const DecodeOptions& opt) {
    check_shape(params, y, s);
    DecodeResult res;
    const InterpolationPoly Q = interpolate(params, y, s);
    res.diag.d = Q.d;
    res.diag.threshold = frs_threshold(params, s);
    const AffineSolutionSet set = solve_affine(Q, params);
    res.diag.affine_dim = set.empty ? -1 : static_cast<int>(set.dim());
    res.candidates = prune(
        params.field, set, [&](const Poly& f) { return frs_encode(params, f); }, y, res.diag.threshold, opt.budget,
        &res.diag.enumerated);
    return res;
}

}  // namespace capcodes
