#include "capcodes/derivative.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "capcodes/frs.hpp"

namespace capcodes {

DerParams DerParams::make(FieldPtr field, unsigned m, unsigned n, unsigned k) {
    std::vector<Elem> pts;
    Elem x = 1;
    for (unsigned i = 0; i < n && i + 1 < field->order(); ++i) {
        pts.push_back(x);
        x = field->mul(x, field->primitive());
    }
    require(pts.size() == n, ErrorKind::ParamOutOfRange, "not enough distinct nonzero points");
    return make(std::move(field), m, k, std::move(pts));
}

DerParams DerParams::make(FieldPtr field, unsigned m, unsigned k, std::vector<Elem> points) {
    DerParams p{std::move(field), m, static_cast<unsigned>(points.size()), k, std::move(points)};
    p.validate();
    return p;
}

void DerParams::validate() const {
    require(field != nullptr, ErrorKind::ParamOutOfRange, "missing field");
    require(m >= 1 && m <= k, ErrorKind::ParamOutOfRange, "need 1 <= m <= k");
    require(k < static_cast<std::uint64_t>(n) * m, ErrorKind::ParamOutOfRange, "need k < nm");
    require(static_cast<std::uint64_t>(n) * m <= field->order(), ErrorKind::ParamOutOfRange, "need nm <= q");
    require(field->characteristic() > k, ErrorKind::ParamOutOfRange, "need characteristic > k");
    require(points.size() == n, ErrorKind::LengthMismatch, "point count must equal n");
    std::set<Elem> seen;
    for (Elem a : points) {
        require(field->contains(a), ErrorKind::ParamOutOfRange, "point outside the field");
        require(seen.insert(a).second, ErrorKind::ParamOutOfRange, "evaluation points must be distinct");
    }
}

Matrix der_encode(const DerParams& params, const Poly& f) {
    require_same_field(*params.field, *f.field());
    require(f.degree() < Degree(static_cast<int>(params.k)), ErrorKind::DegreeTooLarge,
            "message degree must be < k");
    Matrix out(params.m, params.n);
    Poly g = f;
    for (unsigned j = 0; j < params.m; ++j) {
        for (unsigned i = 0; i < params.n; ++i) out.at(j, i) = g.eval(params.points[i]);
        g = g.formal_derivative(1);
    }
    return out;
}

DOperatorPoly DOperatorPoly::zero(const FieldPtr& field, unsigned m) {
    return DOperatorPoly{std::vector<Poly>(m + 1, Poly(field))};
}

Elem DOperatorPoly::eval(Elem x, std::span<const Elem> ys) const {
    require(ys.size() >= m(), ErrorKind::LengthMismatch, "need one value per Y variable");
    const Field& f = *B.front().field();
    Elem acc = B[0].eval(x);
    for (unsigned i = 1; i <= m(); ++i)
        if (!B[i].is_zero()) acc = f.add(acc, f.mul(B[i].eval(x), ys[i - 1]));
    return acc;
}

DOperatorPoly d_operator(const DOperatorPoly& P) {
    const unsigned m = P.m();
    DOperatorPoly out = DOperatorPoly::zero(P.B.front().field(), m);
    out.B[0] = P.B[0].formal_derivative(1);
    for (unsigned i = 1; i <= m; ++i) {
        if (P.B[i].is_zero()) continue;
        require(i < m, ErrorKind::IndexOverflow, "D would produce a Y_{m+1} term");
        out.B[i] = out.B[i] + P.B[i].formal_derivative(1);
        out.B[i + 1] = out.B[i + 1] + P.B[i];
    }
    return out;
}

int der_interpolation_degree(const DerParams& params, unsigned s) {
    require(s >= 1 && s <= params.m, ErrorKind::ParamOutOfRange, "need 1 <= s <= m");
    const long num = static_cast<long>(params.n) * (params.m - s + 1) - params.k + 1;
    require(num >= 0, ErrorKind::ParamOutOfRange, "interpolation degree would be negative");
    return static_cast<int>(num / (s + 1));
}

unsigned der_threshold(const DerParams& params, unsigned s) {
    const unsigned d = der_interpolation_degree(params, s);
    return (d + params.k - 1) / (params.m - s + 1) + 1;
}

Matrix der_constraint_matrix(const DerParams& params, const Matrix& y, unsigned s) {
    require(y.rows() == params.m && y.cols() == params.n, ErrorKind::ShapeMismatch,
            "received word shape does not match parameters");
    const unsigned d = der_interpolation_degree(params, s);
    const unsigned top = d + params.k;
    const unsigned powers = params.m - s + 1;
    const FieldPtr& field = params.field;

    // D^j applied to every basis monomial, in unknown order.
    std::vector<std::vector<DOperatorPoly>> images;  // [unknown][j]
    for (unsigned e = 0; e < top; ++e) {
        for (unsigned l = 0; l <= s; ++l) {
            if (l > 0 && e > d) continue;
            DOperatorPoly P = DOperatorPoly::zero(field, params.m);
            P.B[l] = Poly::monomial(field, 1, e);
            std::vector<DOperatorPoly> chain{P};
            for (unsigned j = 1; j < powers; ++j) chain.push_back(d_operator(chain.back()));
            images.push_back(std::move(chain));
        }
    }

    Matrix A(static_cast<std::size_t>(params.n) * powers, images.size());
    std::vector<Elem> col(params.m);
    for (unsigned i = 0; i < params.n; ++i) {
        for (unsigned r = 0; r < params.m; ++r) col[r] = y.at(r, i);
        for (unsigned j = 0; j < powers; ++j)
            for (std::size_t u = 0; u < images.size(); ++u)
                A.at(static_cast<std::size_t>(i) * powers + j, u) = images[u][j].eval(params.points[i], col);
    }
    return A;
}

InterpolationPoly der_interpolate(const DerParams& params, const Matrix& y, unsigned s) {
    const Matrix A = der_constraint_matrix(params, y, s);
    const int d = der_interpolation_degree(params, s);
    const auto kernel = null_space(*params.field, A);
    require(!kernel.empty(), ErrorKind::NoNonzeroSolution, "interpolation system has only the zero solution");
    const auto& v = kernel.front();
    const unsigned top = d + params.k;
    std::vector<std::vector<Elem>> coeffs(s + 1);
    coeffs[0].assign(top, 0);
    for (unsigned l = 1; l <= s; ++l) coeffs[l].assign(d + 1, 0);
    std::size_t u = 0;
    for (unsigned e = 0; e < top; ++e) {
        coeffs[0][e] = v[u++];
        if (e <= static_cast<unsigned>(d))
            for (unsigned l = 1; l <= s; ++l) coeffs[l][e] = v[u++];
    }
    InterpolationPoly Q;
    Q.d = d;
    Q.k = params.k;
    for (auto& c : coeffs) Q.A.emplace_back(params.field, std::move(c));
    return Q;
}

Poly derivative_form(const InterpolationPoly& Q, const Poly& f) {
    Poly acc = Q.A[0];
    Poly g = f;
    for (unsigned i = 1; i <= Q.s(); ++i) {
        acc = acc + Q.A[i] * g;
        g = g.formal_derivative(1);
    }
    return acc;
}

AffineSolutionSet der_solve_affine_direct(const InterpolationPoly& Q, unsigned k) {
    const unsigned s = Q.s();
    require(s >= 1, ErrorKind::ParamOutOfRange, "need at least one Y variable");
    const FieldPtr& field = Q.field();
    const Field& f = *field;
    require(Q.A[s].coeff(0) != 0, ErrorKind::ShiftRequired, "A_s(0) = 0: translate X first");

    auto a = [&](unsigned j, long e) -> Elem { return e >= 0 ? Q.A[j].coeff(static_cast<std::size_t>(e)) : 0; };
    long top = static_cast<long>(k) - static_cast<long>(s);  // so every f_l is reached
    top = std::max(top, static_cast<long>(Q.A[0].degree().value()));
    for (unsigned j = 1; j <= s; ++j)
        if (!Q.A[j].is_zero()) top = std::max(top, static_cast<long>(Q.A[j].degree().value() + k) - j);

    // Coefficient of X^r: a_{0r} + sum_j sum_{u<=r} a_{j,r-u} f_{u+j-1} (u+j-1)!/u!.
    // The highest coordinate reached is f_{r+s-1}, through a_{s0} (r+s-1)!/r!.
    AffineBuilder builder(field, k);
    for (unsigned l = 0; l + 1 < s && l < k; ++l) builder.make_free(l);
    for (long r = 0; r <= top; ++r) {
        const long target = r + s - 1;
        auto xi = builder.zero();
        xi[0] = a(0, r);
        for (unsigned j = 1; j <= s; ++j)
            for (long u = 0; u <= r; ++u) {
                const long idx = u + j - 1;
                if (idx >= static_cast<long>(k) || (j == s && u == r && target < static_cast<long>(k))) continue;
                const Elem c = f.mul(a(j, r - u), falling_factorial(f, idx, j - 1));
                builder.axpy(xi, c, builder.coord(static_cast<unsigned>(idx)));
            }
        if (target >= static_cast<long>(k)) {
            builder.constrain(std::move(xi));
            continue;
        }
        const Elem lead = f.mul(Q.A[s].coeff(0), falling_factorial(f, target, s - 1));
        require(lead != 0, ErrorKind::ParamOutOfRange, "factorial coefficient vanished; need characteristic > k");
        auto form = builder.zero();
        builder.axpy(form, f.neg(f.inv(lead)), xi);
        builder.determine(static_cast<unsigned>(target), std::move(form));
    }
    return builder.finish();
}

AffineSolutionSet der_solve_affine(const InterpolationPoly& Q, const DerParams& params, long* shift) {
    require(!Q.is_zero(), ErrorKind::ParamOutOfRange, "Q must be nonzero");
    const FieldPtr& field = params.field;
    const Field& f = *field;
    const unsigned k = params.k;
    if (shift) *shift = -1;

    // Back-substitution pivots on the last nonzero A_i.
    InterpolationPoly R = Q;
    while (R.A.size() > 1 && R.A.back().is_zero()) R.A.pop_back();
    if (R.s() == 0) {
        AffineSolutionSet none;
        none.empty = true;
        none.M = Matrix(k, 0);
        none.z.assign(k, 0);
        return none;  // only A_0 != 0 remains, which cannot vanish
    }
    const Poly& lead = R.A.back();
    if (lead.coeff(0) != 0) return der_solve_affine_direct(R, k);

    Elem beta = 0;
    while (lead.eval(beta) == 0) ++beta;  // lead has degree < q, so some beta works
    if (shift) *shift = beta;
    for (auto& a : R.A) a = a.translate(beta);
    AffineSolutionSet g = der_solve_affine_direct(R, k);
    if (g.empty) return g;

    // f(X) = g(X - beta): column l of T holds the coefficients of (X - beta)^l.
    Matrix T(k, k);
    Poly pw = Poly::constant(field, 1);
    const Poly lin(field, std::vector<Elem>{f.neg(beta), 1});
    for (unsigned l = 0; l < k; ++l) {
        for (unsigned r = 0; r < k; ++r) T.at(r, l) = pw.coeff(r);
        pw = pw * lin;
    }
    AffineSolutionSet out;
    out.M = Matrix(k, g.M.cols());
    out.z.assign(k, 0);
    for (unsigned r = 0; r < k; ++r)
        for (unsigned l = 0; l < k; ++l) {
            const Elem t = T.at(r, l);
            if (t == 0) continue;
            out.z[r] = f.add(out.z[r], f.mul(t, g.z[l]));
            for (std::size_t c = 0; c < g.M.cols(); ++c) out.M.at(r, c) = f.add(out.M.at(r, c), f.mul(t, g.M.at(l, c)));
        }
    canonicalize(f, out);
    return out;
}

DecodeResult der_list_decode(const DerParams& params, const Matrix& y, unsigned s, const DecodeOptions& opt) {
    DecodeResult res;
    const InterpolationPoly Q = der_interpolate(params, y, s);
    res.diag.d = Q.d;
    res.diag.threshold = der_threshold(params, s);
    const AffineSolutionSet set = der_solve_affine(Q, params, &res.diag.shift);
    res.diag.affine_dim = set.empty ? -1 : static_cast<int>(set.dim());
    res.candidates = prune(
        params.field, set, [&](const Poly& f) { return der_encode(params, f); }, y, res.diag.threshold, opt.budget,
        &res.diag.enumerated);
    return res;
}

void write_der_word(std::ostream& out, const DerParams& params, const Matrix& word) {
    require(word.rows() == params.m && word.cols() == params.n, ErrorKind::ShapeMismatch,
            "word shape does not match parameters");
    const Field& f = *params.field;
    out << f.order() << ' ' << params.m << ' ' << params.n << ' ' << params.k << '\n';
    for (unsigned i = 0; i < params.n; ++i) out << (i ? " " : "") << f.format(params.points[i]);
    out << '\n';
    write_matrix(out, f, word);
}

DerWord read_der_word(std::istream& in) {
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorKind::Parse, "missing header");
    std::istringstream hs(line);
    std::uint64_t q = 0;
    unsigned m = 0, n = 0, k = 0;
    require(static_cast<bool>(hs >> q >> m >> n >> k), ErrorKind::Parse, "header must be `q m n k`");
    auto field = Field::make(q);
    const Matrix pts = read_matrix(in, *field, 1, n);
    std::vector<Elem> points(pts.row(0).begin(), pts.row(0).end());
    DerParams params = DerParams::make(field, m, k, std::move(points));
    Matrix word = read_matrix(in, *field, m, n);
    return {std::move(params), std::move(word)};
}

}  // namespace capcodes
