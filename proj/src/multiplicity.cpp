#include "capcodes/multiplicity.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "capcodes/errors.hpp"
#include "capcodes/linalg.hpp"

namespace capcodes {

namespace {

// Exact C(n, k) with overflow detection.
std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        require(r <= INT64_MAX, ErrorKind::ParamOutOfRange, "binomial coefficient overflows");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= b;
        require(r <= INT64_MAX, ErrorKind::ParamOutOfRange, "q^m overflows");
    }
    return static_cast<std::uint64_t>(r);
}

// b^i = prod_v b_v^{i_v}
Elem monomial_at(const Field& f, std::span<const Elem> b, const Exponent& i) {
    Elem r = 1;
    for (std::size_t v = 0; v < i.size(); ++v) r = f.mul(r, f.pow(b[v], i[v]));
    return r;
}

bool is_zero_vector(std::span<const Elem> b) {
    for (Elem x : b)
        if (x != 0) return false;
    return true;
}

std::vector<Point> sample_directions(const MultParams& p, Rng& rng, std::size_t count) {
    const std::uint64_t total = p.length() - 1;  // nonzero directions
    require(count <= total, ErrorKind::ParamOutOfRange, "not enough nonzero directions");
    std::vector<std::uint64_t> picked;
    while (picked.size() < count) {
        const std::uint64_t idx = 1 + rng.below(total);
        if (std::find(picked.begin(), picked.end(), idx) == picked.end()) picked.push_back(idx);
    }
    std::vector<Point> out;
    for (auto idx : picked) out.push_back(p.point(idx));
    return out;
}

Elem hasse_coeff(const Field& f, unsigned u, unsigned j, Elem t) {
    if (u < j) return 0;
    const Elem c = f.from_int(binomial_mod(u, j, f.characteristic()));
    return f.mul(c, f.pow(t, u - j));
}

}  // namespace

MultParams MultParams::make(FieldPtr field, unsigned m, unsigned s, unsigned d) {
    MultParams p{std::move(field), m, s, d};
    p.validate();
    return p;
}

void MultParams::validate() const {
    require(field != nullptr, ErrorKind::ParamOutOfRange, "missing field");
    require(m >= 1, ErrorKind::ParamOutOfRange, "m must be at least 1");
    require(s >= 1, ErrorKind::ParamOutOfRange, "s must be at least 1");
    require(static_cast<std::uint64_t>(d) < static_cast<std::uint64_t>(s) * field->order(),
            ErrorKind::ParamOutOfRange, "need d < s q");
    (void)length();
}

std::size_t MultParams::w() const { return choose(m + s - 1, m); }

std::uint64_t MultParams::length() const { return ipow(field->order(), m); }

Rational MultParams::delta() const {
    return Rational(1) - Rational(d, static_cast<std::int64_t>(s) * field->order());
}

std::vector<Exponent> MultParams::symbol_layout() const { return exponents_below_weight(m, s); }

std::vector<Exponent> MultParams::message_layout() const { return exponents_below_weight(m, d + 1); }

Point MultParams::point(std::uint64_t idx) const {
    const std::uint32_t q = field->order();
    Point a(m);
    for (std::size_t v = m; v-- > 0;) {
        a[v] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return a;
}

std::uint64_t MultParams::index_of(std::span<const Elem> a) const {
    require(a.size() == m, ErrorKind::ArityMismatch, "point has wrong arity");
    std::uint64_t idx = 0;
    for (Elem x : a) {
        require(field->contains(x), ErrorKind::ParamOutOfRange, "coordinate outside the field");
        idx = idx * field->order() + x;
    }
    return idx;
}

Symbol order_s_eval(const MultiPoly& P, std::span<const Elem> a, unsigned s) {
    require(a.size() == P.arity(), ErrorKind::ArityMismatch, "point arity differs from polynomial arity");
    Symbol out;
    for (const auto& i : exponents_below_weight(P.arity(), s)) out.push_back(P.hasse_eval(i, a));
    return out;
}

MultWord mult_encode(const MultParams& params, const MultiPoly& P) {
    params.validate();
    require(P.arity() == params.m, ErrorKind::ArityMismatch, "message arity differs from m");
    require(P.total_degree() <= Degree(static_cast<int>(params.d)), ErrorKind::DegreeTooLarge,
            "message degree exceeds d");
    MultWord word{params, {}};
    const std::uint64_t n = params.length();
    word.symbols.reserve(n);
    for (std::uint64_t idx = 0; idx < n; ++idx) word.symbols.push_back(order_s_eval(P, params.point(idx), params.s));
    return word;
}

MultReport mult_params_report(const MultParams& params) {
    params.validate();
    const auto msg = choose(params.d + params.m, params.m);
    const auto q = static_cast<std::int64_t>(params.field->order());
    const auto denom = static_cast<std::int64_t>(params.w()) * static_cast<std::int64_t>(params.length());
    const Rational one_minus_delta(params.d, static_cast<std::int64_t>(params.s) * q);
    Rational pw(1);
    for (unsigned i = 0; i < params.m; ++i) pw *= one_minus_delta;
    const Rational lead = Rational(1) - Rational(static_cast<std::int64_t>(params.m) * params.m, params.s);
    return {Rational(static_cast<std::int64_t>(msg), denom), params.delta(), msg, lead * pw};
}

Poly restrict_to_line(const MultiPoly& P, std::span<const Elem> a, std::span<const Elem> b) {
    require(a.size() == P.arity() && b.size() == P.arity(), ErrorKind::ArityMismatch,
            "line arity differs from polynomial arity");
    require(!is_zero_vector(b), ErrorKind::ZeroDirection, "direction is zero");
    const FieldPtr& f = P.field();
    // powers[v][e] = (a_v + b_v T)^e
    std::vector<std::vector<Poly>> powers(P.arity());
    for (std::size_t v = 0; v < P.arity(); ++v) powers[v].push_back(Poly::constant(f, 1));
    Poly out(f);
    for (const auto& [i, c] : P.terms()) {
        Poly term = Poly::constant(f, c);
        for (std::size_t v = 0; v < P.arity(); ++v) {
            auto& pv = powers[v];
            while (pv.size() <= i[v]) pv.push_back(pv.back() * Poly(f, std::vector<Elem>{a[v], b[v]}));
            term = term * pv[i[v]];
        }
        out = out + term;
    }
    return out;
}

SymbolOracle SymbolOracle::of(const MultWord& word) {
    return SymbolOracle([&word](std::span<const Elem> a) { return word.at(a); });
}

LineTranscript line_transcript(const MultParams& params, const SymbolOracle& r, std::span<const Elem> a,
                               std::span<const Elem> b) {
    require(a.size() == params.m && b.size() == params.m, ErrorKind::ArityMismatch, "line arity differs from m");
    require(!is_zero_vector(b), ErrorKind::ZeroDirection, "direction is zero");
    const Field& f = *params.field;
    const auto layout = params.symbol_layout();
    std::vector<Elem> bpow;
    for (const auto& i : layout) bpow.push_back(monomial_at(f, b, i));

    LineTranscript out{Point(a.begin(), a.end()), Point(b.begin(), b.end()), {}};
    Point x(params.m);
    for (Elem t = 0; t < f.order(); ++t) {
        for (std::size_t v = 0; v < params.m; ++v) x[v] = f.add(a[v], f.mul(b[v], t));
        const Symbol sym = r.query(x);
        require(sym.size() == layout.size(), ErrorKind::LengthMismatch, "symbol has wrong width");
        Symbol ell(params.s, 0);
        for (std::size_t pos = 0; pos < layout.size(); ++pos) {
            const unsigned j = weight(layout[pos]);
            ell[j] = f.add(ell[j], f.mul(sym[pos], bpow[pos]));
        }
        out.values.push_back(std::move(ell));
    }
    return out;
}

std::vector<Symbol> univariate_mult_encode(const Poly& Q, unsigned s) {
    const Field& f = *Q.field();
    std::vector<Poly> ders;
    for (unsigned j = 0; j < s; ++j) ders.push_back(Q.hasse_derivative(j));
    std::vector<Symbol> out;
    for (Elem t = 0; t < f.order(); ++t) {
        Symbol sym;
        for (const auto& dq : ders) sym.push_back(dq.eval(t));
        out.push_back(std::move(sym));
    }
    return out;
}

std::optional<Poly> univariate_mult_decode(const FieldPtr& field, const std::vector<Symbol>& transcript, unsigned s,
                                           unsigned d, const Rational& max_err_frac) {
    const Field& f = *field;
    const std::uint32_t q = f.order();
    require(s >= 1, ErrorKind::ParamOutOfRange, "s must be at least 1");
    require(transcript.size() == q, ErrorKind::LengthMismatch, "transcript must have q entries");
    for (const auto& sym : transcript) require(sym.size() == s, ErrorKind::LengthMismatch, "entry must have s values");
    require(max_err_frac >= 0, ErrorKind::ParamOutOfRange, "negative error fraction");
    const Rational delta = Rational(1) - Rational(d, static_cast<std::int64_t>(s) * q);
    require(max_err_frac < delta / 2, ErrorKind::ParamOutOfRange, "error fraction must be below delta/2");

    const auto e_max = static_cast<unsigned>(floor_of(max_err_frac * static_cast<std::int64_t>(q)));
    const unsigned dE = s * e_max;
    const unsigned dN = d + s * e_max;
    const std::size_t nE = dE + 1, nN = dN + 1;

    // Rows (t, j): N^{(j)}(t) - sum_{l<=j} E^{(l)}(t) ell(t)_{j-l} = 0.
    Matrix A(static_cast<std::size_t>(q) * s, nE + nN);
    for (Elem t = 0; t < q; ++t) {
        const Symbol& ell = transcript[t];
        for (unsigned j = 0; j < s; ++j) {
            auto row = A.row(static_cast<std::size_t>(t) * s + j);
            for (unsigned u = j; u <= dN; ++u) row[nE + u] = hasse_coeff(f, u, j, t);
            for (unsigned l = 0; l <= j; ++l) {
                if (ell[j - l] == 0) continue;
                for (unsigned u = l; u <= dE; ++u)
                    row[u] = f.sub(row[u], f.mul(hasse_coeff(f, u, l, t), ell[j - l]));
            }
        }
    }
    const auto kernel = null_space(f, A);
    if (kernel.empty()) return std::nullopt;
    const auto& v = kernel.front();
    const Poly E(field, std::vector<Elem>(v.begin(), v.begin() + nE));
    const Poly N(field, std::vector<Elem>(v.begin() + nE, v.end()));
    if (E.is_zero()) return std::nullopt;
    auto [Q, rem] = N.divmod(E);
    if (!rem.is_zero() || Q.degree() > Degree(static_cast<int>(d))) return std::nullopt;

    const auto enc = univariate_mult_encode(Q, s);
    unsigned errors = 0;
    for (Elem t = 0; t < q; ++t) errors += enc[t] != transcript[t];
    if (errors > e_max) return std::nullopt;
    return Q;
}

Rational default_line_radius(const MultParams& params) {
    const auto q = static_cast<std::int64_t>(params.field->order());
    const std::int64_t e = ceil_of(params.delta() * q / 2) - 1;
    return Rational(std::max<std::int64_t>(e, 0), q);
}

bool local_size_bound(const MultParams& params) {
    const Rational q(params.field->order());
    return q >= Rational(10 * params.m) && q >= Rational(params.d + 6, params.s) && q >= Rational(5 * (params.s + 1));
}

LocalResult local_correct(const MultParams& params, const SymbolOracle& r, std::span<const Elem> a, Rng& rng,
                          const LocalOptions& opt) {
    params.validate();
    require(a.size() == params.m, ErrorKind::ArityMismatch, "target point has wrong arity");
    require(opt.max_attempts >= 1, ErrorKind::ParamOutOfRange, "need at least one attempt");
    const Field& f = *params.field;
    const auto layout = params.symbol_layout();
    const std::size_t w = layout.size();
    const Rational radius = default_line_radius(params);

    std::map<Exponent, std::size_t> slot;
    for (std::size_t pos = 0; pos < w; ++pos) slot[layout[pos]] = pos;

    LocalResult res;
    res.size_bound_holds = local_size_bound(params);
    for (unsigned attempt = 1; attempt <= opt.max_attempts; ++attempt) {
        res.attempts = attempt;
        const auto B = sample_directions(params, rng, w);
        std::vector<LineTranscript> lines;
        for (const auto& b : B) {
            lines.push_back(line_transcript(params, r, a, b));
            res.queries += f.order();
        }

        // B must be an interpolating set for degree < s.
        Matrix V(w, w);
        for (std::size_t row = 0; row < w; ++row)
            for (std::size_t col = 0; col < w; ++col) V.at(row, col) = monomial_at(f, B[row], layout[col]);
        if (rank(f, V) < w) continue;

        std::vector<Poly> Qs;
        for (const auto& line : lines) {
            auto Q = univariate_mult_decode(params.field, line.values, params.s, params.d, radius);
            if (!Q) break;
            Qs.push_back(std::move(*Q));
        }
        if (Qs.size() != w) continue;

        Symbol out(w, 0);
        bool ok = true;
        for (unsigned e = 0; e < params.s && ok; ++e) {
            const auto exps = exponents_of_weight(params.m, e);
            Matrix M(w, exps.size());
            std::vector<Elem> rhs(w);
            for (std::size_t row = 0; row < w; ++row) {
                for (std::size_t col = 0; col < exps.size(); ++col) M.at(row, col) = monomial_at(f, B[row], exps[col]);
                rhs[row] = Qs[row].coeff(e);
            }
            auto sol = solve(f, M, rhs);
            if (!sol || !sol->kernel.empty()) {
                ok = false;
                break;
            }
            for (std::size_t col = 0; col < exps.size(); ++col) out[slot.at(exps[col])] = sol->particular[col];
        }
        if (!ok) continue;
        res.symbol = std::move(out);
        return res;
    }
    return res;
}

LocalResult bivariate_correct(const MultParams& params, const SymbolOracle& r, std::span<const Elem> a, Rng& rng,
                              unsigned direction_retries) {
    params.validate();
    require(params.m == 2 && params.s == 2, ErrorKind::ParamOutOfRange, "bivariate corrector needs m = s = 2");
    require(a.size() == 2, ErrorKind::ArityMismatch, "target point has wrong arity");
    const Field& f = *params.field;
    LocalResult res;
    res.attempts = 1;
    res.size_bound_holds = local_size_bound(params);

    const Point b = sample_directions(params, rng, 1).front();
    Point c;
    bool found = false;
    for (unsigned i = 0; i <= direction_retries && !found; ++i) {
        c = sample_directions(params, rng, 1).front();
        found = f.sub(f.mul(b[0], c[1]), f.mul(b[1], c[0])) != 0;
    }
    if (!found) return res;

    const Rational radius = default_line_radius(params);
    const auto lb = line_transcript(params, r, a, b);
    const auto lc = line_transcript(params, r, a, c);
    res.queries = 2ull * f.order();
    const auto Qb = univariate_mult_decode(params.field, lb.values, 2, params.d, radius);
    const auto Qc = univariate_mult_decode(params.field, lc.values, 2, params.d, radius);
    if (!Qb || !Qc || Qb->coeff(0) != Qc->coeff(0)) return res;

    // b_1 Px + b_2 Py = Q_b'(0), likewise for c.
    Matrix M(2, 2);
    M.at(0, 0) = b[0];
    M.at(0, 1) = b[1];
    M.at(1, 0) = c[0];
    M.at(1, 1) = c[1];
    const std::vector<Elem> rhs{Qb->coeff(1), Qc->coeff(1)};
    auto sol = solve(f, M, rhs);
    if (!sol || !sol->kernel.empty()) return res;
    res.symbol = Symbol{Qb->coeff(0), sol->particular[0], sol->particular[1]};
    return res;
}

void write_mult_word(std::ostream& out, const MultWord& word) {
    const auto& p = word.params;
    const Field& f = *p.field;
    out << f.order() << ' ' << p.m << ' ' << p.s << ' ' << p.d << '\n';
    for (std::uint64_t idx = 0; idx < word.symbols.size(); ++idx) {
        const Point a = p.point(idx);
        bool first = true;
        for (Elem x : a) {
            out << (first ? "" : " ") << f.format(x);
            first = false;
        }
        for (Elem x : word.symbols[idx]) out << ' ' << f.format(x);
        out << '\n';
    }
    if (!out) fail(ErrorKind::Parse, "failed writing multiplicity codeword");
}

MultWord read_mult_word(std::istream& in) {
    std::uint64_t q = 0;
    unsigned m = 0, s = 0, d = 0;
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::Parse, "missing header");
    std::istringstream hs(line);
    if (!(hs >> q >> m >> s >> d)) fail(ErrorKind::Parse, "bad header, expected `q m s d`");
    const auto params = MultParams::make(Field::make(q), m, s, d);
    const Field& f = *params.field;
    const std::size_t w = params.w();
    const std::uint64_t n = params.length();
    MultWord word{params, std::vector<Symbol>(n)};
    std::vector<bool> seen(n, false);
    for (std::uint64_t row = 0; row < n; ++row) {
        if (!std::getline(in, line)) fail(ErrorKind::Parse, "missing point line");
        std::istringstream ls(line);
        std::vector<Elem> vals;
        std::string tok;
        while (ls >> tok) vals.push_back(f.parse(tok));
        if (vals.size() != m + w) fail(ErrorKind::Parse, "point line needs m + w entries");
        const std::uint64_t idx = params.index_of(std::span<const Elem>(vals.data(), m));
        if (seen[idx]) fail(ErrorKind::Parse, "duplicate point");
        seen[idx] = true;
        word.symbols[idx].assign(vals.begin() + m, vals.end());
    }
    return word;
}

void write_mult_message(std::ostream& out, const MultiPoly& P) {
    const Field& f = *P.field();
    for (const auto& [i, c] : P.terms()) {
        for (auto e : i) out << e << ' ';
        out << f.format(c) << '\n';
    }
    if (!out) fail(ErrorKind::Parse, "failed writing message");
}

MultiPoly read_mult_message(std::istream& in, const FieldPtr& field, unsigned m) {
    MultiPoly P(field, m);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != m + 1) fail(ErrorKind::Parse, "message line needs m exponents and a coefficient");
        Exponent i(m);
        for (unsigned v = 0; v < m; ++v) {
            try {
                std::size_t used = 0;
                const unsigned long e = std::stoul(toks[v], &used);
                if (used != toks[v].size() || e > 1'000'000) throw std::invalid_argument("exponent");
                i[v] = static_cast<std::uint32_t>(e);
            } catch (const std::logic_error&) {
                fail(ErrorKind::Parse, "bad exponent `" + toks[v] + "`");
            }
        }
        P.add_term(i, field->parse(toks[m]));
    }
    return P;
}

}  // namespace capcodes
