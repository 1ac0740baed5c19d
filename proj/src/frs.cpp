#include "capcodes/frs.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace capcodes {

FrsParams FrsParams::make(FieldPtr field, unsigned m, unsigned k) {
    const Elem g = field->primitive();
    return make(std::move(field), m, k, g);
}

FrsParams FrsParams::make(FieldPtr field, unsigned m, unsigned k, Elem gamma) {
    require(m >= 1, ErrorKind::ParamOutOfRange, "folding parameter m must be >= 1");
    const std::uint32_t n = field->order() - 1;
    require(n % m == 0, ErrorKind::ParamOutOfRange, "m must divide q-1");
    FrsParams p{std::move(field), m, n / m, k, gamma};
    p.validate();
    return p;
}

void FrsParams::validate() const {
    require(field != nullptr, ErrorKind::ParamOutOfRange, "missing field");
    require(m >= 1 && N * m == field->order() - 1, ErrorKind::ParamOutOfRange, "need N*m = q-1");
    require(k >= 1 && k <= n(), ErrorKind::ParamOutOfRange, "need 1 <= k <= n");
    require(field->contains(gamma) && field->is_primitive(gamma), ErrorKind::ParamOutOfRange,
            "gamma must be primitive");
}

Matrix frs_encode(const FrsParams& params, const Poly& f) {
    require_same_field(*params.field, *f.field());
    require(f.degree() < Degree(static_cast<int>(params.k)), ErrorKind::DegreeTooLarge,
            "message degree must be < k");
    const Field& fld = *params.field;
    Matrix out(params.m, params.N);
    Elem x = 1;
    for (unsigned i = 0; i < params.N; ++i)
        for (unsigned j = 0; j < params.m; ++j) {
            out.at(j, i) = f.eval(x);
            x = fld.mul(x, params.gamma);
        }
    return out;
}

Matrix fold(std::span<const Elem> v, unsigned m) {
    require(m >= 1 && v.size() % m == 0, ErrorKind::LengthMismatch, "m must divide the vector length");
    const std::size_t cols = v.size() / m;
    Matrix out(m, cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (unsigned j = 0; j < m; ++j) out.at(j, i) = v[i * m + j];
    return out;
}

std::vector<Elem> unfold(const Matrix& folded) {
    std::vector<Elem> v;
    v.reserve(folded.rows() * folded.cols());
    for (std::size_t i = 0; i < folded.cols(); ++i)
        for (std::size_t j = 0; j < folded.rows(); ++j) v.push_back(folded.at(j, i));
    return v;
}

FrsDerived frs_derived_params(const FrsParams& params) {
    const unsigned blocks = (params.k + params.m - 1) / params.m;
    return {Rational(params.k, params.n()), params.N - blocks + 1};
}

long frs_decoding_radius(const FrsParams& params, unsigned s, const Rational& delta) {
    using boost::multiprecision::cpp_int;
    require(s >= 1 && s <= params.m, ErrorKind::ParamOutOfRange, "need 1 <= s <= m");
    require(delta >= 0, ErrorKind::ParamOutOfRange, "delta must be non-negative");
    const unsigned window = params.m - s + 1;

    // floor(N - x) = N - ceil(x), x = (1+delta) * A^{1/(s+1)} / window with
    // A = k^s N window. The least integer c >= x is the least c >= 0 with
    // (c * b * window)^{s+1} >= (a+b)^{s+1} A, delta = a/b.
    cpp_int A = cpp_int(params.N) * window;
    for (unsigned i = 0; i < s; ++i) A *= params.k;
    const cpp_int a = delta.numerator(), b = delta.denominator();
    const cpp_int rhs = boost::multiprecision::pow(cpp_int(a + b), s + 1) * A;
    auto enough = [&](long c) {
        return boost::multiprecision::pow(cpp_int(c) * b * window, s + 1) >= rhs;
    };
    long hi = 1;
    while (!enough(hi)) hi *= 2;
    long lo = 0;  // A >= 1, so c = 0 never suffices
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        (enough(mid) ? hi : lo) = mid;
    }
    return static_cast<long>(params.N) - hi;
}

CapacityChoice choose_capacity_params(const Rational& eps) {
    require(eps > 0 && eps < 1, ErrorKind::ParamOutOfRange, "need 0 < eps < 1");
    const auto s = static_cast<unsigned>(ceil_of(Rational(1) / eps));
    return {s, s * s, eps};
}

void write_matrix(std::ostream& out, const Field& field, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << field.format(m.at(r, c));
        }
        out << '\n';
    }
}

Matrix read_matrix(std::istream& in, const Field& field, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        require(static_cast<bool>(std::getline(in, line)), ErrorKind::Parse, "missing matrix row");
        std::istringstream ls(line);
        std::string tok;
        std::size_t c = 0;
        while (ls >> tok) {
            require(c < cols, ErrorKind::Parse, "too many entries in row");
            m.at(r, c++) = field.parse(tok);
        }
        require(c == cols, ErrorKind::Parse, "too few entries in row");
    }
    return m;
}

void write_frs_word(std::ostream& out, const FrsParams& params, const Matrix& word) {
    require(word.rows() == params.m && word.cols() == params.N, ErrorKind::ShapeMismatch,
            "word shape does not match parameters");
    const Field& f = *params.field;
    out << f.order() << ' ' << params.m << ' ' << params.N << ' ' << params.k << ' '
        << f.format(params.gamma) << '\n';
    write_matrix(out, f, word);
}

FrsWord read_frs_word(std::istream& in) {
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorKind::Parse, "missing header");
    std::istringstream hs(line);
    std::uint64_t q = 0;
    unsigned m = 0, N = 0, k = 0;
    std::string gamma;
    require(static_cast<bool>(hs >> q >> m >> N >> k >> gamma), ErrorKind::Parse,
            "header must be `q m N k gamma`");
    auto field = Field::make(q);
    FrsParams params = FrsParams::make(field, m, k, field->parse(gamma));
    require(params.N == N, ErrorKind::Parse, "header N inconsistent with q and m");
    Matrix word = read_matrix(in, *field, m, N);
    return {std::move(params), std::move(word)};
}

}  // namespace capcodes
