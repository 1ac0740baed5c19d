#pragma once

#include <atomic>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "capcodes/multipoly.hpp"
#include "capcodes/poly.hpp"
#include "capcodes/rational.hpp"
#include "capcodes/rng.hpp"

namespace capcodes {

using Symbol = std::vector<Elem>;
using Point = std::vector<Elem>;

/// Order-s evaluations of degree-<=d polynomials in m variables over GF(q).
struct MultParams {
    FieldPtr field;
    unsigned m = 1;
    unsigned s = 1;
    unsigned d = 0;

    static MultParams make(FieldPtr field, unsigned m, unsigned s, unsigned d);
    /// Throws ParamOutOfRange unless m, s >= 1 and d < s q.
    void validate() const;

    /// C(m+s-1, m): entries per symbol.
    std::size_t w() const;
    /// q^m
    std::uint64_t length() const;
    /// 1 - d/(s q)
    Rational delta() const;
    /// Exponents of weight < s in graded-lex order: the symbol layout.
    std::vector<Exponent> symbol_layout() const;
    /// Exponents of weight <= d: the message layout.
    std::vector<Exponent> message_layout() const;

    /// Point with lexicographic index idx (first coordinate most significant).
    Point point(std::uint64_t idx) const;
    std::uint64_t index_of(std::span<const Elem> a) const;
};

/// <P^{(i)}(a)>_{wt(i) < s}, graded-lex. Throws ArityMismatch.
Symbol order_s_eval(const MultiPoly& P, std::span<const Elem> a, unsigned s);

/// Symbols at every point in lexicographic order. Throws DegreeTooLarge.
struct MultWord {
    MultParams params;
    std::vector<Symbol> symbols;  // indexed by MultParams::index_of

    const Symbol& at(std::span<const Elem> a) const { return symbols[params.index_of(a)]; }
};
MultWord mult_encode(const MultParams& params, const MultiPoly& P);

struct MultReport {
    Rational rate;
    Rational delta;
    std::uint64_t message_len;
    Rational rate_lower_bound;  // (1 - m^2/s)(1 - delta)^m
};
MultReport mult_params_report(const MultParams& params);

/// P(a + b T). Throws ZeroDirection for b = 0.
Poly restrict_to_line(const MultiPoly& P, std::span<const Elem> a, std::span<const Elem> b);

/// Received-word access with a query counter. Safe for concurrent readers.
class SymbolOracle {
public:
    using Lookup = std::function<Symbol(std::span<const Elem>)>;

    explicit SymbolOracle(Lookup lookup) : lookup_(std::move(lookup)) {}
    /// Oracle over a stored word.
    static SymbolOracle of(const MultWord& word);

    Symbol query(std::span<const Elem> a) const {
        queries_.fetch_add(1, std::memory_order_relaxed);
        return lookup_(a);
    }
    std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }
    void reset() { queries_.store(0, std::memory_order_relaxed); }

private:
    Lookup lookup_;
    mutable std::atomic<std::uint64_t> queries_{0};
};

/// values[t][j] = sum_{wt(i)=j} r^{(i)}(a + b t) b^i for every t in GF(q).
struct LineTranscript {
    Point a;
    Point b;
    std::vector<Symbol> values;  // indexed by t, each of length s
};
LineTranscript line_transcript(const MultParams& params, const SymbolOracle& r, std::span<const Elem> a,
                               std::span<const Elem> b);

/// Order-s univariate multiplicity encoding of Q at every t in GF(q).
std::vector<Symbol> univariate_mult_encode(const Poly& Q, unsigned s);

/// The unique Q with deg Q <= d whose order-s encoding differs from the
/// transcript in at most floor(max_err_frac q) positions, or nullopt. Requires
/// max_err_frac < delta/2 (ParamOutOfRange otherwise). Linear-algebraic: solves
/// for an error locator E and N = E Q through the Leibniz rule at every t.
std::optional<Poly> univariate_mult_decode(const FieldPtr& field, const std::vector<Symbol>& transcript, unsigned s,
                                           unsigned d, const Rational& max_err_frac);

/// Largest max_err_frac of the form e/q strictly below delta/2.
Rational default_line_radius(const MultParams& params);

struct LocalOptions {
    unsigned max_attempts = 10;  // whole-procedure repetitions on FAIL
};

struct LocalResult {
    std::optional<Symbol> symbol;  // nullopt is FAIL
    std::uint64_t queries = 0;
    unsigned attempts = 0;
    bool size_bound_holds = false;  // q >= max{10m, (d+6)/s, 5(s+1)}
};

/// Whether q >= max{10m, (d+6)/s, 5(s+1)}.
bool local_size_bound(const MultParams& params);

/// Random lines through a, decoded and recombined per weight class.
LocalResult local_correct(const MultParams& params, const SymbolOracle& r, std::span<const Elem> a, Rng& rng,
                          const LocalOptions& opt = {});

/// Two random non-parallel lines; m = s = 2 only.
LocalResult bivariate_correct(const MultParams& params, const SymbolOracle& r, std::span<const Elem> a, Rng& rng,
                              unsigned direction_retries = 100);

/// Header `q m s d`, then per point: coordinates followed by w entries.
void write_mult_word(std::ostream& out, const MultWord& word);
MultWord read_mult_word(std::istream& in);

/// One term per line: m exponents followed by the coefficient.
void write_mult_message(std::ostream& out, const MultiPoly& P);
MultiPoly read_mult_message(std::istream& in, const FieldPtr& field, unsigned m);

}  // namespace capcodes
