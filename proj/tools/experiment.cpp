#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "capcodes/errors.hpp"
#include "capcodes/frs_decode.hpp"
#include "capcodes/hensel.hpp"
#include "capcodes/oracle.hpp"

namespace capcodes::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const auto x = std::stoull(v, &used);
        if (used == v.size() && !v.empty() && v[0] != '-') return x;
    } catch (const std::logic_error&) {
    }
    fail(ErrorKind::ParamOutOfRange, "bad value for " + key + ": `" + v + "`");
}

unsigned to_uint(const std::string& key, const std::string& v) {
    const auto x = to_u64(key, v);
    require(x <= UINT32_MAX, ErrorKind::ParamOutOfRange, key + " is too large");
    return static_cast<unsigned>(x);
}

Poly random_message(const FieldPtr& f, unsigned k, Rng& rng) {
    std::vector<Elem> c(k);
    for (auto& x : c) x = static_cast<Elem>(rng.below(f->order()));
    return Poly(f, std::move(c));
}

MultiPoly random_mult_message(const MultParams& p, Rng& rng) {
    MultiPoly P(p.field, p.m);
    for (const auto& i : p.message_layout()) P.add_term(i, static_cast<Elem>(rng.below(p.field->order())));
    return P;
}

// Distinct indices in [0, n), a partial Fisher-Yates shuffle.
std::vector<std::uint64_t> distinct(std::uint64_t n, unsigned count, Rng& rng) {
    require(count <= n, ErrorKind::ParamOutOfRange, "more errors than positions");
    std::vector<std::uint64_t> idx(n);
    for (std::uint64_t i = 0; i < n; ++i) idx[i] = i;
    for (unsigned i = 0; i < count; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
    idx.resize(count);
    return idx;
}

TrialResult list_trial(const ExperimentSpec& spec, std::uint64_t t) {
    Rng rng(spec.seed, t);
    const DecodeOptions opt{spec.budget, spec.node_budget};
    TrialResult r;
    r.trial = t;
    if (spec.family == "frs") {
        const auto p = frs_params(spec);
        const Poly msg = random_message(p.field, p.k, rng);
        Matrix y = frs_encode(p, msg);
        corrupt_columns(*p.field, y, spec.errors, rng);
        std::vector<Poly> list;
        if (spec.decoder == "linear") {
            list = list_decode(p, y, spec.s, opt).messages();
        } else if (spec.decoder == "hensel") {
            list = hensel_list_decode(p, y, spec.s, opt).messages();
        } else {
            Encoder enc = [&](const Poly& g) { return frs_encode(p, g); };
            for (auto& c : oracle_list_decode(p.field, p.k, enc, y, frs_threshold(p, spec.s), spec.budget))
                list.push_back(c.message);
        }
        r.list_size = list.size();
        r.success = std::find(list.begin(), list.end(), msg) != list.end();
    } else {
        const auto p = der_params(spec);
        const Poly msg = random_message(p.field, p.k, rng);
        Matrix y = der_encode(p, msg);
        corrupt_columns(*p.field, y, spec.errors, rng);
        std::vector<Poly> list;
        if (spec.decoder == "linear") {
            list = der_list_decode(p, y, spec.s, opt).messages();
        } else {
            Encoder enc = [&](const Poly& g) { return der_encode(p, g); };
            for (auto& c : oracle_list_decode(p.field, p.k, enc, y, der_threshold(p, spec.s), spec.budget))
                list.push_back(c.message);
        }
        r.list_size = list.size();
        r.success = std::find(list.begin(), list.end(), msg) != list.end();
    }
    return r;
}

// Only the queried points are ever evaluated; corrupted points are fixed up front.
TrialResult local_trial(const ExperimentSpec& spec, std::uint64_t t) {
    Rng rng(spec.seed, t);
    const auto p = mult_params(spec);
    const MultiPoly P = random_mult_message(p, rng);
    std::map<std::uint64_t, Symbol> corrupted;
    for (auto idx : distinct(p.length(), spec.errors, rng)) {
        const Symbol orig = order_s_eval(P, p.point(idx), p.s);
        Symbol fresh(orig.size());
        do
            for (auto& x : fresh) x = static_cast<Elem>(rng.below(p.field->order()));
        while (fresh == orig);
        corrupted.emplace(idx, std::move(fresh));
    }
    const Point a = p.point(rng.below(p.length()));
    const SymbolOracle oracle([&](std::span<const Elem> x) {
        auto it = corrupted.find(p.index_of(x));
        return it != corrupted.end() ? it->second : order_s_eval(P, x, p.s);
    });
    const LocalResult res = spec.decoder == "local" ? local_correct(p, oracle, a, rng, {spec.max_attempts})
                                                    : bivariate_correct(p, oracle, a, rng);
    TrialResult r;
    r.trial = t;
    r.queries = oracle.queries();
    r.list_size = res.symbol ? 1 : 0;
    r.success = res.symbol && *res.symbol == order_s_eval(P, a, p.s);
    return r;
}

}  // namespace

void ExperimentSpec::set(const std::string& key, const std::string& value) {
    if (key == "family") family = value;
    else if (key == "decoder") decoder = value;
    else if (key == "q") q = to_u64(key, value);
    else if (key == "m") m = to_uint(key, value);
    else if (key == "N") N = to_uint(key, value);
    else if (key == "n") n = to_uint(key, value);
    else if (key == "k") k = to_uint(key, value);
    else if (key == "s") s = to_uint(key, value);
    else if (key == "d") d = to_uint(key, value);
    else if (key == "gamma") gamma = to_uint(key, value);
    else if (key == "errors") errors = to_uint(key, value);
    else if (key == "trials") trials = to_u64(key, value);
    else if (key == "seed") seed = to_u64(key, value);
    else if (key == "budget") budget = to_u64(key, value);
    else if (key == "node_budget") node_budget = to_u64(key, value);
    else if (key == "max_attempts") max_attempts = to_uint(key, value);
    else if (key == "threads") threads = to_uint(key, value);
    else if (key == "timing") timing = value == "1" || value == "true";
    else fail(ErrorKind::ParamOutOfRange, "unknown spec key `" + key + "`");
}

std::map<std::string, std::string> ExperimentSpec::echo() const {
    std::map<std::string, std::string> e{
        {"family", family},
        {"decoder", decoder},
        {"q", std::to_string(q)},
        {"m", std::to_string(m)},
        {"k", std::to_string(k)},
        {"s", std::to_string(s)},
        {"errors", std::to_string(errors)},
        {"trials", std::to_string(trials)},
        {"seed", std::to_string(seed)},
        {"budget", std::to_string(budget)},
        {"node_budget", std::to_string(node_budget)},
    };
    if (family == "frs") {
        const auto p = frs_params(*this);
        e["N"] = std::to_string(p.N);
        e["gamma"] = p.field->format(p.gamma);
    } else if (family == "der") {
        e["n"] = std::to_string(n);
    } else {
        e.erase("k");
        e["d"] = std::to_string(d);
        e["max_attempts"] = std::to_string(max_attempts);
    }
    return e;
}

void ExperimentSpec::validate() const {
    require(trials >= 1, ErrorKind::ParamOutOfRange, "need at least one trial");
    require(threads >= 1, ErrorKind::ParamOutOfRange, "need at least one thread");
    if (family == "frs") {
        require(decoder == "linear" || decoder == "hensel" || decoder == "oracle", ErrorKind::ParamOutOfRange,
                "frs decoders: linear, hensel, oracle");
        const auto p = frs_params(*this);
        require(s >= 1 && s <= p.m, ErrorKind::ParamOutOfRange, "need 1 <= s <= m");
        require(errors <= p.N, ErrorKind::ParamOutOfRange, "more errors than columns");
    } else if (family == "der") {
        require(decoder == "linear" || decoder == "oracle", ErrorKind::ParamOutOfRange,
                "der decoders: linear, oracle");
        const auto p = der_params(*this);
        require(s >= 1 && s <= p.m, ErrorKind::ParamOutOfRange, "need 1 <= s <= m");
        require(errors <= p.n, ErrorKind::ParamOutOfRange, "more errors than columns");
    } else if (family == "mult") {
        require(decoder == "local" || decoder == "bivariate", ErrorKind::ParamOutOfRange,
                "mult decoders: local, bivariate");
        const auto p = mult_params(*this);
        require(errors <= p.length(), ErrorKind::ParamOutOfRange, "more errors than points");
        require(max_attempts >= 1, ErrorKind::ParamOutOfRange, "need max_attempts >= 1");
    } else {
        fail(ErrorKind::ParamOutOfRange, "family must be frs, der or mult");
    }
}

ExperimentSpec parse_spec(std::istream& in) {
    ExperimentSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        require(eq != std::string::npos, ErrorKind::Parse, "expected `key = value`, got `" + line + "`");
        spec.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return spec;
}

FrsParams frs_params(const ExperimentSpec& spec) {
    auto f = Field::make(spec.q);
    auto p = spec.gamma ? FrsParams::make(f, spec.m, spec.k, *spec.gamma) : FrsParams::make(f, spec.m, spec.k);
    require(spec.N == 0 || spec.N == p.N, ErrorKind::ParamOutOfRange, "N must equal (q-1)/m");
    return p;
}

DerParams der_params(const ExperimentSpec& spec) {
    return DerParams::make(Field::make(spec.q), spec.m, spec.n, spec.k);
}

MultParams mult_params(const ExperimentSpec& spec) {
    return MultParams::make(Field::make(spec.q), spec.m, spec.s, spec.d);
}

void corrupt_columns(const Field& field, Matrix& y, unsigned errors, Rng& rng) {
    for (auto col : distinct(y.cols(), errors, rng)) {
        std::vector<Elem> orig = y.column(col), fresh;
        do {
            fresh.clear();
            for (std::size_t r = 0; r < y.rows(); ++r) fresh.push_back(static_cast<Elem>(rng.below(field.order())));
        } while (fresh == orig);
        for (std::size_t r = 0; r < y.rows(); ++r) y.at(r, col) = fresh[r];
    }
}

void corrupt_points(MultWord& word, unsigned errors, Rng& rng) {
    const std::uint32_t q = word.params.field->order();
    for (auto idx : distinct(word.symbols.size(), errors, rng)) {
        Symbol& sym = word.symbols[idx];
        Symbol fresh(sym.size());
        do
            for (auto& x : fresh) x = static_cast<Elem>(rng.below(q));
        while (fresh == sym);
        sym = std::move(fresh);
    }
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const std::uint64_t T = spec.trials;
    std::vector<TrialResult> results(T);
    std::vector<std::optional<std::string>> budget_error(T);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (std::uint64_t t = next++; t < T; t = next++) {
            const auto start = std::chrono::steady_clock::now();
            try {
                results[t] = spec.family == "mult" ? local_trial(spec, t) : list_trial(spec, t);
            } catch (const CodingError& e) {
                if (e.kind() != ErrorKind::BudgetExceeded) throw;
                budget_error[t] = e.what();
                continue;
            }
            if (spec.timing)
                results[t].micros = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(
                                                                   std::chrono::steady_clock::now() - start)
                                                                   .count());
        }
    };
    if (spec.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr err;
        std::mutex mu;
        for (unsigned i = 0; i < spec.threads; ++i)
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!err) err = std::current_exception();
                    next = T;
                }
            });
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }

    ExperimentReport rep{spec, {}, false, {}};
    for (std::uint64_t t = 0; t < T; ++t) {
        if (budget_error[t]) {
            rep.budget_exceeded = true;
            rep.failure = "trial " + std::to_string(t) + ": " + *budget_error[t];
            break;
        }
        rep.rows.push_back(results[t]);
    }
    return rep;
}

std::string ExperimentReport::tsv() const {
    std::ostringstream out;
    out << "trial\tsuccess\tlist_size\tqueries\tmicros\n";
    for (const auto& r : rows)
        out << r.trial << '\t' << (r.success ? 1 : 0) << '\t' << r.list_size << '\t' << r.queries << '\t'
            << r.micros << '\n';
    if (budget_exceeded) out << "# FAILED budget exceeded at " << failure << '\n';
    return out.str();
}

std::string ExperimentReport::json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json echo;
    for (const auto& [k, v] : spec.echo()) echo[k] = v;
    j["spec"] = echo;
    j["status"] = budget_exceeded ? "budget_exceeded" : "ok";
    if (budget_exceeded) j["failure"] = failure;
    j["trials_requested"] = spec.trials;
    j["trials_completed"] = rows.size();

    std::uint64_t ok = 0, list_sum = 0, list_max = 0, query_sum = 0;
    for (const auto& r : rows) {
        ok += r.success;
        list_sum += r.list_size;
        list_max = std::max<std::uint64_t>(list_max, r.list_size);
        query_sum += r.queries;
    }
    const double n = rows.empty() ? 1.0 : static_cast<double>(rows.size());
    j["successes"] = ok;
    j["success_rate"] = static_cast<double>(ok) / n;
    j["mean_list_size"] = static_cast<double>(list_sum) / n;
    j["max_list_size"] = list_max;
    j["mean_queries"] = static_cast<double>(query_sum) / n;

    if (spec.family == "frs") {
        const auto p = frs_params(spec);
        j["interpolation_degree"] = frs_interpolation_degree(p, spec.s);
        j["threshold"] = frs_threshold(p, spec.s);
    } else if (spec.family == "der") {
        const auto p = der_params(spec);
        j["interpolation_degree"] = der_interpolation_degree(p, spec.s);
        j["threshold"] = der_threshold(p, spec.s);
    } else {
        const auto p = mult_params(spec);
        const auto rep = mult_params_report(p);
        j["w"] = p.w();
        j["rate"] = to_string(rep.rate);
        j["delta"] = to_string(rep.delta);
        j["size_bound_holds"] = local_size_bound(p);
    }
    return j.dump(2) + "\n";
}

}  // namespace capcodes::cli
