// capcodes command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "capcodes/errors.hpp"
#include "capcodes/frs_decode.hpp"
#include "capcodes/hensel.hpp"
#include "capcodes/oracle.hpp"
#include "experiment.hpp"

using namespace capcodes;
using namespace capcodes::cli;

namespace {

enum Exit { kOk = 0, kUsage = 2, kIo = 3, kBudget = 4 };

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw IoFailure("cannot write " + path);
}

// Flags that map one-to-one onto experiment spec keys.
const std::vector<std::string> kSpecKeys{"family", "decoder", "q",      "m",      "N",           "n",
                                         "k",      "s",       "d",      "gamma",  "errors",      "trials",
                                         "seed",   "budget",  "node_budget",      "max_attempts", "threads"};

struct Flags {
    std::map<std::string, std::string> values;

    void attach(CLI::App* app, const std::vector<std::string>& keys) {
        for (const auto& k : keys) app->add_option("--" + k, values[k], k);
    }
    ExperimentSpec apply(ExperimentSpec spec) const {
        for (const auto& [k, v] : values)
            if (!v.empty()) spec.set(k, v);
        return spec;
    }
};

int cmd_encode(const Flags& flags, const std::string& in, const std::string& out) {
    const ExperimentSpec spec = flags.apply({});
    const std::string text = slurp(in);
    std::ostringstream os;
    if (spec.family == "frs") {
        const auto p = frs_params(spec);
        write_frs_word(os, p, frs_encode(p, Poly::parse(p.field, text)));
    } else if (spec.family == "der") {
        const auto p = der_params(spec);
        write_der_word(os, p, der_encode(p, Poly::parse(p.field, text)));
    } else if (spec.family == "mult") {
        const auto p = mult_params(spec);
        std::istringstream is(text);
        write_mult_word(os, mult_encode(p, read_mult_message(is, p.field, p.m)));
    } else {
        fail(ErrorKind::ParamOutOfRange, "family must be frs, der or mult");
    }
    emit(out, os.str());
    return kOk;
}

int cmd_corrupt(const std::string& family, const std::string& in, unsigned errors, std::uint64_t seed,
                const std::string& out) {
    std::istringstream is(slurp(in));
    std::ostringstream os;
    Rng rng(seed);
    if (family == "frs") {
        auto w = read_frs_word(is);
        corrupt_columns(*w.params.field, w.word, errors, rng);
        write_frs_word(os, w.params, w.word);
    } else if (family == "der") {
        auto w = read_der_word(is);
        corrupt_columns(*w.params.field, w.word, errors, rng);
        write_der_word(os, w.params, w.word);
    } else if (family == "mult") {
        auto w = read_mult_word(is);
        corrupt_points(w, errors, rng);
        write_mult_word(os, w);
    } else {
        fail(ErrorKind::ParamOutOfRange, "family must be frs, der or mult");
    }
    emit(out, os.str());
    return kOk;
}

std::string format_list(const std::vector<Candidate>& cands, const DecodeDiagnostics& diag) {
    std::ostringstream os;
    for (const auto& c : cands) os << c.message.format() << '\n';
    os << "# candidates " << cands.size() << '\n';
    os << "# d " << diag.d << '\n';
    os << "# threshold " << diag.threshold << '\n';
    os << "# affine_dim " << diag.affine_dim << '\n';
    os << "# enumerated " << diag.enumerated << '\n';
    os << "# nodes " << diag.nodes << '\n';
    if (diag.shift >= 0) os << "# shift " << diag.shift << '\n';
    return os.str();
}

// Keeps candidates meeting a user threshold; the decoders already prune at their own.
void tighten(DecodeResult& r, unsigned threshold) {
    std::erase_if(r.candidates, [&](const Candidate& c) { return c.agreement < threshold; });
    r.diag.threshold = std::max(r.diag.threshold, threshold);
}

int cmd_decode(const std::string& family, const std::string& decoder, const std::string& in, unsigned s,
               std::optional<unsigned> threshold, std::uint64_t budget, const std::string& point, std::uint64_t seed,
               unsigned attempts, const std::string& out) {
    std::istringstream is(slurp(in));
    const DecodeOptions opt{budget, budget};
    std::string text;
    if (family == "frs" || family == "der") {
        DecodeResult r;
        if (family == "frs") {
            const auto w = read_frs_word(is);
            const auto& p = w.params;
            if (decoder == "linear") r = list_decode(p, w.word, s, opt);
            else if (decoder == "hensel") r = hensel_list_decode(p, w.word, s, opt);
            else if (decoder == "oracle") {
                r.diag.d = frs_interpolation_degree(p, s);
                r.diag.threshold = threshold.value_or(frs_threshold(p, s));
                Encoder enc = [&](const Poly& g) { return frs_encode(p, g); };
                r.candidates = oracle_list_decode(p.field, p.k, enc, w.word, r.diag.threshold, budget);
                r.diag.enumerated = saturating_pow(p.field->order(), p.k);
            } else fail(ErrorKind::ParamOutOfRange, "frs decoders: linear, hensel, oracle");
        } else {
            const auto w = read_der_word(is);
            const auto& p = w.params;
            if (decoder == "linear") r = der_list_decode(p, w.word, s, opt);
            else if (decoder == "oracle") {
                r.diag.d = der_interpolation_degree(p, s);
                r.diag.threshold = threshold.value_or(der_threshold(p, s));
                Encoder enc = [&](const Poly& g) { return der_encode(p, g); };
                r.candidates = oracle_list_decode(p.field, p.k, enc, w.word, r.diag.threshold, budget);
                r.diag.enumerated = saturating_pow(p.field->order(), p.k);
            } else fail(ErrorKind::ParamOutOfRange, "der decoders: linear, oracle");
        }
        if (threshold) tighten(r, *threshold);
        text = format_list(r.candidates, r.diag);
    } else if (family == "mult") {
        const auto w = read_mult_word(is);
        const Field& f = *w.params.field;
        Point a;
        // Extension-field elements contain commas, so ':' separates coordinates when present.
        const char sep = point.find(':') != std::string::npos ? ':' : ',';
        std::istringstream ps(point);
        std::string tok;
        while (std::getline(ps, tok, sep)) a.push_back(f.parse(tok));
        require(a.size() == w.params.m, ErrorKind::ArityMismatch, "--point needs m coordinates");
        const auto oracle = SymbolOracle::of(w);
        Rng rng(seed);
        LocalResult res;
        if (decoder == "local") res = local_correct(w.params, oracle, a, rng, {attempts});
        else if (decoder == "bivariate") res = bivariate_correct(w.params, oracle, a, rng);
        else fail(ErrorKind::ParamOutOfRange, "mult decoders: local, bivariate");
        std::ostringstream os;
        if (res.symbol) {
            for (std::size_t i = 0; i < res.symbol->size(); ++i) os << (i ? " " : "") << f.format((*res.symbol)[i]);
            os << '\n';
        } else {
            os << "FAIL\n";
        }
        os << "# queries " << res.queries << '\n';
        os << "# attempts " << res.attempts << '\n';
        os << "# size_bound_holds " << (res.size_bound_holds ? 1 : 0) << '\n';
        text = os.str();
    } else {
        fail(ErrorKind::ParamOutOfRange, "family must be frs, der or mult");
    }
    emit(out, text);
    return kOk;
}

int write_report(const ExperimentReport& rep, const std::string& out) {
    if (out.empty()) {
        std::cout << rep.tsv() << '\n' << rep.json() << std::flush;
    } else {
        emit(out + ".tsv", rep.tsv());
        emit(out + ".json", rep.json());
    }
    if (rep.budget_exceeded) {
        std::cerr << "budget exceeded: " << rep.failure << '\n';
        return kBudget;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Folded Reed-Solomon, derivative and multiplicity codes: encode, corrupt, decode, simulate"};
    app.require_subcommand(1);

    Flags enc_flags;
    std::string enc_in, enc_out;
    auto* enc = app.add_subcommand("encode", "Encode a message file");
    enc_flags.attach(enc, {"family", "q", "m", "N", "n", "k", "s", "d", "gamma"});
    enc->add_option("--in", enc_in, "message file")->required();
    enc->add_option("--out", enc_out, "codeword file (stdout if omitted)");

    std::string cor_family = "frs", cor_in, cor_out;
    unsigned cor_errors = 0;
    std::uint64_t cor_seed = 1;
    auto* cor = app.add_subcommand("corrupt", "Corrupt whole columns (or points) of a codeword file");
    cor->add_option("--family", cor_family, "frs | der | mult");
    cor->add_option("--in", cor_in, "codeword file")->required();
    cor->add_option("--errors", cor_errors, "number of columns or points to replace")->required();
    cor->add_option("--seed", cor_seed, "seed");
    cor->add_option("--out", cor_out, "received file (stdout if omitted)");

    std::string dec_family = "frs", dec_decoder = "linear", dec_in, dec_out, dec_point;
    unsigned dec_s = 2, dec_attempts = 1;
    std::optional<unsigned> dec_threshold;
    std::uint64_t dec_budget = 1'000'000, dec_seed = 1;
    auto* dec = app.add_subcommand("decode", "List-decode a received file, or locally correct one point");
    dec->add_option("--family", dec_family, "frs | der | mult");
    dec->add_option("--decoder", dec_decoder, "linear | hensel | oracle | local | bivariate");
    dec->add_option("--in", dec_in, "received file")->required();
    dec->add_option("--s", dec_s, "interpolation parameter");
    dec->add_option("--threshold", dec_threshold, "minimum agreement for listed messages");
    dec->add_option("--budget", dec_budget, "enumeration budget");
    dec->add_option("--point", dec_point, "mult: target point, coordinates separated by , or :");
    dec->add_option("--seed", dec_seed, "mult: seed for direction sampling");
    dec->add_option("--max-attempts", dec_attempts, "mult: local corrector repetitions");
    dec->add_option("--out", dec_out, "list file (stdout if omitted)");

    Flags exp_flags;
    std::string exp_spec, exp_out;
    bool exp_timing = false;
    auto* exp = app.add_subcommand("experiment", "Run seeded trials from a key = value spec file");
    exp->add_option("--spec", exp_spec, "spec file");
    exp_flags.attach(exp, kSpecKeys);
    exp->add_option("--out", exp_out, "write PREFIX.tsv and PREFIX.json instead of stdout");
    exp->add_flag("--timing", exp_timing, "fill the micros column");

    Flags loc_flags;
    std::string loc_out;
    bool loc_timing = false;
    auto* loc = app.add_subcommand("localsim", "Local self-correction trials on a multiplicity code");
    loc_flags.attach(loc, {"q", "m", "s", "d", "errors", "trials", "seed", "decoder", "max_attempts", "threads"});
    loc->add_option("--out", loc_out, "write PREFIX.tsv and PREFIX.json instead of stdout");
    loc->add_flag("--timing", loc_timing, "fill the micros column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*enc) return cmd_encode(enc_flags, enc_in, enc_out);
        if (*cor) return cmd_corrupt(cor_family, cor_in, cor_errors, cor_seed, cor_out);
        if (*dec)
            return cmd_decode(dec_family, dec_decoder, dec_in, dec_s, dec_threshold, dec_budget, dec_point, dec_seed,
                              dec_attempts, dec_out);
        if (*exp) {
            ExperimentSpec spec;
            if (!exp_spec.empty()) {
                std::istringstream is(slurp(exp_spec));
                spec = parse_spec(is);
            }
            spec = exp_flags.apply(spec);
            spec.timing = spec.timing || exp_timing;
            return write_report(run_experiment(spec), exp_out);
        }
        if (*loc) {
            ExperimentSpec spec;
            spec.family = "mult";
            spec.decoder = "local";
            spec.q = 29;
            spec.m = 2;
            spec.s = 2;
            spec.d = 14;
            spec.errors = 2;
            spec.trials = 500;
            spec = loc_flags.apply(spec);
            spec.timing = loc_timing;
            return write_report(run_experiment(spec), loc_out);
        }
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const CodingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (e.kind() == ErrorKind::BudgetExceeded) return kBudget;
        if (e.kind() == ErrorKind::Parse) return kIo;
        return kUsage;
    }
    return kUsage;
}
