#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "capcodes/derivative.hpp"
#include "capcodes/frs.hpp"
#include "capcodes/multiplicity.hpp"
#include "capcodes/rng.hpp"

namespace capcodes::cli {

/// One batch of seeded trials. Read from flat `key = value` text.
struct ExperimentSpec {
    std::string family = "frs";      // frs | der | mult
    std::string decoder = "linear";  // linear | hensel | oracle | local | bivariate
    std::uint64_t q = 13;
    unsigned m = 4;
    unsigned N = 0;  // frs: derived from q-1 when 0
    unsigned n = 0;  // der: number of evaluation points
    unsigned k = 2;
    unsigned s = 2;
    unsigned d = 0;  // mult degree bound
    std::optional<Elem> gamma;
    unsigned errors = 1;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::uint64_t budget = 1'000'000;
    std::uint64_t node_budget = 100'000;
    unsigned max_attempts = 1;  // local corrector repetitions
    unsigned threads = 1;
    bool timing = false;  // micros column stays 0 unless set

    /// Sets one key; throws ParamOutOfRange on unknown keys or bad values.
    void set(const std::string& key, const std::string& value);
    /// Every key with its effective value, for provenance.
    std::map<std::string, std::string> echo() const;
    /// Checks family/decoder compatibility and the family's parameters.
    void validate() const;
};

ExperimentSpec parse_spec(std::istream& in);

struct TrialResult {
    std::uint64_t trial = 0;
    bool success = false;
    std::size_t list_size = 0;
    std::uint64_t queries = 0;
    std::uint64_t micros = 0;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<TrialResult> rows;  // trials 0 .. rows.size()-1
    bool budget_exceeded = false;
    std::string failure;

    std::string tsv() const;
    std::string json() const;
};

/// Runs every trial; trial t draws from Rng(seed, t). A budget failure stops
/// the report at the first failing trial index.
ExperimentReport run_experiment(const ExperimentSpec& spec);

FrsParams frs_params(const ExperimentSpec& spec);
DerParams der_params(const ExperimentSpec& spec);
MultParams mult_params(const ExperimentSpec& spec);

/// Replaces `errors` distinct columns with uniformly random different columns.
void corrupt_columns(const Field& field, Matrix& y, unsigned errors, Rng& rng);
/// Replaces `errors` distinct points with uniformly random different symbols.
void corrupt_points(MultWord& word, unsigned errors, Rng& rng);

}  // namespace capcodes::cli
