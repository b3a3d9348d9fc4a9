#pragma once

#include <string>
#include <vector>

#include "hk/classify.hpp"
#include "hk/construct.hpp"
#include "hk/ideal.hpp"
#include "hk/morphism.hpp"

namespace hk {

struct CorpusEntry {
    std::string name;
    TablePtr table;
    std::vector<Morphism> endos;       // complete (enumerated) or user supplied
    std::vector<std::string> endo_names;  // aligned; filled from display names when empty
};

struct TheoremViolation {
    std::string structure;
    std::string detail;
};

/// Executable check of one theorem over the corpus. Instances are
/// hypothesis instantiations; checked = passed + vacuous + violations.
struct TheoremReport {
    std::string id;
    std::string title;
    long checked = 0;
    long passed = 0;
    long vacuous = 0;
    std::vector<TheoremViolation> violations;
    std::vector<std::string> skips;
    double elapsed_seconds = 0.0;
};

const std::vector<std::pair<std::string, std::string>>& theorem_catalog();

/// Runs the selected theorems (all when `only` is empty) over the
/// corpus. Structures without a declared scalar identity are skipped per
/// theorem with a note; every recorded violation re-verifies against the
/// underlying predicates.
std::vector<TheoremReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::string>& only = {});

struct SearchHit {
    std::string structure;
    ElemSet ideal;
    std::string endo;
};

/// Counterexample scan: property is one of endo-prime-not-prime,
/// theta-stable-not-endo-prime, endo-primary-not-endo-prime.
std::vector<SearchHit> search(const std::vector<CorpusEntry>& corpus, const std::string& property);

/// Deterministic plain-text rendering; timings are off by default so
/// identical corpora produce byte-identical reports.
std::string render_suite(const std::vector<TheoremReport>& reports, bool timings = false);

/// Entry with enumerated endomorphisms and display names.
CorpusEntry make_corpus_entry(TablePtr table, long cap = 10'000'000);

}  // namespace hk
