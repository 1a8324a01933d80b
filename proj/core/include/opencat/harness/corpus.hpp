#pragma once

// Seeded law corpora: generate instances for each law, run the checks, and
// summarize. Output depends only on the options, never on scheduling.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "opencat/coherence.hpp"
#include "opencat/harness/generate.hpp"

namespace opencat::harness {

enum class Law { pentagon, triangle, interchange, homcat, unitor_nat, assoc_nat };

const char* to_string(Law law);
std::optional<Law> parse_law(std::string_view s);
const std::vector<Law>& all_laws();

struct CorpusOptions {
    std::uint64_t seed = 0;
    std::size_t count = 25;
    std::vector<Law> laws = all_laws();
    std::size_t max_objects = 3;
    std::size_t max_extra_arrows = 4;
    std::size_t max_fiber = 3;
    /// Category style for every generated category; mixed when absent.
    std::optional<CategoryStyle> style;
    /// Worker threads; results are identical for any value.
    unsigned jobs = 1;
};

struct InstanceResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::vector<LawReport> reports;
    /// Set when the instance could not be evaluated (for example SizeLimit).
    std::string error;

    bool holds() const;
};

struct LawSummary {
    Law law;
    std::vector<InstanceResult> instances;

    std::size_t passed() const;
    bool holds() const { return passed() == instances.size(); }
};

/// Evaluates one instance of `law` generated from `seed`.
InstanceResult run_instance(Law law, std::size_t index, std::uint64_t seed, const CorpusOptions& options);

std::vector<LawSummary> run_corpus(const CorpusOptions& options);

/// "pentagon: 25/25 hold" per law, followed by the reports of failing
/// instances.
void print_summary(std::ostream& os, const std::vector<LawSummary>& summaries);

}  // namespace opencat::harness
