#include "opencat/harness/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace opencat::harness {

namespace {

class InstanceGen {
public:
    InstanceGen(std::uint64_t seed, const CorpusOptions& options) : seed_(seed), options_(options), rng_(seed) {}

    CategoryRef category()
    {
        GenParams p = params();
        return gen_category(p);
    }

    OpenFunctor functor(const CategoryRef& c, const CategoryRef& d) { return gen_open_functor(params(), c, d); }

    /// Some transformation out of f, into a freshly generated functor when one
    /// admits any, otherwise into f itself.
    OpenNatTrans nat_from(const OpenFunctor& f)
    {
        OpenFunctor g = functor(f.dom_ref(), f.cod_ref());
        std::vector<OpenNatTrans> candidates = gen_open_nat(params(), f, g);
        if (candidates.empty())
            candidates = gen_open_nat(params(), f, f);
        return candidates[rng_() % candidates.size()];
    }

private:
    GenParams params()
    {
        GenParams p;
        p.seed = derive_seed(seed_, counter_++);
        p.max_objects = options_.max_objects;
        p.max_extra_arrows = options_.max_extra_arrows;
        p.max_fiber = options_.max_fiber;
        if (options_.style) {
            p.style = *options_.style;
        } else {
            static constexpr CategoryStyle mix[] = {CategoryStyle::dag_free, CategoryStyle::dag_free,
                                                    CategoryStyle::preorder, CategoryStyle::product};
            p.style = mix[p.seed % 4];
        }
        return p;
    }

    std::uint64_t seed_;
    const CorpusOptions& options_;
    std::mt19937_64 rng_;
    std::uint64_t counter_ = 0;
};

std::vector<LawReport> evaluate(Law law, InstanceGen& gen)
{
    switch (law) {
    case Law::pentagon: {
        CategoryRef c0 = gen.category(), c1 = gen.category(), c2 = gen.category(), c3 = gen.category(),
                    c4 = gen.category();
        OpenFunctor f = gen.functor(c0, c1), g = gen.functor(c1, c2), h = gen.functor(c2, c3),
                    i = gen.functor(c3, c4);
        return {check_pentagon(f, g, h, i)};
    }
    case Law::triangle: {
        CategoryRef b = gen.category(), c = gen.category(), d = gen.category();
        return {check_triangle(gen.functor(b, c), gen.functor(c, d))};
    }
    case Law::interchange: {
        CategoryRef c = gen.category(), d = gen.category(), e = gen.category();
        OpenNatTrans theta = gen.nat_from(gen.functor(c, d));
        OpenNatTrans theta2 = gen.nat_from(theta.cod());
        OpenNatTrans phi = gen.nat_from(gen.functor(d, e));
        OpenNatTrans phi2 = gen.nat_from(phi.cod());
        return {check_interchange(theta, theta2, phi, phi2), check_identity_preservation(theta.dom(), phi.dom())};
    }
    case Law::homcat: {
        CategoryRef c = gen.category(), d = gen.category();
        OpenNatTrans theta = gen.nat_from(gen.functor(c, d));
        OpenNatTrans phi = gen.nat_from(theta.cod());
        OpenNatTrans psi = gen.nat_from(phi.cod());
        return check_hom_category_laws(theta, phi, psi);
    }
    case Law::unitor_nat: {
        CategoryRef c = gen.category(), d = gen.category();
        auto [left, right] = check_unitor_naturality(gen.nat_from(gen.functor(c, d)));
        return {left, right};
    }
    case Law::assoc_nat: {
        CategoryRef a = gen.category(), b = gen.category(), c = gen.category(), d = gen.category();
        OpenNatTrans theta = gen.nat_from(gen.functor(a, b));
        OpenNatTrans phi = gen.nat_from(gen.functor(b, c));
        OpenNatTrans psi = gen.nat_from(gen.functor(c, d));
        return {check_associator_naturality(theta, phi, psi)};
    }
    }
    return {};
}

}  // namespace

const char* to_string(Law law)
{
    switch (law) {
    case Law::pentagon:
        return "pentagon";
    case Law::triangle:
        return "triangle";
    case Law::interchange:
        return "interchange";
    case Law::homcat:
        return "homcat";
    case Law::unitor_nat:
        return "unitor-nat";
    case Law::assoc_nat:
        return "assoc-nat";
    }
    return "?";
}

const std::vector<Law>& all_laws()
{
    static const std::vector<Law> laws = {Law::homcat,     Law::interchange, Law::unitor_nat,
                                          Law::assoc_nat, Law::pentagon,    Law::triangle};
    return laws;
}

std::optional<Law> parse_law(std::string_view s)
{
    for (Law law : all_laws())
        if (s == to_string(law))
            return law;
    return std::nullopt;
}

bool InstanceResult::holds() const
{
    return error.empty() && !reports.empty() &&
           std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.holds; });
}

std::size_t LawSummary::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.holds(); }));
}

InstanceResult run_instance(Law law, std::size_t index, std::uint64_t seed, const CorpusOptions& options)
{
    InstanceResult result;
    result.index = index;
    result.seed = seed;
    InstanceGen gen(seed, options);
    try {
        result.reports = evaluate(law, gen);
    } catch (const Error& e) {
        result.error = std::string(to_string(e.kind())) + ": " + e.what();
    }
    const std::string description = "instance " + std::to_string(index) + ", seed " + std::to_string(seed);
    for (auto& r : result.reports)
        r.instance = description;
    return result;
}

std::vector<LawSummary> run_corpus(const CorpusOptions& options)
{
    struct Job {
        Law law;
        std::size_t index;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (Law law : options.laws) {
        std::uint64_t law_seed = derive_seed(options.seed, 1000 + static_cast<std::uint64_t>(law));
        for (std::size_t i = 0; i < options.count; ++i)
            jobs.push_back({law, i, derive_seed(law_seed, i)});
    }
    std::vector<InstanceResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++)
            results[k] = run_instance(jobs[k].law, jobs[k].index, jobs[k].seed, options);
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(jobs.size())));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    std::vector<LawSummary> summaries;
    std::size_t k = 0;
    for (Law law : options.laws) {
        LawSummary s{law, {}};
        for (std::size_t i = 0; i < options.count; ++i)
            s.instances.push_back(std::move(results[k++]));
        summaries.push_back(std::move(s));
    }
    return summaries;
}

void print_summary(std::ostream& os, const std::vector<LawSummary>& summaries)
{
    for (const auto& s : summaries)
        os << to_string(s.law) << ": " << s.passed() << "/" << s.instances.size() << " hold\n";
    for (const auto& s : summaries) {
        for (const auto& inst : s.instances) {
            if (inst.holds())
                continue;
            if (!inst.error.empty())
                os << to_string(s.law) << " [instance " << inst.index << ", seed " << inst.seed
                   << "]: error: " << inst.error << "\n";
            for (const auto& r : inst.reports)
                if (!r.holds)
                    os << r << "\n";
        }
    }
}

}  // namespace opencat::harness
