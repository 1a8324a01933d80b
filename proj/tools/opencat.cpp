// opencat: validate, compose, apply and check open functors from the shell.
//
// Exit codes: 0 ok, 1 validation or law failure, 2 parse error,
// 3 boundary mismatch.

#include <fstream>
#include <iostream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "opencat/coherence.hpp"
#include "opencat/harness/corpus.hpp"
#include "opencat/harness/generate.hpp"
#include "opencat/harness/serialize.hpp"

namespace {

using namespace opencat;
using namespace opencat::harness;

enum Exit { ok = 0, failure = 1, parse_error = 2, boundary = 3 };

int exit_code(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Malformed:
        return parse_error;
    case ErrorKind::BoundaryMismatch:
        return boundary;
    default:
        return failure;
    }
}

Document load(const std::string& path)
{
    try {
        return parse_file(path);
    } catch (const Error& e) {
        // Malformed while reading means duplicate or dangling ids in the file.
        if (e.kind() == ErrorKind::Malformed)
            throw Error(ErrorKind::Parse, path + ": " + e.what());
        throw Error(e.kind(), path + ": " + e.what());
    }
}

OpenFunctor load_open_functor(const std::string& path)
{
    Document d = load(path);
    if (auto* f = std::get_if<OpenFunctor>(&d.payload))
        return *f;
    throw Error(ErrorKind::Parse, path + ": expected an open_functor document, found " + d.kind());
}

void write_output(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::Parse, "cannot write '" + out + "'");
    file << text;
}

std::vector<LawReport> evaluate_request(const LawRequest& r)
{
    const auto& fs = r.open_functors;
    const auto& ts = r.open_nat_trans;
    auto need = [&](std::size_t nf, std::size_t nt) {
        if (fs.size() != nf || ts.size() != nt)
            throw Error(ErrorKind::Parse, "law '" + r.law + "' takes " + std::to_string(nf) + " open functors and " +
                                              std::to_string(nt) + " open natural transformations");
    };
    if (r.law == "pentagon") {
        need(4, 0);
        return {check_pentagon(fs[0], fs[1], fs[2], fs[3])};
    }
    if (r.law == "triangle") {
        need(2, 0);
        return {check_triangle(fs[0], fs[1])};
    }
    if (r.law == "unitor-nat") {
        need(0, 1);
        auto [l, rr] = check_unitor_naturality(ts[0]);
        return {l, rr};
    }
    if (r.law == "assoc-nat") {
        need(0, 3);
        return {check_associator_naturality(ts[0], ts[1], ts[2])};
    }
    if (r.law == "interchange") {
        need(0, 4);
        return {check_interchange(ts[0], ts[1], ts[2], ts[3])};
    }
    if (r.law == "homcat") {
        need(0, 3);
        return check_hom_category_laws(ts[0], ts[1], ts[2]);
    }
    throw Error(ErrorKind::Parse, "unknown law '" + r.law + "'");
}

int cmd_validate(const std::string& path)
{
    Document d = load(path);
    if (auto* r = std::get_if<LawRequest>(&d.payload)) {
        bool holds = true;
        for (const auto& report : evaluate_request(*r)) {
            std::cout << report << "\n";
            holds = holds && report.holds;
        }
        return holds ? ok : failure;
    }
    Report report = std::visit(
        [](const auto& v) -> Report {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CategoryRef>)
                return validate_category(*v);
            else if constexpr (std::is_same_v<T, Presheaf>)
                return validate_presheaf(v);
            else if constexpr (std::is_same_v<T, FinFunctor>)
                return validate_functor(v);
            else if constexpr (std::is_same_v<T, NatTrans>)
                return validate_nat(v);
            else if constexpr (std::is_same_v<T, OpenFunctor>)
                return validate_open_functor(v);
            else if constexpr (std::is_same_v<T, OpenNatTrans>)
                return validate_open_nat(v);
            else
                return Report{};
        },
        d.payload);
    std::cout << d.kind() << ": " << report;
    return report.ok() ? ok : failure;
}

int cmd_compose(const std::string& g_path, const std::string& f_path, const std::string& out)
{
    OpenFunctor g = load_open_functor(g_path);
    OpenFunctor f = load_open_functor(f_path);
    write_output(serialize(compose_open(g, f)), out);
    return ok;
}

int cmd_apply(const std::string& path, const std::string& object, const std::string& arrow, const std::string& expr)
{
    OpenFunctor f = load_open_functor(path);
    Element x = Element::decode(expr);
    if (!object.empty())
        std::cout << apply_open(f, ObjId(object), x) << "\n";
    else
        std::cout << apply_open_arrow(f, ArrId(arrow), x) << "\n";
    return ok;
}

int cmd_laws(const CorpusOptions& options)
{
    std::vector<LawSummary> summaries = run_corpus(options);
    print_summary(std::cout, summaries);
    for (const auto& s : summaries)
        if (!s.holds())
            return failure;
    return ok;
}

int cmd_gen(const std::string& kind, const GenParams& p, const std::string& out)
{
    CategoryRef c = gen_category(p);
    GenParams q = p;
    q.seed = derive_seed(p.seed, 77);
    if (kind == "category") {
        write_output(serialize(*c), out);
    } else if (kind == "presheaf") {
        write_output(serialize(gen_presheaf(p, c)), out);
    } else if (kind == "open_functor") {
        write_output(serialize(gen_open_functor(p, c, gen_category(q))), out);
    } else if (kind == "open_nat_trans") {
        OpenFunctor f = gen_open_functor(p, c, gen_category(q));
        std::vector<OpenNatTrans> ts = gen_open_nat(p, f, f);
        write_output(serialize(ts.back()), out);
    } else {
        throw Error(ErrorKind::Parse, "unknown kind '" + kind + "'");
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Open functors between finite categories: validation, composition and law checking"};
    app.require_subcommand(1);

    std::string file, g_file, out, object, arrow, element, kind = "open_functor", law = "all", style;
    CorpusOptions corpus;
    GenParams gen;

    auto* validate = app.add_subcommand("validate", "Validate a document and print the report");
    validate->add_option("file", file, "Document to validate")->required();

    auto* compose = app.add_subcommand("compose", "Compose two open functors, G o F");
    compose->add_option("g", g_file, "Open functor G")->required();
    compose->add_option("f", file, "Open functor F")->required();
    compose->add_option("-o,--output", out, "Output file (default stdout)");

    auto* apply = app.add_subcommand("apply", "Evaluate beta at an object or arrow and an element");
    apply->add_option("file", file, "Open functor")->required();
    auto* obj_opt = apply->add_option("--object", object, "Object c");
    auto* arr_opt = apply->add_option("--arrow", arrow, "Arrow f : c -> c'");
    obj_opt->excludes(arr_opt);
    apply->add_option("--element", element, "Element, e.g. x2 or <x1,*>")->required();

    auto* laws = app.add_subcommand("laws", "Check the bicategory laws on a seeded corpus");
    laws->add_option("--seed", corpus.seed, "Corpus seed");
    laws->add_option("--count", corpus.count, "Instances per law");
    laws->add_option("--law", law, "pentagon|triangle|interchange|homcat|unitor-nat|assoc-nat|all");
    laws->add_option("--max-objects", corpus.max_objects, "Objects per generated category");
    laws->add_option("--max-extra-arrows", corpus.max_extra_arrows, "Generating arrows per category");
    laws->add_option("--max-fiber", corpus.max_fiber, "Elements per generated fiber");
    laws->add_option("--style", style, "dag_free|preorder|product (default: mixed)");
    laws->add_option("--jobs", corpus.jobs, "Worker threads");

    auto* genc = app.add_subcommand("gen", "Emit a generated document");
    genc->add_option("--kind", kind, "category|presheaf|open_functor|open_nat_trans");
    genc->add_option("--seed", gen.seed, "Seed");
    genc->add_option("--max-objects", gen.max_objects, "Objects per category");
    genc->add_option("--max-extra-arrows", gen.max_extra_arrows, "Generating arrows per category");
    genc->add_option("--max-fiber", gen.max_fiber, "Elements per fiber");
    genc->add_option("--style", style, "dag_free|preorder|product");
    genc->add_option("-o,--output", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : parse_error;
    }

    try {
        if (*validate)
            return cmd_validate(file);
        if (*compose)
            return cmd_compose(g_file, file, out);
        if (*apply) {
            if (object.empty() && arrow.empty())
                throw Error(ErrorKind::Parse, "apply needs --object or --arrow");
            return cmd_apply(file, object, arrow, element);
        }
        if (*laws) {
            if (law != "all") {
                auto l = parse_law(law);
                if (!l)
                    throw Error(ErrorKind::Parse, "unknown law '" + law + "'");
                corpus.laws = {*l};
            }
            if (!style.empty()) {
                corpus.style = parse_style(style);
                if (!corpus.style)
                    throw Error(ErrorKind::Parse, "unknown style '" + style + "'");
            }
            return cmd_laws(corpus);
        }
        if (*genc) {
            if (!style.empty()) {
                auto s = parse_style(style);
                if (!s)
                    throw Error(ErrorKind::Parse, "unknown style '" + style + "'");
                gen.style = *s;
            }
            return cmd_gen(kind, gen, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e);
    }
    return ok;
}
