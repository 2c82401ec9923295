// legmcs: command line front end.
//
// Exit codes: 0 success, 1 invalid input, 2 property violation, 3 budget
// exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "legmcs/disks.hpp"
#include "legmcs/errors.hpp"
#include "legmcs/render.hpp"
#include "legmcs/verify.hpp"

using namespace legmcs;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("FileNotFound", "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("FileNotWritable", "cannot write " + path);
    out << text;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct Loaded {
    std::shared_ptr<const FrontDiagram> diagram;
    Differential d;
};

Loaded load(const std::string& path)
{
    Loaded l;
    l.diagram = std::make_shared<const FrontDiagram>(load_front(read_file(path)));
    l.d = differential(*l.diagram);
    return l;
}

// "a1,a3", "{a1, a3}", "none" or "".
Augmentation parse_augmentation(const Differential& d, std::string spec)
{
    for (char& c : spec)
        if (c == '{' || c == '}' || c == ',')
            c = ' ';
    std::istringstream in(spec);
    std::vector<int> support;
    std::string name;
    while (in >> name) {
        if (name == "none" || name == "0")
            continue;
        int id = -1;
        for (const auto& g : d.generators)
            if (generator_name(d, g.id) == name)
                id = g.id;
        if (id < 0)
            throw InputError("UnknownGenerator", "no generator named " + name);
        support.push_back(id);
    }
    return augmentation_from_support(d, support);
}

std::string support_text(const Differential& d, const Augmentation& eps)
{
    std::string out;
    for (int g : eps.support())
        out += (out.empty() ? "" : ",") + generator_name(d, g);
    return "{" + out + "}";
}

const char* kind_name(GeneratorKind k) { return k == GeneratorKind::Crossing ? "crossing" : "right cusp"; }

int cmd_validate(const std::string& file)
{
    const auto l = load(file);
    const auto& dg = *l.diagram;
    std::cout << "front     " << dg.word() << "\n";
    std::cout << "events    " << dg.event_count() << "\n";
    std::cout << "rotation  " << dg.rotation() << "\n";
    std::cout << "maslov   ";
    for (const auto& arc : dg.arcs())
        std::cout << " " << dg.maslov_of_arc(arc.id);
    std::cout << "\n";
    for (const auto& g : l.d.generators)
        std::cout << "  " << generator_name(l.d, g.id) << "  " << kind_name(g.kind) << " at event " << g.eventIndex
                  << ", degree " << g.degree << "\n";
    std::cout << "valid\n";
    return 0;
}

int cmd_dga(const std::string& file, const std::string& jsonOut)
{
    const auto l = load(file);
    if (!check_d_squared(l.d))
        throw PropertyViolation("DSquaredNonzero", "d^2 != 0 on " + l.diagram->word());
    if (!degree_homogeneous(l.d))
        throw PropertyViolation("DegreeInhomogeneous", "differential is not degree homogeneous");
    for (const auto& g : l.d.generators) {
        std::cout << "d " << generator_name(l.d, g.id) << " = ";
        if (l.d.terms[g.id].empty())
            std::cout << "0";
        bool first = true;
        for (const auto& w : l.d.terms[g.id]) {
            std::cout << (first ? "" : " + ") << word_to_string(l.d, w);
            first = false;
        }
        std::cout << "\n";
    }
    if (!jsonOut.empty())
        write_file(jsonOut, to_json(l.d).dump(2) + "\n");
    return 0;
}

int cmd_augs(const std::string& file, const std::string& jsonOut)
{
    const auto l = load(file);
    const auto augs = enumerate_augmentations(l.d);
    const auto classes = homotopy_classes(augs, l.d);
    std::cout << augs.size() << " augmentations, " << classes.count() << " homotopy classes\n";
    for (int c = 0; c < classes.count(); ++c) {
        std::cout << "class " << c << ":";
        for (int idx : classes.classes[c])
            std::cout << " " << support_text(l.d, augs[idx]);
        std::cout << "\n";
    }
    for (const auto& [pair, cert] : classes.certificates) {
        if (pair.first == pair.second)
            continue;
        std::cout << "  H " << support_text(l.d, augs[pair.first]) << " -> " << support_text(l.d, augs[pair.second])
                  << " : ";
        std::string h;
        for (int g : cert.support())
            h += (h.empty() ? "" : ",") + generator_name(l.d, g);
        std::cout << "{" << h << "}\n";
    }
    if (!jsonOut.empty())
        write_file(jsonOut, to_json(augs, classes).dump(2) + "\n");
    return 0;
}

int cmd_mcs_equiv(const std::string& file, const std::string& a, const std::string& b, const std::string& jsonOut,
                  bool deep)
{
    const auto l = load(file);
    const MCS c = build_a_form(l.diagram, l.d, parse_augmentation(l.d, a));
    const MCS cp = build_a_form(l.diagram, l.d, parse_augmentation(l.d, b));
    SweepOptions opts;
    opts.checkInvariant = deep;
    const auto trace = are_equivalent(c, cp, l.d, opts);
    if (!trace) {
        std::cout << "not equivalent\n";
        return 0;
    }
    std::cout << "equivalent: " << trace->size() << " moves\n";
    for (const auto& step : *trace)
        std::cout << "  " << describe(step) << "\n";
    if (!jsonOut.empty())
        write_file(jsonOut, to_json(*trace).dump(2) + "\n");
    return 0;
}

int cmd_mcs_aform(const std::string& file, const std::string& a, const std::string& jsonOut)
{
    const auto l = load(file);
    const MCS m = build_a_form(l.diagram, l.d, parse_augmentation(l.d, a));
    const std::string text = to_json(m).dump(2) + "\n";
    if (jsonOut.empty())
        std::cout << text;
    else
        write_file(jsonOut, text);
    return 0;
}

int cmd_invariants(const std::string& file, const std::string& out, const std::string& store, bool printJson)
{
    const Analysis a = analyze(stem(file), read_file(file));
    SweepOptions opts;
    opts.checkInvariant = false;
    const auto eq = mcs_classes(a, opts);
    std::vector<CheckResult> checks = {check_dga(a, false), check_class_counts(a, eq, false), check_linhom(a),
                                       check_rulings(a)};
    const auto report = invariant_report(a, eq, checks);
    const std::string text = report.dump(2) + "\n";
    if (printJson) {
        std::cout << text;
    } else {
        std::cout << "front             " << a.diagram->word() << "\n";
        std::cout << "augmentations     " << a.augs.size() << "\n";
        std::cout << "homotopy classes  " << a.classes.count() << "\n";
        std::cout << "MCS classes       " << eq.mcsClassCount << "\n";
        for (int c = 0; c < a.classes.count(); ++c)
            std::cout << "  class " << c << "  LCH " << report["classes"][c]["poincare_string"].get<std::string>()
                      << "  ruling " << report["classes"][c]["ruling"].get<std::string>() << "\n";
    }
    if (!out.empty())
        write_file(out, text);
    if (!store.empty()) {
        std::filesystem::create_directories(store);
        char name[32];
        std::snprintf(name, sizeof name, "%016llx.json",
                      static_cast<unsigned long long>(fnv1a(a.diagram->word())));
        write_file((std::filesystem::path(store) / name).string(), text);
    }
    for (const auto& c : checks)
        if (!c.passed)
            throw PropertyViolation("Criterion" + std::to_string(c.criterion), c.detail);
    return 0;
}

void print_check(const CheckResult& r)
{
    std::printf("%s  %2d  %-40s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.criterion, r.name.c_str(),
                r.detail.c_str(), r.seconds);
}

int cmd_verify(const std::string& file, const std::string& corpusDir, bool deep, int fuzz)
{
    std::vector<Analysis> corpus;
    if (!corpusDir.empty())
        corpus = load_corpus(corpusDir);
    else if (!file.empty())
        corpus.push_back(analyze(stem(file), read_file(file)));
    else
        throw InputError("MissingInput", "verify needs a file or --corpus");
    if (corpus.empty())
        throw InputError("EmptyCorpus", "no .front files in " + corpusDir);

    SweepOptions opts;
    opts.checkInvariant = deep;
    std::vector<CheckResult> results;
    std::vector<EquivalenceResult> eqs;
    for (const auto& a : corpus) {
        const auto eq = mcs_classes(a, opts);
        eqs.push_back(eq);
        results.push_back(check_dga(a, deep));
        results.push_back(check_disk_agreement(a));
        results.push_back(check_class_counts(a, eq, deep));
        results.push_back(check_aform_tables(a));
        results.push_back(check_mark_parity(a));
        if (deep)
            results.push_back(check_sweep_invariant(a, eq));
        results.push_back(check_homotopy_audit(a, deep));
        results.push_back(check_linhom(a));
        results.push_back(check_rulings(a));
    }
    if (deep && fuzz > 0)
        results.push_back(check_fuzz(corpus, fuzz, 1));
    if (corpus.size() > 1)
        results.push_back(check_count_pairs(corpus, eqs));

    int failed = 0;
    for (const auto& r : results) {
        print_check(r);
        failed += !r.passed;
    }
    if (failed) {
        for (const auto& r : results)
            if (!r.passed) {
                std::cerr << "violated: criterion " << r.criterion << " (" << r.name << ")\n";
                break;
            }
        return 2;
    }
    std::cout << "all checks passed\n";
    return 0;
}

int cmd_render(const std::string& file, const std::string& mcsFile, const std::string& aug, const std::string& disksFrom,
               const std::string& svgOut)
{
    const auto l = load(file);
    std::optional<MCS> m;
    if (!mcsFile.empty())
        m = mcs_from_json(l.diagram, nlohmann::json::parse(read_file(mcsFile)));
    else if (!aug.empty())
        m = build_a_form(l.diagram, l.d, parse_augmentation(l.d, aug));
    std::vector<DiskBoundary> disks;
    if (!disksFrom.empty()) {
        DiskQuery q;
        q.kind = DiskClass::ZeroMinusOne;
        for (const auto& g : l.d.generators)
            if (generator_name(l.d, g.id) == disksFrom)
                q.originGenerator = g.id;
        if (q.originGenerator < 0)
            throw InputError("UnknownGenerator", "no generator named " + disksFrom);
        disks = enumerate_front_disks(*l.diagram, q);
    }
    const std::string svg = render_svg(*l.diagram, m ? &*m : nullptr, disks);
    if (svgOut.empty())
        std::cout << svg;
    else
        write_file(svgOut, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Legendrian knot invariants from front diagrams"};
    app.require_subcommand(1);

    std::string file, jsonOut, out, store, corpusDir, augA, augB, mcsFile, svgOut, disksFrom;
    bool deep = false, printJson = false;
    int fuzz = 10000;

    auto* validate = app.add_subcommand("validate", "parse a front and compute its Maslov potential");
    validate->add_option("file", file, "front file")->required();

    auto* dga = app.add_subcommand("dga", "print the differential");
    dga->add_option("file", file, "front file")->required();
    dga->add_option("--json", jsonOut, "write the differential as JSON");

    auto* augs = app.add_subcommand("augs", "augmentations and homotopy classes");
    augs->add_option("file", file, "front file")->required();
    augs->add_option("--json", jsonOut, "write augmentations, classes and certificates as JSON");

    auto* mcs = app.add_subcommand("mcs", "Morse complex sequences");
    mcs->require_subcommand(1);
    auto* equiv = mcs->add_subcommand("equiv", "sweep between the A-form MCSs of two augmentations");
    equiv->add_option("file", file, "front file")->required();
    equiv->add_option("--aug", augA, "first augmentation, e.g. a1,a3")->required();
    equiv->add_option("--aug2", augB, "second augmentation")->required();
    equiv->add_option("--json", jsonOut, "write the move trace as JSON");
    equiv->add_flag("--deep", deep, "check the sweep invariant after every event");
    auto* aform = mcs->add_subcommand("aform", "print the A-form MCS of an augmentation");
    aform->add_option("file", file, "front file")->required();
    aform->add_option("--aug", augA, "augmentation, e.g. a1,a3")->required();
    aform->add_option("--json", jsonOut, "write to a file instead of stdout");

    auto* inv = app.add_subcommand("invariants", "full invariant report");
    inv->add_option("file", file, "front file")->required();
    inv->add_option("--out", out, "write the report JSON");
    inv->add_option("--store", store, "also write the report to <dir>/<hash of front word>.json");
    inv->add_flag("--json", printJson, "print the report JSON instead of a summary");

    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("file", file, "front file");
    verify->add_option("--corpus", corpusDir, "directory of .front files");
    verify->add_flag("--deep", deep, "brute-force oracles, sweep invariant checks and move fuzzing");
    verify->add_option("--fuzz", fuzz, "move applications for the fuzz check with --deep");

    auto* render = app.add_subcommand("render", "SVG drawing of a front");
    render->add_option("file", file, "front file")->required();
    render->add_option("--mcs", mcsFile, "MCS JSON to overlay");
    render->add_option("--aug", augA, "overlay the A-form MCS of this augmentation");
    render->add_option("--disks", disksFrom, "overlay the (0,-1) disks from this degree-0 crossing");
    render->add_option("--svg", svgOut, "output file (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*validate)
            return cmd_validate(file);
        if (*dga)
            return cmd_dga(file, jsonOut);
        if (*augs)
            return cmd_augs(file, jsonOut);
        if (*equiv)
            return cmd_mcs_equiv(file, augA, augB, jsonOut, deep);
        if (*aform)
            return cmd_mcs_aform(file, augA, jsonOut);
        if (*inv)
            return cmd_invariants(file, out, store, printJson);
        if (*verify)
            return cmd_verify(file, corpusDir, deep, fuzz);
        if (*render)
            return cmd_render(file, mcsFile, augA, disksFrom, svgOut);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.family()) {
        case ErrorFamily::InvalidInput: return 1;
        case ErrorFamily::PropertyViolation: std::cerr << "violated: " << e.kind() << "\n"; return 2;
        case ErrorFamily::Budget: return 3;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
