// hk — finite Krasner (m,n)-hyperring toolkit: axiom verification,
// hyperideal classification, radicals, constructions, and an executable
// theorem suite over desk-scale structures.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hk/classify.hpp"
#include "hk/construct.hpp"
#include "hk/core.hpp"
#include "hk/fixtures.hpp"
#include "hk/format.hpp"
#include "hk/ideal.hpp"
#include "hk/morphism.hpp"
#include "hk/theorems.hpp"

using namespace hk;

namespace {

struct LoadedFile {
    StructureFile file;
    std::vector<std::string> endo_names;
    std::vector<Morphism> endos;  // verified declared endomorphisms
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

LoadedFile load(const std::string& path) {
    LoadedFile out;
    out.file = parse_structure(read_file(path), path);
    for (const auto& pe : out.file.endos) {
        MorphismCheck check = verify_morphism(pe.map, out.file.table, out.file.table);
        if (!check.ok)
            throw Error(ErrorKind::Precondition,
                        path + ":" + std::to_string(pe.line) + ": endo " + pe.name +
                            " fails the " + check.condition + " condition at " +
                            out.file.table->label_tuple(check.witness.elements));
        out.endo_names.push_back(pe.name);
        out.endos.push_back(Morphism{out.file.table, out.file.table, pe.map, true});
    }
    return out;
}

Morphism resolve_endo(const LoadedFile& f, const std::string& spec) {
    if (spec == "identity") return identity_morphism(f.file.table);
    for (size_t i = 0; i < f.endo_names.size(); ++i)
        if (f.endo_names[i] == spec) return f.endos[i];
    return make_morphism(f.file.table, f.file.table, parse_map_literal(*f.file.table, spec));
}

// bare `endo NAME: a->b ...` lines resolved against a table
std::vector<std::pair<std::string, Morphism>> parse_endo_file(const TablePtr& table,
                                                              const std::string& path) {
    std::vector<std::pair<std::string, Morphism>> out;
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head != "endo")
            throw Error(ErrorKind::Parse,
                        path + ":" + std::to_string(lineno) + ": expected only endo lines");
        std::string name;
        ls >> name;
        if (!name.empty() && name.back() == ':') name.pop_back();
        std::string rest;
        std::getline(ls, rest);
        out.emplace_back(name, make_morphism(table, table, parse_map_literal(*table, rest)));
    }
    return out;
}

void print_set(const std::string& key, const HyperringTable& H, const ElemSet& s) {
    std::cout << key << ": " << H.label_set(s) << "\n";
}

int cmd_verify(const std::string& path) {
    LoadedFile f = load(path);
    AxiomReport report = verify_axioms(*f.file.table);
    std::cout << render_axiom_report(*f.file.table, report);
    return report.passed ? 0 : 1;
}

int cmd_ideals(const std::string& path) {
    LoadedFile f = load(path);
    auto ideals = enumerate_hyperideals(f.file.table);
    std::cout << "structure: " << f.file.table->name << "\n";
    std::cout << "hyperideals: " << ideals.size() << "\n";
    for (const auto& i : ideals) print_set("ideal", *f.file.table, i.members);
    return 0;
}

int cmd_endos(const std::string& path, long cap) {
    LoadedFile f = load(path);
    auto endos = enumerate_endomorphisms(f.file.table, cap);
    std::cout << "structure: " << f.file.table->name << "\n";
    std::cout << "endomorphisms: " << endos.size() << "\n";
    for (const auto& e : endos) std::cout << "endo: " << endo_display_name(e) << "\n";
    return 0;
}

int cmd_classify(const std::string& path, const std::string& kind, const std::string& ideal,
                 const std::string& endo) {
    LoadedFile f = load(path);
    TablePtr H = f.file.table;
    std::cout << "structure: " << H->name << "\n";
    std::cout << "kind: " << kind << "\n";

    auto need_ideal = [&] {
        if (ideal.empty())
            throw Error(ErrorKind::Precondition, "--ideal is required for kind " + kind);
        return parse_element_list(*H, ideal);
    };
    auto need_endo = [&] {
        if (endo.empty())
            throw Error(ErrorKind::Precondition, "--endo is required for kind " + kind);
        return resolve_endo(f, endo);
    };

    ClassificationVerdict v;
    if (kind == "prime") v = is_prime(H, need_ideal());
    else if (kind == "primary") v = is_primary(H, need_ideal());
    else if (kind == "endo-prime") v = is_endo_prime(H, need_ideal(), need_endo());
    else if (kind == "endo-primary") v = is_endo_primary(H, need_ideal(), need_endo());
    else if (kind == "strongly-endo-prime")
        v = is_strongly_endo_prime(H, need_ideal(), need_endo());
    else if (kind == "maximal") {
        bool holds = is_maximal(H, need_ideal());
        v = ClassificationVerdict{"maximal", holds, {}, {}};
    } else if (kind == "theta-maximal") {
        v = is_theta_maximal(H, need_ideal(), need_endo());
    } else if (kind == "domain") {
        v = is_hyperintegral_domain(H);
    } else if (kind == "theta-domain") {
        v = is_theta_domain(H, need_endo());
    } else {
        throw Error(ErrorKind::Precondition, "unknown kind '" + kind + "'");
    }

    std::cout << "holds: " << (v.holds ? "true" : "false") << "\n";
    if (v.witness) {
        if (!v.witness->elements.empty())
            std::cout << "witness: " << H->label_tuple(v.witness->elements) << "\n";
        if (v.witness->position >= 0)
            std::cout << "witness-position: " << v.witness->position << "\n";
        for (const auto& s : v.witness->ideals) print_set("witness-ideal", *H, s);
    }
    for (const auto& w : v.warnings) std::cout << "warning: " << w << "\n";
    return v.holds ? 0 : 1;
}

int cmd_radical(const std::string& path, const std::string& ideal, bool prime,
                const std::string& endo) {
    LoadedFile f = load(path);
    TablePtr H = f.file.table;
    if (prime && !endo.empty())
        throw Error(ErrorKind::Precondition, "--prime and --endo are mutually exclusive");
    ElemSet I = parse_element_list(*H, ideal);
    make_ideal(H, I);
    std::cout << "structure: " << H->name << "\n";
    print_set("ideal", *H, I);
    if (!H->has_one() && !prime)
        std::cout << "warning: no declared one; exponents restricted to r = l(n-1)+1\n";
    if (prime) {
        print_set("prime-radical", *H, prime_radical(H, I));
    } else if (!endo.empty()) {
        print_set("theta-radical", *H, theta_radical(*H, I, resolve_endo(f, endo)));
    } else {
        print_set("radical", *H, radical(*H, I));
    }
    return 0;
}

int cmd_colon(const std::string& path, const std::string& ideal, const std::string& set) {
    LoadedFile f = load(path);
    TablePtr H = f.file.table;
    ElemSet I = parse_element_list(*H, ideal);
    make_ideal(H, I);
    ElemSet A = parse_element_list(*H, set);
    std::cout << "structure: " << H->name << "\n";
    print_set("ideal", *H, I);
    print_set("set", *H, A);
    print_set("colon", *H, colon(*H, I, A));
    return 0;
}

int cmd_quotient(const std::string& path, const std::string& ideal, const std::string& outpath) {
    LoadedFile f = load(path);
    TablePtr H = f.file.table;
    QuotientStructure q = quotient(H, parse_element_list(*H, ideal));
    std::cout << "structure: " << q.table->name << "\n";
    std::cout << "classes: " << q.table->size() << "\n";
    for (const auto& l : q.table->labels) std::cout << "class: " << l << "\n";
    print_set("projection-kernel", *H, kernel(q.projection));
    AxiomReport report = verify_axioms(*q.table);
    std::cout << "axioms: " << (report.passed ? "pass" : "fail") << "\n";
    if (!outpath.empty()) {
        std::ofstream out(outpath, std::ios::binary);
        out << serialize(*q.table);
        std::cout << "written: " << outpath << "\n";
    }
    return report.passed ? 0 : 1;
}

int cmd_product(const std::string& path1, const std::string& path2, const std::string& outpath) {
    LoadedFile a = load(path1);
    LoadedFile b = load(path2);
    TablePtr prod = product(a.file.table, b.file.table);
    std::cout << "structure: " << prod->name << "\n";
    std::cout << "elements: " << prod->size() << "\n";
    AxiomReport report = verify_axioms(*prod);
    std::cout << "axioms: " << (report.passed ? "pass" : "fail") << "\n";
    if (!outpath.empty()) {
        std::ofstream out(outpath, std::ios::binary);
        out << serialize(*prod);
        std::cout << "written: " << outpath << "\n";
    }
    return report.passed ? 0 : 1;
}

int cmd_theorems(const std::vector<std::string>& paths, const std::string& endos_mode,
                 const std::string& only_csv, bool timings, long cap) {
    std::vector<CorpusEntry> corpus;
    for (const auto& path : paths) {
        LoadedFile f = load(path);
        CorpusEntry entry;
        entry.name = f.file.table->name;
        entry.table = f.file.table;
        if (endos_mode == "all") {
            entry.endos = enumerate_endomorphisms(f.file.table, cap);
            for (const auto& e : entry.endos)
                entry.endo_names.push_back(endo_display_name(e));
        } else {
            for (auto& [name, morph] : parse_endo_file(f.file.table, endos_mode)) {
                entry.endo_names.push_back(name);
                entry.endos.push_back(std::move(morph));
            }
        }
        corpus.push_back(std::move(entry));
    }
    std::vector<std::string> only;
    if (!only_csv.empty()) {
        std::istringstream is(only_csv);
        std::string id;
        while (std::getline(is, id, ',')) only.push_back(id);
    }
    std::vector<TheoremReport> reports = run_suite(corpus, only);
    std::cout << render_suite(reports, timings);
    long violations = 0;
    for (const auto& r : reports) violations += static_cast<long>(r.violations.size());
    return violations == 0 ? 0 : 1;
}

int cmd_search(const std::vector<std::string>& paths, const std::string& property, long cap) {
    std::vector<CorpusEntry> corpus;
    for (const auto& path : paths) {
        LoadedFile f = load(path);
        corpus.push_back(make_corpus_entry(f.file.table, cap));
    }
    auto hits = search(corpus, property);
    std::cout << "property: " << property << "\n";
    std::cout << "found: " << hits.size() << "\n";
    for (const auto& h : hits) {
        const CorpusEntry* entry = nullptr;
        for (const auto& e : corpus)
            if (e.name == h.structure) entry = &e;
        std::cout << "hit: structure=" << h.structure
                  << " ideal=" << entry->table->label_set(h.ideal) << " endo=" << h.endo << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------
// paper-examples: the bundled claims about the example structures

struct ClaimLog {
    int failures = 0;
    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "ok: " : "FAIL: ") << what << "\n";
        if (!ok) ++failures;
    }
};

// the tuple violates the elementwise prime condition
bool is_prime_violation(const HyperringTable& H, const ElemSet& Q, const std::vector<Elem>& t) {
    if (!Q.contains(H.mul(t))) return false;
    for (Elem e : t)
        if (Q.contains(e)) return false;
    return true;
}

// some position fails both clauses of the endo-prime condition
bool is_endo_prime_violation(const HyperringTable& H, const ElemSet& E, const Morphism& theta,
                             const std::vector<Elem>& t) {
    if (!E.contains(H.mul(t))) return false;
    Elem one = H.one_or_throw();
    for (int i = 0; i < H.n; ++i) {
        if (E.contains(t[i])) continue;
        std::vector<Elem> sub = t;
        sub[i] = one;
        if (!E.contains(theta.map[H.mul(sub)])) return true;
    }
    return false;
}

int cmd_paper_examples() {
    ClaimLog log;
    TablePtr p = fixtures::p().table;
    TablePtr g = fixtures::g().table;
    TablePtr s4 = fixtures::s4().table;
    TablePtr s4n = fixtures::s4_no_one().table;
    TablePtr pxp = product(p, p, "pxp");
    Morphism swap = swap_endo(pxp, p->size());

    {
        AxiomReport r = verify_axioms(*p);
        log.check(r.passed && r.warnings.empty(), "p satisfies every axiom with no warnings");
        AxiomReport rg = verify_axioms(*g);
        log.check(rg.passed && rg.warnings.empty(), "g satisfies every axiom with no warnings");
        AxiomReport rs = verify_axioms(*s4);
        log.check(rs.passed && rs.warnings.size() == 1 && rs.warnings[0].id == "one-not-neutral",
                  "s4 satisfies the core axioms; its declared one is not a scalar identity");
    }
    {
        std::vector<Elem> t{*s4->index_of("1"), *s4->index_of("1")};
        ElemSet expect(s4->size());
        expect.insert(*s4->index_of("0"));
        expect.insert(*s4->index_of("1"));
        log.check(iterated_add(*s4, 1, t) == expect, "on s4, 1+1 = {0,1}");
    }
    {
        std::vector<Elem> a{*s4->index_of("2"), *s4->index_of("3"), *s4->index_of("3"),
                            *s4->index_of("2")};
        std::vector<Elem> b{*s4->index_of("1"), *s4->index_of("2"), *s4->index_of("3"),
                            *s4->index_of("3")};
        log.check(iterated_mul(*s4, 1, a) == *s4->index_of("2"), "on s4, k(2,3,3,2) = 2");
        log.check(iterated_mul(*s4, 1, b) == *s4->index_of("0"), "on s4, k(1,2,3,3) = 0");
        log.check(power(*s4, *s4->index_of("2"), 4) == *s4->index_of("2"), "on s4, 2^4 = 2");
    }
    log.check(swap.verified, "the coordinate swap is an endomorphism of pxp");
    log.check(is_invertible(*p, *p->index_of("u")), "u is invertible in p");
    log.check(is_invertible(*g, *g->index_of("v")), "v is invertible in g");
    {
        Morphism id = identity_morphism(p);
        bool zmax = is_theta_maximal(p, ElemSet::single(p->size(), p->zero), id).holds;
        auto maxes = max_spectrum(p);
        bool single = maxes.size() == 1 && maxes[0].members == kernel(id);
        log.check(zmax && single, "zero is theta-maximal in p and Max(p) = {ker theta}");
    }
    {
        ElemSet zero = ElemSet::single(s4->size(), s4->zero);
        ClassificationVerdict v = is_prime(s4, zero);
        std::vector<Elem> paper{*s4->index_of("1"), *s4->index_of("2"), *s4->index_of("3"),
                                *s4->index_of("3")};
        log.check(!v.holds, "the zero hyperideal of s4 is not 4-ary prime");
        log.check(is_prime_violation(*s4, zero, paper), "k(1,2,3,3) = 0 with 1,2,3 outside 0");
        for (const auto& theta : enumerate_endomorphisms(s4))
            log.check(is_endo_prime(s4, zero, theta).holds,
                      "the zero hyperideal of s4 is endo-prime for theta = " +
                          endo_display_name(theta));
    }
    {
        ElemSet zero = ElemSet::single(pxp->size(), pxp->zero);
        ClassificationVerdict v = is_endo_prime(pxp, zero, swap);
        log.check(!v.holds, "the zero hyperideal of pxp is not endo-prime under the swap");
        std::vector<Elem> paper{*pxp->index_of("(1,0)"), *pxp->index_of("(0,1)")};
        log.check(is_endo_prime_violation(*pxp, zero, swap, paper),
                  "(1,0)*(0,1) lands in zero with all four clauses failing");
        log.check(swap.image_of(zero).subset_of(zero), "the swap stabilizes the zero hyperideal");
    }
    {
        // primes stable under theta are endo-prime, on every bundled structure
        std::vector<std::pair<std::string, TablePtr>> tables = {
            {"p", p}, {"g", g}, {"s4", s4}, {"pxp", pxp}};
        for (auto& [name, H] : tables) {
            auto endos = enumerate_endomorphisms(H);
            for (const auto& ideal : enumerate_hyperideals(H)) {
                if (!ideal.proper() || !is_prime_set(*H, ideal.members)) continue;
                for (const auto& theta : endos) {
                    if (!theta.image_of(ideal.members).subset_of(ideal.members)) continue;
                    log.check(is_endo_prime(H, ideal.members, theta).holds,
                              "stable prime " + H->label_set(ideal.members) + " of " + name +
                                  " is endo-prime for theta = " + endo_display_name(theta));
                }
            }
        }
    }
    {
        // every endo-prime hyperideal is endo-primary, over the bundled instances
        std::vector<TablePtr> tables = {p, g, s4, pxp};
        bool all = true;
        for (const auto& H : tables) {
            auto endos = enumerate_endomorphisms(H);
            for (const auto& ideal : enumerate_hyperideals(H)) {
                if (!ideal.proper()) continue;
                for (const auto& theta : endos)
                    if (is_endo_prime(H, ideal.members, theta).holds &&
                        !is_endo_primary(H, ideal.members, theta).holds)
                        all = false;
            }
        }
        log.check(all, "every bundled endo-prime instance is endo-primary");
    }
    log.check(is_hyperintegral_domain(g).holds, "g is a hyperintegral domain");
    log.check(!is_hyperintegral_domain(s4).holds, "s4 is not a hyperintegral domain");
    {
        QuotientStructure q = quotient(s4n, parse_element_list(*s4n, "0,1"));
        Elem cls2 = q.class_of[*s4n->index_of("2")];
        std::vector<Elem> t(q.table->n, cls2);
        log.check(q.table->size() == 2 && q.table->mul(t) == cls2,
                  "s4 mod {0,1} has two classes and the class of 2 is idempotent under k");
    }
    std::cout << (log.failures == 0 ? "paper-examples: all claims hold\n"
                                    : "paper-examples: failures\n");
    return log.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Krasner (m,n)-hyperring toolkit"};
    app.require_subcommand(1);

    std::string path, path2, ideal, endo, kind, set, outpath, property;
    std::string endos_mode = "all", only;
    std::vector<std::string> paths;
    bool prime_flag = false, timings = false;
    long cap = 10'000'000;

    auto* verify = app.add_subcommand("verify", "check every structural axiom");
    verify->add_option("file", path)->required();

    auto* ideals = app.add_subcommand("ideals", "enumerate all hyperideals");
    ideals->add_option("file", path)->required();

    auto* endos = app.add_subcommand("endos", "enumerate all endomorphisms");
    endos->add_option("file", path)->required();
    endos->add_option("--cap", cap, "search node budget");

    auto* classify = app.add_subcommand("classify", "run a classification predicate");
    classify->add_option("file", path)->required();
    classify
        ->add_option("--kind", kind,
                     "prime|primary|endo-prime|endo-primary|strongly-endo-prime|maximal|"
                     "theta-maximal|domain|theta-domain")
        ->required();
    classify->add_option("--ideal", ideal, "comma-separated element labels");
    classify->add_option("--endo", endo, "identity, a declared endo name, or a->b c->d ...");

    auto* radical = app.add_subcommand("radical", "exponent, prime, or theta radical");
    radical->add_option("file", path)->required();
    radical->add_option("--ideal", ideal)->required();
    radical->add_flag("--prime", prime_flag, "intersection of containing primes");
    radical->add_option("--endo", endo, "theta-radical under this endomorphism");

    auto* colon_cmd = app.add_subcommand("colon", "colon of a hyperideal by a set");
    colon_cmd->add_option("file", path)->required();
    colon_cmd->add_option("--ideal", ideal)->required();
    colon_cmd->add_option("--set", set)->required();

    auto* quot = app.add_subcommand("quotient", "coset quotient by a hyperideal");
    quot->add_option("file", path)->required();
    quot->add_option("--ideal", ideal)->required();
    quot->add_option("-o,--output", outpath, "write the quotient table");

    auto* prod = app.add_subcommand("product", "componentwise product of two structures");
    prod->add_option("file1", path)->required();
    prod->add_option("file2", path2)->required();
    prod->add_option("-o,--output", outpath, "write the product table");

    auto* theorems = app.add_subcommand("theorems", "run the theorem suite");
    theorems->add_option("files", paths)->required()->expected(-1);
    theorems->add_option("--endos", endos_mode, "all, or a file of endo lines");
    theorems->add_option("--only", only, "comma-separated theorem ids");
    theorems->add_flag("--timings", timings, "include elapsed times");
    theorems->add_option("--cap", cap, "endomorphism search budget");

    auto* search_cmd = app.add_subcommand("search", "scan for separating instances");
    search_cmd->add_option("files", paths)->required()->expected(-1);
    search_cmd
        ->add_option("--property", property,
                     "endo-prime-not-prime|theta-stable-not-endo-prime|endo-primary-not-endo-prime")
        ->required();
    search_cmd->add_option("--cap", cap, "endomorphism search budget");

    auto* paper = app.add_subcommand("paper-examples", "check the bundled example claims");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(path);
        if (ideals->parsed()) return cmd_ideals(path);
        if (endos->parsed()) return cmd_endos(path, cap);
        if (classify->parsed()) return cmd_classify(path, kind, ideal, endo);
        if (radical->parsed()) return cmd_radical(path, ideal, prime_flag, endo);
        if (colon_cmd->parsed()) return cmd_colon(path, ideal, set);
        if (quot->parsed()) return cmd_quotient(path, ideal, outpath);
        if (prod->parsed()) return cmd_product(path, path2, outpath);
        if (theorems->parsed()) return cmd_theorems(paths, endos_mode, only, timings, cap);
        if (search_cmd->parsed()) return cmd_search(paths, property, cap);
        if (paper->parsed()) return cmd_paper_examples();
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return 2;
    }
    return 2;
}
