#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twocat/twocat.hpp"

using namespace twocat;

namespace {

// Exit codes: 0 every check passed, 1 a check failed, 2 bad usage or unreadable input.
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Report {
    std::vector<std::string> lines;
    bool failed = false;

    void info(const std::string& s) { lines.push_back("INFO " + s); }
    void check(bool ok, const std::string& s) {
        lines.push_back((ok ? "OK " : "FAIL ") + s);
        failed = failed || !ok;
    }
    void validation(const ValidationReport& r, const std::string& what) {
        check(r.ok(), what);
        for (const auto& f : r.findings) lines.push_back("FAIL   " + f.kind + ": " + f.detail);
    }
    // Lines that already carry their OK/FAIL/INFO tag.
    void tagged(const std::vector<std::string>& ls) {
        for (const auto& l : ls) {
            lines.push_back(l);
            if (l.rfind("FAIL", 0) == 0) failed = true;
        }
    }
    int emit() const {
        for (const auto& l : lines) std::cout << l << "\n";
        return failed ? kFail : 0;
    }
};

struct Options {
    int cap = 4;
    long long budget = 1000000;
    bool homology = false;
};

Budget make_budget(const Options& o) {
    Budget b;
    b.limit = o.budget;
    return b;
}

[[noreturn]] void usage(const std::string& msg) { throw Error("UsageError", msg); }

Workspace load(const std::string& path) {
    Loader L;
    return L.load(path);
}

bool locally_discrete(const TwoCategory& C) {
    for (int a = 0; a < C.num_cells2(); ++a)
        if (!C.is_id2(a)) return false;
    return true;
}

TwoCatPtr as_twocat(const Workspace& w) {
    switch (w.kind) {
        case Kind::twocat: return w.twocat;
        case Kind::category: return std::make_shared<TwoCategory>(from_category(*w.category));
        case Kind::monoidal: return std::make_shared<TwoCategory>(one_object_from_monoidal(*w.monoidal));
        default: usage(w.path + " is a " + kind_name(w.kind) + ", expected a twocat, category or monoidal file");
    }
}

Category as_category(const Workspace& w) {
    if (w.kind == Kind::category) return *w.category;
    TwoCatPtr C = as_twocat(w);
    if (!locally_discrete(*C)) usage(w.path + " has non-identity 2-cells; the nerve needs a category");
    return underlying_category(*C);
}

std::shared_ptr<TwoDiagram> as_diagram(const Workspace& w) {
    if (w.kind != Kind::diagram) usage(w.path + " is a " + kind_name(w.kind) + ", expected a diagram file");
    return w.diagram;
}

// A twocat file stands for its identity 2-functor.
TwoFunctor as_two_functor(const Workspace& w) {
    if (w.kind != Kind::functor) return identity_functor(as_twocat(w));
    const NormalLaxFunctor& L = *w.functor;
    TwoFunctor F{L.src, L.tgt, L.obj, L.c1, L.c2};
    for (auto [k, a] : L.constraint)
        if (!L.tgt->is_id2(a)) throw Error("NotATwoFunctor", w.path + ": a constraint cell is not an identity");
    ValidationReport r = validate_two_functor(F);
    if (!r.ok()) throw Error("NotATwoFunctor", w.path + ": " + r.findings.front().kind + ": " + r.findings.front().detail);
    return F;
}

std::string sizes(const TruncSimplicialSet& S) {
    std::string s;
    for (int n = 0; n <= S.cap; ++n) s += (n ? " " : "") + std::to_string(S.size(n));
    return s;
}

std::string nondegenerate_sizes(const TruncSimplicialSet& S) {
    std::string s;
    for (int n = 0; n <= S.cap; ++n) s += (n ? " " : "") + std::to_string(S.nondegenerate(n).size());
    return s;
}

void describe(Report& R, const TruncSimplicialSet& S, const Options& o) {
    R.info("simplices per dimension: " + sizes(S));
    R.info("nondegenerate per dimension: " + nondegenerate_sizes(S));
    R.validation(audit_simplicial(S), "simplicial identities hold");
    if (!o.homology) return;
    R.info("pi0 = " + std::to_string(pi0(S)));
    ChainComplex C = chain_complex(S);
    R.check(boundary_squared_zero(C), "boundary squares to zero");
    for (const auto& l : homology(C).lines()) R.info(l);
}

void describe_twocat(Report& R, const TwoCategory& C) {
    R.info("objects " + std::to_string(C.num_objects()) + ", 1-cells " + std::to_string(C.num_cells1()) + ", 2-cells " +
           std::to_string(C.num_cells2()));
}

// Simplicial sets named on the command line as construction:path.
TruncSimplicialSet construct(const std::string& spec, const Options& o) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) usage("expected construction:path, got '" + spec + "'");
    std::string what = spec.substr(0, colon);
    Workspace w = load(spec.substr(colon + 1));
    Budget b = make_budget(o);
    if (what == "nerve") return nerve_category(as_category(w), o.cap);
    if (what == "gnerve") return geometric_nerve(*as_twocat(w), o.cap, b);
    if (what == "dnerve") return diag(double_nerve(*as_twocat(w), o.cap));
    if (what == "wbar") return codiagonal_wbar(double_nerve(*as_twocat(w), o.cap));
    if (what == "grothendieck") return geometric_nerve(grothendieck(*as_diagram(w)).cat(), o.cap, b);
    if (what == "hocolim") return hocolim_geometric(*as_diagram(w), o.cap, b);
    usage("unknown construction '" + what + "' (nerve, gnerve, dnerve, wbar, grothendieck, hocolim)");
}

int cmd_validate(const std::string& path) {
    Report R;
    Workspace w = load(path);
    R.check(true, path + " is a valid " + kind_name(w.kind));
    switch (w.kind) {
        case Kind::twocat: describe_twocat(R, *w.twocat); break;
        case Kind::category:
            R.info("objects " + std::to_string(w.category->num_objects()) + ", arrows " +
                   std::to_string(w.category->num_arrows()));
            break;
        case Kind::monoidal:
            R.info("objects " + std::to_string(w.monoidal->cat.num_objects()) + ", arrows " +
                   std::to_string(w.monoidal->cat.num_arrows()));
            break;
        case Kind::diagram:
            R.info("base: objects " + std::to_string(w.diagram->base->num_objects()) + ", 1-cells " +
                   std::to_string(w.diagram->base->num_cells1()) + ", 2-cells " +
                   std::to_string(w.diagram->base->num_cells2()));
            break;
        case Kind::functor: R.info(w.functor->constraint.empty() ? "constraints are identities" : "lax constraints given"); break;
        case Kind::transformation: R.info(w.transformation->oplax ? "oplax" : "lax"); break;
    }
    return R.emit();
}

int cmd_simplicial(const std::string& what, const std::string& path, const Options& o) {
    Report R;
    TruncSimplicialSet S = construct(what + ":" + path, o);
    describe(R, S, o);
    return R.emit();
}

int cmd_dnerve(const std::string& path, const Options& o) {
    Report R;
    TruncBisimplicialSet B = double_nerve(*as_twocat(load(path)), o.cap);
    for (int p = 0; p <= B.cap; ++p) {
        std::string row;
        for (int q = 0; q <= B.cap; ++q) row += (q ? " " : "") + std::to_string(B.size(p, q));
        R.info("S_{" + std::to_string(p) + ",q}: " + row);
    }
    R.validation(audit_bisimplicial(B), "bisimplicial identities hold");
    if (o.homology) {
        R.info("homology of the diagonal");
        describe(R, diag(B), o);
    }
    return R.emit();
}

int cmd_eta(const std::string& path, const Options& o) {
    Report R;
    TruncBisimplicialSet B = double_nerve(*as_twocat(load(path)), o.cap);
    TruncSimplicialSet D = diag(B), W = codiagonal_wbar(B);
    SimplicialMap eta = zisman_eta(B, D, W);
    R.info("diagonal: " + sizes(D));
    R.info("codiagonal: " + sizes(W));
    R.validation(validate_simplicial_map(D, W, eta), "eta is a simplicial map");
    R.tagged(homology_compare(D, W, &eta).lines());
    return R.emit();
}

int cmd_fibre(const std::string& path, bool under, const std::optional<std::string>& object, std::optional<int> simplex,
              std::optional<int> z, const Options& o) {
    Report R;
    TwoFunctor F = as_two_functor(load(path));
    Side side = under ? Side::under : Side::over;
    Budget b = make_budget(o);
    TwoCatPtr fib;
    if (object) {
        auto x = F.tgt->find_object(*object);
        if (!x) throw Error("UnknownObject", "'" + *object + "'");
        fib = object_fibre(F, *x, side).ptr();
    } else if (simplex) {
        if (*simplex < 0 || *simplex > o.cap) usage("--simplex must lie in 0..cap");
        if (z) {
            TruncSimplicialSet N = geometric_nerve(*F.tgt, *simplex, b);
            if (*z < 0 || *z >= N.size(*simplex)) throw Error("UnknownSimplex", "no " + std::to_string(*simplex) + "-simplex " + std::to_string(*z));
            fib = simplex_fibre(F, simplex_from_key(*F.tgt, *simplex, N.keys[*simplex][*z]), side, b).ptr();
        } else {
            fib = whole_simplex_fibre(F, *simplex, side, b).ptr();
        }
    } else {
        usage("fibre needs --object or --simplex");
    }
    describe_twocat(R, *fib);
    R.validation(validate_two_category(*fib), "fibre passes 2-category validation");
    if (o.homology) describe(R, geometric_nerve(*fib, o.cap, b), o);
    return R.emit();
}

int cmd_comma(const std::string& path, bool under, const std::string& object, const Options& o) {
    Report R;
    TwoCatPtr C = as_twocat(load(path));
    auto x = C->find_object(object);
    if (!x) throw Error("UnknownObject", "'" + object + "'");
    ObjectFibre fib = object_fibre(identity_functor(C), *x, under ? Side::under : Side::over);
    describe_twocat(R, fib.cat());
    R.validation(validate_two_category(fib.cat()), "comma 2-category passes validation");
    Budget b = make_budget(o);
    TruncSimplicialSet S = geometric_nerve(fib.cat(), o.cap, b);
    HomologyReport H = homology(S);
    for (const auto& l : H.lines()) R.info(l);
    R.check(H.is_point(), "point homology through degree " + std::to_string(H.valid_through));
    return R.emit();
}

int cmd_grothendieck(const std::string& path, const Options& o) {
    Report R;
    auto Dp = as_diagram(load(path));
    const TwoDiagram& D = *Dp;
    Grothendieck G = grothendieck(D);
    describe_twocat(R, G.cat());
    R.validation(validate_two_category(G.cat()), "integral passes 2-category validation");
    TwoFunctor pi = projection(D, G);
    R.validation(validate_two_functor(pi), "projection is a 2-functor");
    const TwoCategory& C = *D.base;
    for (int z = 0; z < C.num_objects(); ++z) {
        const std::string& n = C.object_name(z);
        R.validation(validate_two_functor(fibre_embedding(D, G, z)), "fibre embedding over " + n + " is a 2-functor");
        IotaP ip = iota_p_pair(D, G, z);
        R.check(same_functor(compose(ip.p, ip.i), identity_functor(D.fibre[z])), "p i = 1 over " + n);
        R.validation(validate_lax_transformation(ip.theta), "oplax theta: i p => 1 over " + n + " validates");
    }
    if (o.homology) {
        Budget b = make_budget(o);
        describe(R, geometric_nerve(G.cat(), o.cap, b), o);
    }
    return R.emit();
}

bool precondition(const Error& e) {
    static const std::vector<std::string> kinds = {"NonStrictDiagram", "FibreNotCategory", "BaseNotCategory"};
    return std::find(kinds.begin(), kinds.end(), e.kind()) != kinds.end();
}

int cmd_hocolim(const std::string& path, const Options& o) {
    Report R;
    auto Dp = as_diagram(load(path));
    const TwoDiagram& D = *Dp;
    bool any = false;
    try {
        SimplicialCategory S = hocolim_two_functor(D, o.cap);
        any = true;
        for (int n = 0; n <= S.cap; ++n)
            R.info("level " + std::to_string(n) + ": objects " + std::to_string(S.levels[n].num_objects()) + ", arrows " +
                   std::to_string(S.levels[n].num_arrows()));
        R.validation(validate_simplicial_category(S), "hocolim is a simplicial category");
    } catch (const Error& e) {
        if (!precondition(e)) throw;
        R.info("simplicial category skipped: " + std::string(e.what()));
    }
    try {
        Budget b = make_budget(o);
        TruncBisimplicialSet S = hocolim_diagram_of_2cats(D, o.cap, b);
        any = true;
        R.validation(audit_bisimplicial(S), "bisimplicial hocolim satisfies the bisimplicial identities");
        TruncSimplicialSet d = diag(S, true), g = hocolim_geometric(D, o.cap, b);
        R.info("diagonal simplices per dimension: " + sizes(d));
        R.check(same_simplicial_set(d, g), "diagonal equals hocolim of the geometric nerves");
        if (o.homology) describe(R, g, o);
    } catch (const Error& e) {
        if (!precondition(e)) throw;
        R.info("bisimplicial set skipped: " + std::string(e.what()));
    }
    R.check(any, "at least one homotopy colimit applies");
    return R.emit();
}

int cmd_thomason(const std::string& path, const std::string& variant, const Options& o) {
    Report R;
    auto Dp = as_diagram(load(path));
    const TwoDiagram& D = *Dp;
    Budget b = make_budget(o);
    ThomasonResult T = variant == "i" ? thomason_iso_i(D, o.cap) : thomason_iso_ii(D, o.cap, b);
    R.tagged(T.lines());
    R.failed = R.failed || !T.ok();
    return R.emit();
}

int cmd_homology(const std::string& spec, const Options& o) {
    Report R;
    TruncSimplicialSet S = construct(spec, o);
    R.info("simplices per dimension: " + sizes(S));
    R.info("pi0 = " + std::to_string(pi0(S)));
    for (const auto& l : homology(S).lines()) R.info(l);
    return R.emit();
}

int cmd_compare(const std::string& a, const std::string& b, const Options& o) {
    Report R;
    auto fa = std::async(std::launch::async, [&] { return construct(a, o); });
    auto fb = std::async(std::launch::async, [&] { return construct(b, o); });
    TruncSimplicialSet A = fa.get(), B = fb.get();
    EquivalenceReport E = homology_compare(A, B);
    R.tagged(E.lines());
    R.check(E.groups_agree(), "homology agrees through degree " + std::to_string(E.a.valid_through));
    return R.emit();
}

TruncSimplicialSet discrete_points(int k, int cap) {
    TruncSimplicialSet S = point(cap);
    for (int i = 1; i < k; ++i) S = disjoint_union(S, point(cap));
    return S;
}

int cmd_audit_b(const std::string& path, std::optional<int> points, const Options& o) {
    Report R;
    TwoFunctor F = as_two_functor(load(path));
    Budget b = make_budget(o);
    FibreAudit A = audit_w_star(F, o.cap, b);
    R.tagged(A.lines());
    R.check(A.all_equivalences(), "every w* is a homology equivalence");
    if (points) {
        if (*points < 1) usage("--points must be positive");
        for (int z = 0; z < F.tgt->num_objects(); ++z) {
            TruncSimplicialSet S = geometric_nerve(fibre_over(F, z).cat(), o.cap, b);
            EquivalenceReport E = homology_compare(S, discrete_points(*points, o.cap));
            for (const auto& l : E.lines()) R.info("  " + l);
            R.check(E.groups_agree(), "fibre over " + F.tgt->object_name(z) + " has the homology of " +
                                          std::to_string(*points) + " points through degree " +
                                          std::to_string(E.a.valid_through));
        }
    }
    return R.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite 2-categories: nerves, fibres, Grothendieck constructions and homotopy colimits"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c, bool homology_flag = true) {
        c->add_option("--cap", o.cap, "Highest simplicial dimension built")->check(CLI::Range(0, 12));
        c->add_option("--budget", o.budget, "Candidate cells an enumeration may examine")->check(CLI::PositiveNumber);
        if (homology_flag) c->add_flag("--homology", o.homology, "Also report integral homology");
    };

    std::string file, variant = "ii", spec_a, spec_b, object;
    bool over = false, under = false;
    std::optional<std::string> fib_object;
    std::optional<int> simplex, zindex, points;

    auto* validate = app.add_subcommand("validate", "Parse and validate a file");
    validate->add_option("file", file)->required();

    std::vector<std::pair<std::string, std::string>> simple = {
        {"nerve", "Nerve of a category"},
        {"gnerve", "Geometric nerve of a 2-category"},
        {"diag", "Diagonal of the double nerve"},
        {"wbar", "Codiagonal of the double nerve"}};
    std::vector<CLI::App*> simple_cmds;
    for (auto& [name, help] : simple) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", file)->required();
        common(c);
        simple_cmds.push_back(c);
    }
    auto* dnerve = app.add_subcommand("dnerve", "Double nerve of a 2-category");
    dnerve->add_option("file", file)->required();
    common(dnerve);
    auto* eta = app.add_subcommand("eta", "Comparison map from the diagonal to the codiagonal of the double nerve");
    eta->add_option("file", file)->required();
    common(eta, false);

    auto* fibre = app.add_subcommand("fibre", "Homotopy fibre of a 2-functor (a twocat file means its identity)");
    fibre->add_option("file", file)->required();
    auto* fo = fibre->add_flag("--over", over, "Objects with a 1-cell from z (default)");
    fibre->add_flag("--under", under, "Objects with a 1-cell to z")->excludes(fo);
    auto* fobj = fibre->add_option("--object", fib_object, "Fibre over this object of the target");
    fibre->add_option("--simplex", simplex, "Fibre over simplices of this dimension")->excludes(fobj);
    fibre->add_option("--z", zindex, "Index of one simplex of that dimension");
    common(fibre);

    auto* comma = app.add_subcommand("comma", "Comma 2-category z//C or C//z and its homology");
    comma->add_option("file", file)->required();
    comma->add_option("--object", object)->required();
    auto* co = comma->add_flag("--over", over);
    comma->add_flag("--under", under)->excludes(co);
    common(comma, false);

    auto* groth = app.add_subcommand("grothendieck", "Grothendieck construction of a diagram");
    groth->add_option("file", file)->required();
    common(groth);
    auto* hocolim = app.add_subcommand("hocolim", "Homotopy colimits of a diagram");
    hocolim->add_option("file", file)->required();
    common(hocolim);
    auto* thomason = app.add_subcommand("thomason", "Check the comparison bijections for a diagram");
    thomason->add_option("file", file)->required();
    thomason->add_option("--variant", variant)->check(CLI::IsMember({"i", "ii"}));
    common(thomason, false);

    auto* hom = app.add_subcommand("homology", "Homology of construction:path");
    hom->add_option("spec", spec_a)->required();
    common(hom, false);
    auto* compare = app.add_subcommand("compare", "Compare the homology of two constructions");
    compare->add_option("--a", spec_a)->required();
    compare->add_option("--b", spec_b)->required();
    common(compare, false);

    auto* audit = app.add_subcommand("audit-theorem-b", "Check that every w* of a 2-functor is a homology equivalence");
    audit->add_option("file", file)->required();
    audit->add_option("--points", points, "Also compare each fibre with this many points");
    common(audit, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        for (size_t i = 0; i < simple.size(); ++i)
            if (simple_cmds[i]->parsed()) return cmd_simplicial(simple[i].first == "diag" ? "dnerve" : simple[i].first, file, o);
        if (dnerve->parsed()) return cmd_dnerve(file, o);
        if (eta->parsed()) return cmd_eta(file, o);
        if (fibre->parsed()) return cmd_fibre(file, under, fib_object, simplex, zindex, o);
        if (comma->parsed()) return cmd_comma(file, under, object, o);
        if (groth->parsed()) return cmd_grothendieck(file, o);
        if (hocolim->parsed()) return cmd_hocolim(file, o);
        if (thomason->parsed()) return cmd_thomason(file, variant, o);
        if (hom->parsed()) return cmd_homology(spec_a, o);
        if (compare->parsed()) return cmd_compare(spec_a, spec_b, o);
        if (audit->parsed()) return cmd_audit_b(file, points, o);
    } catch (const Error& e) {
        bool bad_input = e.kind() == "UsageError" || e.kind() == "SyntaxError" || e.kind() == "UnknownKind";
        if (bad_input) {
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        }
        std::cout << "FAIL " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
