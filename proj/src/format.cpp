#include "twocat/format.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace twocat {

namespace {

namespace fs = std::filesystem;

const char* kHeader = "twocat-format";

struct Tok {
    std::string s;
    int col;
};

struct Line {
    int no;
    std::vector<Tok> t;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        Line l{no, {}};
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i >= raw.size()) break;
            size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            l.t.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (!l.t.empty()) out.push_back(std::move(l));
    }
    return out;
}

std::optional<Kind> kind_of(const std::string& s) {
    for (Kind k : {Kind::twocat, Kind::category, Kind::monoidal, Kind::diagram, Kind::functor, Kind::transformation})
        if (kind_name(k) == s) return k;
    return std::nullopt;
}

class Reader {
public:
    Reader(const std::string& path, std::vector<Line> lines) : path_(path), lines_(std::move(lines)) {}

    [[noreturn]] void syntax(const Line& l, int col, const std::string& msg) const {
        throw Error("SyntaxError", path_ + ":" + std::to_string(l.no) + ":" + std::to_string(col) + ": " + msg);
    }
    [[noreturn]] void invalid(const Line& l, const std::string& kind, const std::string& msg) const {
        throw Error("ValidationError", kind + ": " + path_ + ":" + std::to_string(l.no) + ": " + msg);
    }

    // '*' in the pattern stands for a name.
    const Line& expect(const Line& l, std::initializer_list<const char*> pattern) const {
        size_t i = 0;
        for (const char* p : pattern) {
            if (i >= l.t.size()) syntax(l, l.t.back().col + static_cast<int>(l.t.back().s.size()), std::string("expected ") + (std::string(p) == "*" ? "a name" : "'" + std::string(p) + "'"));
            if (std::string(p) != "*" && l.t[i].s != p) syntax(l, l.t[i].col, "expected '" + std::string(p) + "', found '" + l.t[i].s + "'");
            ++i;
        }
        if (i < l.t.size()) syntax(l, l.t[i].col, "unexpected '" + l.t[i].s + "'");
        return l;
    }

    std::vector<const Line*> with(const std::string& keyword) const {
        std::vector<const Line*> out;
        for (const Line& l : lines_)
            if (l.t[0].s == keyword) out.push_back(&l);
        return out;
    }

    void only(std::initializer_list<const char*> keywords) const {
        for (const Line& l : lines_) {
            bool ok = false;
            for (const char* k : keywords) ok = ok || l.t[0].s == k;
            if (!ok) syntax(l, l.t[0].col, "unknown declaration '" + l.t[0].s + "'");
        }
    }

    std::string resolve(const std::string& rel) const {
        fs::path p(rel);
        if (p.is_relative()) p = fs::path(path_).parent_path() / p;
        return p.lexically_normal().string();
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::vector<Line> lines_;
};

void forward(const Reader& r, const ValidationReport& rep) {
    if (rep.ok()) return;
    const auto& f = rep.findings.front();
    throw Error("ValidationError", f.kind + ": " + r.path() + ": " + f.detail);
}

int obj_of(const Reader& r, const Line& l, const TwoCategory& C, const Tok& t, const char* kind = "UnknownCell") {
    auto x = C.find_object(t.s);
    if (!x) r.invalid(l, kind, "unknown object '" + t.s + "'");
    return *x;
}

int c1_of(const Reader& r, const Line& l, const TwoCategory& C, const Tok& t, const char* kind = "UnknownCell") {
    auto u = C.find_cell1(t.s);
    if (!u) r.invalid(l, kind, "unknown 1-cell '" + t.s + "'");
    return *u;
}

int c2_of(const Reader& r, const Line& l, const TwoCategory& C, const Tok& t) {
    auto a = C.find_cell2(t.s);
    if (!a) r.invalid(l, "UnknownCell", "unknown 2-cell '" + t.s + "'");
    return *a;
}

void put(const Reader& r, const Line& l, std::vector<int>& v, int at, int val) {
    if (v[at] >= 0 && v[at] != val) r.invalid(l, "ConflictingEntry", "entry given twice with different values");
    v[at] = val;
}

TwoCatPtr read_twocat(const Reader& r) {
    r.only({"object", "cell1", "cell2", "hcomp1", "vcomp", "hcomp2"});
    auto C = std::make_shared<TwoCategory>();
    auto guarded = [&](const Line& l, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            r.invalid(l, "DuplicateName", e.what());
        }
    };
    for (const Line* l : r.with("object")) guarded(*l, [&] { C->add_object(r.expect(*l, {"object", "*"}).t[1].s); });
    for (const Line* l : r.with("cell1")) {
        r.expect(*l, {"cell1", "*", ":", "*", "->", "*"});
        int x = obj_of(r, *l, *C, l->t[3], "BoundaryMismatch"), y = obj_of(r, *l, *C, l->t[5], "BoundaryMismatch");
        guarded(*l, [&] { C->add_cell1(l->t[1].s, x, y); });
    }
    for (const Line* l : r.with("cell2")) {
        r.expect(*l, {"cell2", "*", ":", "*", "=>", "*"});
        int u = c1_of(r, *l, *C, l->t[3], "BoundaryMismatch"), v = c1_of(r, *l, *C, l->t[5], "BoundaryMismatch");
        if (C->src1(u) != C->src1(v) || C->tgt1(u) != C->tgt1(v))
            r.invalid(*l, "BoundaryMismatch", "2-cell between non-parallel 1-cells");
        guarded(*l, [&] { C->add_cell2(l->t[1].s, u, v); });
    }
    auto once = [&](const Line& l, int old, int val) {
        if (old >= 0 && old != val) r.invalid(l, "ConflictingEntry", "entry given twice with different values");
    };
    for (const Line* l : r.with("hcomp1")) {
        r.expect(*l, {"hcomp1", "*", "o", "*", "=", "*"});
        int u = c1_of(r, *l, *C, l->t[1]), v = c1_of(r, *l, *C, l->t[3]), w = c1_of(r, *l, *C, l->t[5]);
        once(*l, C->hcomp1(u, v), w);
        C->set_hcomp1(u, v, w);
    }
    for (const Line* l : r.with("vcomp")) {
        r.expect(*l, {"vcomp", "*", ".", "*", "=", "*"});
        int b = c2_of(r, *l, *C, l->t[1]), a = c2_of(r, *l, *C, l->t[3]), c = c2_of(r, *l, *C, l->t[5]);
        once(*l, C->vcomp(b, a), c);
        C->set_vcomp(b, a, c);
    }
    for (const Line* l : r.with("hcomp2")) {
        r.expect(*l, {"hcomp2", "*", "o", "*", "=", "*"});
        int b = c2_of(r, *l, *C, l->t[1]), a = c2_of(r, *l, *C, l->t[3]), c = c2_of(r, *l, *C, l->t[5]);
        once(*l, C->hcomp2(b, a), c);
        C->set_hcomp2(b, a, c);
    }
    C->fill_units();
    forward(r, validate_two_category(*C));
    return C;
}

int cat_obj(const Reader& r, const Line& l, const Category& C, const Tok& t, const char* kind = "UnknownCell") {
    auto x = C.find_object(t.s);
    if (!x) r.invalid(l, kind, "unknown object '" + t.s + "'");
    return *x;
}

int cat_arr(const Reader& r, const Line& l, const Category& C, const Tok& t) {
    auto f = C.find_arrow(t.s);
    if (!f) r.invalid(l, "UnknownCell", "unknown arrow '" + t.s + "'");
    return *f;
}

void read_category_into(const Reader& r, Category& C) {
    auto fresh = [&](const Line& l, const std::string& n) {
        if (C.find_object(n) || C.find_arrow(n)) r.invalid(l, "DuplicateName", "duplicate identifier '" + n + "'");
    };
    for (const Line* l : r.with("object")) {
        r.expect(*l, {"object", "*"});
        fresh(*l, l->t[1].s);
        C.add_object(l->t[1].s);
    }
    for (const Line* l : r.with("arrow")) {
        r.expect(*l, {"arrow", "*", ":", "*", "->", "*"});
        fresh(*l, l->t[1].s);
        C.add_arrow(l->t[1].s, cat_obj(r, *l, C, l->t[3], "BoundaryMismatch"), cat_obj(r, *l, C, l->t[5], "BoundaryMismatch"));
    }
    for (const Line* l : r.with("comp")) {
        r.expect(*l, {"comp", "*", "o", "*", "=", "*"});
        int g = cat_arr(r, *l, C, l->t[1]), f = cat_arr(r, *l, C, l->t[3]), h = cat_arr(r, *l, C, l->t[5]);
        if (C.comp(g, f) >= 0 && C.comp(g, f) != h)
            r.invalid(*l, "ConflictingEntry", "entry given twice with different values");
        C.set_comp(g, f, h);
    }
    C.fill_units();
}

void fill_functor_units(TwoFunctor& F) {
    const TwoCategory &S = *F.src, &T = *F.tgt;
    for (int x = 0; x < S.num_objects(); ++x)
        if (F.c1[S.id1(x)] < 0 && F.obj[x] >= 0) F.c1[S.id1(x)] = T.id1(F.obj[x]);
    for (int u = 0; u < S.num_cells1(); ++u)
        if (F.c2[S.id2(u)] < 0 && F.c1[u] >= 0) F.c2[S.id2(u)] = T.id2(F.c1[u]);
}

bool total(const TwoFunctor& F) {
    auto full = [](const std::vector<int>& v) { return std::find(v.begin(), v.end(), -1) == v.end(); };
    return full(F.obj) && full(F.c1) && full(F.c2);
}

}  // namespace

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::twocat: return "twocat";
        case Kind::category: return "category";
        case Kind::monoidal: return "monoidal";
        case Kind::diagram: return "diagram";
        case Kind::functor: return "functor";
        case Kind::transformation: return "transformation";
    }
    return "";
}

Workspace parse_file(const std::string& path) {
    Loader L;
    return L.load(path);
}

Workspace Loader::load(const std::string& path) {
    std::string key = fs::path(path).lexically_normal().string();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::ifstream in(key, std::ios::binary);
    if (!in) throw Error("SyntaxError", key + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    Workspace w = load_text(ss.str(), key);
    cache_[key] = w;
    return w;
}

Workspace Loader::load_text(const std::string& text, const std::string& path) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) throw Error("SyntaxError", path + ":1:1: empty file, expected '" + std::string(kHeader) + " 1 <kind>'");
    Line head = lines.front();
    lines.erase(lines.begin());
    Reader r(path, lines);
    if (head.t[0].s != kHeader) r.syntax(head, head.t[0].col, "expected '" + std::string(kHeader) + "'");
    if (head.t.size() != 3) r.syntax(head, head.t[0].col, "header needs a version and a kind");
    if (head.t[1].s != "1") r.syntax(head, head.t[1].col, "unsupported format version '" + head.t[1].s + "'");
    auto kind = kind_of(head.t[2].s);
    if (!kind) throw Error("UnknownKind", path + ":" + std::to_string(head.no) + ":" + std::to_string(head.t[2].col) + ": '" + head.t[2].s + "'");

    Workspace w;
    w.kind = *kind;
    w.path = path;
    auto sub = [&](const Line& l, size_t at, Kind want) {
        std::string p = r.resolve(l.t[at].s);
        Workspace s;
        try {
            s = load(p);
        } catch (const Error& e) {
            if (e.kind() == "SyntaxError" && !fs::exists(p))
                r.syntax(l, l.t[at].col, "cannot resolve referenced file '" + l.t[at].s + "'");
            throw;
        }
        if (s.kind != want) r.syntax(l, l.t[at].col, "'" + l.t[at].s + "' is a " + kind_name(s.kind) + ", expected " + kind_name(want));
        return s;
    };
    auto single = [&](const char* kw) -> const Line& {
        auto ls = r.with(kw);
        if (ls.size() != 1) throw Error("SyntaxError", path + ": expected exactly one '" + std::string(kw) + "' declaration");
        return *ls.front();
    };

    switch (w.kind) {
        case Kind::twocat:
            w.twocat = read_twocat(r);
            break;
        case Kind::category: {
            r.only({"object", "arrow", "comp"});
            w.category = std::make_shared<Category>();
            read_category_into(r, *w.category);
            forward(r, validate_category(*w.category));
            break;
        }
        case Kind::monoidal: {
            r.only({"object", "arrow", "comp", "unit", "tensor"});
            w.monoidal = std::make_shared<MonoidalCategory>();
            MonoidalCategory& M = *w.monoidal;
            read_category_into(r, M.cat);
            const Line& u = r.expect(single("unit"), {"unit", "*"});
            M.unit = cat_obj(r, u, M.cat, u.t[1]);
            for (const Line* l : r.with("tensor")) {
                r.expect(*l, {"tensor", "*", "*", "=", "*"});
                auto a = M.cat.find_object(l->t[1].s);
                auto set = [&](std::unordered_map<uint64_t, int>& table, uint64_t k, int v) {
                    auto [it, fresh_entry] = table.emplace(k, v);
                    if (!fresh_entry && it->second != v)
                        r.invalid(*l, "ConflictingEntry", "entry given twice with different values");
                };
                if (a)
                    set(M.tensor_obj, pair_key(*a, cat_obj(r, *l, M.cat, l->t[2])), cat_obj(r, *l, M.cat, l->t[4]));
                else
                    set(M.tensor_arr, pair_key(cat_arr(r, *l, M.cat, l->t[1]), cat_arr(r, *l, M.cat, l->t[2])),
                        cat_arr(r, *l, M.cat, l->t[4]));
            }
            for (auto [k, c] : M.tensor_obj) {
                int a = static_cast<int>(k >> 32), b = static_cast<int>(k & 0xffffffffu);
                M.tensor_arr.emplace(pair_key(M.cat.id(a), M.cat.id(b)), M.cat.id(c));
            }
            forward(r, validate_category(M.cat));
            try {
                forward(r, validate_two_category(one_object_from_monoidal(M)));
            } catch (const Error& e) {
                if (e.kind() == "ValidationError") throw;
                throw Error("ValidationError", std::string("MissingTableEntry: ") + e.what());
            }
            break;
        }
        case Kind::diagram: {
            if (!r.with("action").empty()) {
                r.only({"action", "act"});
                const Line& a = r.expect(single("action"), {"action", "*", "*"});
                auto A = std::make_shared<MonoidalAction>();
                A->M = *sub(a, 1, Kind::monoidal).monoidal;
                A->N = *sub(a, 2, Kind::category).category;
                const Category &N = A->N, &M = A->M.cat;
                for (const Line* l : r.with("act")) {
                    r.expect(*l, {"act", "*", "*", "=", "*"});
                    if (N.find_object(l->t[1].s))
                        A->act_obj[pair_key(cat_obj(r, *l, N, l->t[1]), cat_obj(r, *l, M, l->t[2]))] = cat_obj(r, *l, N, l->t[4]);
                    else
                        A->act_arr[pair_key(cat_arr(r, *l, N, l->t[1]), cat_arr(r, *l, M, l->t[2]))] = cat_arr(r, *l, N, l->t[4]);
                }
                for (auto [k, c] : A->act_obj) {
                    int x = static_cast<int>(k >> 32), m = static_cast<int>(k & 0xffffffffu);
                    A->act_arr.emplace(pair_key(N.id(x), M.id(m)), N.id(c));
                }
                forward(r, validate_action(*A));
                w.action = A;
                w.diagram = std::make_shared<TwoDiagram>(action_diagram(*A));
                break;
            }
            r.only({"base", "fibre", "ustar", "astar", "zeta"});
            auto D = std::make_shared<TwoDiagram>();
            const Line& b = r.expect(single("base"), {"base", "*"});
            D->base = sub(b, 1, Kind::twocat).twocat;
            const TwoCategory& C = *D->base;
            D->fibre.assign(C.num_objects(), nullptr);
            for (const Line* l : r.with("fibre")) {
                r.expect(*l, {"fibre", "*", "*"});
                int x = obj_of(r, *l, C, l->t[1]);
                if (D->fibre[x]) r.invalid(*l, "ConflictingEntry", "second fibre over '" + l->t[1].s + "'");
                D->fibre[x] = sub(*l, 2, Kind::twocat).twocat;
            }
            for (int x = 0; x < C.num_objects(); ++x)
                if (!D->fibre[x]) throw Error("ValidationError", "MissingTableEntry: " + path + ": no fibre over '" + C.object_name(x) + "'");
            D->ustar.resize(C.num_cells1());
            D->astar.resize(C.num_cells2());
            for (const Line* l : r.with("ustar")) {
                if (l->t.size() != 6) r.expect(*l, {"ustar", "*", "obj", "*", "=", "*"});
                int u = c1_of(r, *l, C, l->t[1]);
                const TwoCategory &Fs = D->F(C.tgt1(u)), &Ft = D->F(C.src1(u));
                TwoFunctor& us = D->ustar[u];
                if (!us.src)
                    us = TwoFunctor{D->fibre[C.tgt1(u)], D->fibre[C.src1(u)], std::vector<int>(Fs.num_objects(), -1),
                                    std::vector<int>(Fs.num_cells1(), -1), std::vector<int>(Fs.num_cells2(), -1)};
                const std::string& what = l->t[2].s;
                if (what == "obj") {
                    r.expect(*l, {"ustar", "*", "obj", "*", "=", "*"});
                    put(r, *l, us.obj, obj_of(r, *l, Fs, l->t[3]), obj_of(r, *l, Ft, l->t[5]));
                } else if (what == "cell1") {
                    r.expect(*l, {"ustar", "*", "cell1", "*", "=", "*"});
                    put(r, *l, us.c1, c1_of(r, *l, Fs, l->t[3]), c1_of(r, *l, Ft, l->t[5]));
                } else if (what == "cell2") {
                    r.expect(*l, {"ustar", "*", "cell2", "*", "=", "*"});
                    put(r, *l, us.c2, c2_of(r, *l, Fs, l->t[3]), c2_of(r, *l, Ft, l->t[5]));
                } else {
                    r.syntax(*l, l->t[2].col, "expected 'obj', 'cell1' or 'cell2'");
                }
            }
            for (int u = 0; u < C.num_cells1(); ++u) {
                TwoFunctor& us = D->ustar[u];
                if (!us.src) continue;
                fill_functor_units(us);
                if (!total(us)) throw Error("ValidationError", "MissingTableEntry: " + path + ": " + C.cell1(u).name + "* is not defined on every cell");
            }
            for (const Line* l : r.with("astar")) {
                r.expect(*l, {"astar", "*", "*", "=", "*"});
                int al = c2_of(r, *l, C, l->t[1]);
                int u = C.src2(al);
                const TwoCategory &Fs = D->F(C.tgt1(u)), &Ft = D->F(C.src1(u));
                auto& comp = D->astar[al];
                if (comp.empty()) comp.assign(Fs.num_objects(), -1);
                put(r, *l, comp, obj_of(r, *l, Fs, l->t[2]), c1_of(r, *l, Ft, l->t[4]));
            }
            for (const Line* l : r.with("zeta")) {
                r.expect(*l, {"zeta", "*", "*", "*", "=", "*"});
                int u = c1_of(r, *l, C, l->t[1]), v = c1_of(r, *l, C, l->t[2]);
                if (C.src1(u) != C.tgt1(v)) r.invalid(*l, "BoundaryMismatch", "zeta needs composable 1-cells");
                const TwoCategory &Fz = D->F(C.tgt1(u)), &Fx = D->F(C.src1(v));
                auto& comp = D->zeta[pair_key(u, v)];
                if (comp.empty()) comp.assign(Fz.num_objects(), -1);
                put(r, *l, comp, obj_of(r, *l, Fz, l->t[3]), c1_of(r, *l, Fx, l->t[5]));
            }
            fill_diagram_defaults(*D);
            forward(r, validate_two_diagram(*D));
            w.diagram = D;
            break;
        }
        case Kind::functor: {
            r.only({"source", "target", "obj", "cell1", "cell2", "constraint"});
            auto F = std::make_shared<NormalLaxFunctor>();
            F->src = sub(r.expect(single("source"), {"source", "*"}), 1, Kind::twocat).twocat;
            F->tgt = sub(r.expect(single("target"), {"target", "*"}), 1, Kind::twocat).twocat;
            const TwoCategory &S = *F->src, &T = *F->tgt;
            TwoFunctor G{F->src, F->tgt, std::vector<int>(S.num_objects(), -1), std::vector<int>(S.num_cells1(), -1),
                         std::vector<int>(S.num_cells2(), -1)};
            for (const Line* l : r.with("obj")) {
                r.expect(*l, {"obj", "*", "=", "*"});
                put(r, *l, G.obj, obj_of(r, *l, S, l->t[1]), obj_of(r, *l, T, l->t[3]));
            }
            for (const Line* l : r.with("cell1")) {
                r.expect(*l, {"cell1", "*", "=", "*"});
                put(r, *l, G.c1, c1_of(r, *l, S, l->t[1]), c1_of(r, *l, T, l->t[3]));
            }
            for (const Line* l : r.with("cell2")) {
                r.expect(*l, {"cell2", "*", "=", "*"});
                put(r, *l, G.c2, c2_of(r, *l, S, l->t[1]), c2_of(r, *l, T, l->t[3]));
            }
            fill_functor_units(G);
            if (!total(G)) throw Error("ValidationError", "MissingTableEntry: " + path + ": functor is not defined on every cell");
            F->obj = G.obj;
            F->c1 = G.c1;
            F->c2 = G.c2;
            for (const Line* l : r.with("constraint")) {
                r.expect(*l, {"constraint", "*", "*", "=", "*"});
                F->constraint[pair_key(c1_of(r, *l, S, l->t[1]), c1_of(r, *l, S, l->t[2]))] = c2_of(r, *l, T, l->t[4]);
            }
            forward(r, validate_lax_functor(*F));
            w.functor = F;
            break;
        }
        case Kind::transformation: {
            r.only({"source", "target", "oplax", "component", "component2"});
            auto t = std::make_shared<LaxTransformation>();
            t->F = *sub(r.expect(single("source"), {"source", "*"}), 1, Kind::functor).functor;
            t->G = *sub(r.expect(single("target"), {"target", "*"}), 1, Kind::functor).functor;
            for (const Line* l : r.with("oplax")) r.expect(*l, {"oplax"});
            t->oplax = !r.with("oplax").empty();
            const TwoCategory &S = *t->F.src, &T = *t->F.tgt;
            t->comp1.assign(S.num_objects(), -1);
            t->comp2.assign(S.num_cells1(), -1);
            for (const Line* l : r.with("component")) {
                r.expect(*l, {"component", "*", "=", "*"});
                put(r, *l, t->comp1, obj_of(r, *l, S, l->t[1]), c1_of(r, *l, T, l->t[3]));
            }
            for (const Line* l : r.with("component2")) {
                r.expect(*l, {"component2", "*", "=", "*"});
                put(r, *l, t->comp2, c1_of(r, *l, S, l->t[1]), c2_of(r, *l, T, l->t[3]));
            }
            for (int x = 0; x < S.num_objects(); ++x)
                if (t->comp2[S.id1(x)] < 0 && t->comp1[x] >= 0) t->comp2[S.id1(x)] = T.id2(t->comp1[x]);
            if (std::count(t->comp1.begin(), t->comp1.end(), -1) || std::count(t->comp2.begin(), t->comp2.end(), -1))
                throw Error("ValidationError", "MissingTableEntry: " + path + ": transformation lacks components");
            forward(r, validate_lax_transformation(*t));
            w.transformation = t;
            break;
        }
    }
    return w;
}

std::string canonical_text(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    std::vector<std::string> body;
    std::string head;
    for (size_t i = 0; i < lines.size(); ++i) {
        std::string s;
        for (const Tok& t : lines[i].t) s += (s.empty() ? "" : " ") + t.s;
        if (i == 0)
            head = s;
        else
            body.push_back(s);
    }
    std::sort(body.begin(), body.end());
    std::string out = head.empty() ? "" : head + "\n";
    for (const auto& s : body) out += s + "\n";
    return out;
}

namespace {

const std::string& checked(const std::string& name) {
    if (name.empty() || std::any_of(name.begin(), name.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '#'; }))
        throw Error("InvalidName", "'" + name + "' cannot be written to a fixture");
    return name;
}

std::string assemble_text(const std::string& kind, std::vector<std::string> body) {
    std::sort(body.begin(), body.end());
    std::string out = std::string(kHeader) + " 1 " + kind + "\n";
    for (const auto& s : body) out += s + "\n";
    return out;
}

std::pair<int, int> unpack(uint64_t k) { return {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)}; }

}  // namespace

std::string write_twocat(const TwoCategory& C) {
    std::vector<std::string> body;
    auto o = [&](int x) { return checked(C.object_name(x)); };
    auto n1 = [&](int u) { return checked(C.cell1(u).name); };
    auto n2 = [&](int a) { return checked(C.cell2(a).name); };
    auto id_of_id = [&](int a) { return C.is_id2(a) && C.is_id1(C.src2(a)); };
    for (int x = 0; x < C.num_objects(); ++x) body.push_back("object " + o(x));
    for (int u = 0; u < C.num_cells1(); ++u)
        if (!C.is_id1(u)) body.push_back("cell1 " + n1(u) + " : " + o(C.src1(u)) + " -> " + o(C.tgt1(u)));
    for (int a = 0; a < C.num_cells2(); ++a)
        if (!C.is_id2(a)) body.push_back("cell2 " + n2(a) + " : " + n1(C.src2(a)) + " => " + n1(C.tgt2(a)));
    for (auto [k, w] : C.hcomp1_table()) {
        auto [u, v] = unpack(k);
        if (!C.is_id1(u) && !C.is_id1(v)) body.push_back("hcomp1 " + n1(u) + " o " + n1(v) + " = " + n1(w));
    }
    for (auto [k, c] : C.vcomp_table()) {
        auto [b, a] = unpack(k);
        if (!C.is_id2(a) && !C.is_id2(b)) body.push_back("vcomp " + n2(b) + " . " + n2(a) + " = " + n2(c));
    }
    for (auto [k, c] : C.hcomp2_table()) {
        auto [b, a] = unpack(k);
        if (id_of_id(a) || id_of_id(b) || (C.is_id2(a) && C.is_id2(b))) continue;
        body.push_back("hcomp2 " + n2(b) + " o " + n2(a) + " = " + n2(c));
    }
    return assemble_text("twocat", std::move(body));
}

std::string write_category(const Category& C) {
    std::vector<std::string> body;
    for (int x = 0; x < C.num_objects(); ++x) body.push_back("object " + checked(C.object_name(x)));
    for (int f = 0; f < C.num_arrows(); ++f)
        if (!C.is_id(f))
            body.push_back("arrow " + checked(C.arrow_name(f)) + " : " + C.object_name(C.src(f)) + " -> " + C.object_name(C.tgt(f)));
    for (int g = 0; g < C.num_arrows(); ++g)
        for (int f : C.into(C.src(g))) {
            if (C.is_id(f) || C.is_id(g)) continue;
            body.push_back("comp " + C.arrow_name(g) + " o " + C.arrow_name(f) + " = " + C.arrow_name(C.comp(g, f)));
        }
    return assemble_text("category", std::move(body));
}

}  // namespace twocat
