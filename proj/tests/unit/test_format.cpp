#include <catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace twocat;

namespace {

std::string read(const std::string& name) {
    std::ifstream in(fixtures::path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

std::string error_text(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("fixture 2-categories parse and validate") {
    for (const char* name : {"point.tc", "E.tc", "interval.tc", "discrete2.tc", "sigma_z2.tc", "sigma_z3.tc", "wedge.tc",
                             "bz2.tc", "bz3.tc", "chain.tc"}) {
        INFO(name);
        Workspace w = parse_file(fixtures::path(name));
        CHECK(w.kind == Kind::twocat);
        REQUIRE(w.twocat);
        CHECK(validate_two_category(*w.twocat).ok());
    }
    CHECK(write_twocat(*fixtures::load_twocat("E.tc")) == write_twocat(*fixtures::walking_two_cell()));
}

TEST_CASE("other kinds parse") {
    Workspace c = parse_file(fixtures::path("pq.cat"));
    CHECK(c.kind == Kind::category);
    CHECK(c.category->num_objects() == 2);

    Workspace m = parse_file(fixtures::path("z2.mon"));
    CHECK(m.kind == Kind::monoidal);
    CHECK(validate_two_category(one_object_from_monoidal(*m.monoidal)).ok());

    Workspace f = parse_file(fixtures::path("point_to_sigma_z2.fun"));
    CHECK(f.kind == Kind::functor);
    CHECK(validate_lax_functor(*f.functor).ok());

    Workspace a = parse_file(fixtures::path("z2_self.2d"));
    CHECK(a.kind == Kind::diagram);
    REQUIRE(a.action);
    CHECK(validate_action(*a.action).ok());

    Loader L;
    std::string fun = "twocat-format 1 functor\nsource E.tc\ntarget E.tc\nobj 0 = 0\nobj 1 = 1\n"
                      "cell1 u = u\ncell1 v = v\ncell2 a = a\n";
    Workspace id = L.load_text(fun, fixtures::path("id_E.fun"));
    CHECK(validate_lax_functor(*id.functor).ok());
}

TEST_CASE("transformations parse") {
    std::string fun = "twocat-format 1 functor\nsource E.tc\ntarget E.tc\nobj 0 = 0\nobj 1 = 1\n"
                      "cell1 u = u\ncell1 v = v\ncell2 a = a\n";
    std::string tmp = (std::filesystem::temp_directory_path() / "twocat_nat_fixture").string();
    std::filesystem::create_directories(tmp);
    std::filesystem::copy_file(fixtures::path("E.tc"), tmp + "/E.tc", std::filesystem::copy_options::overwrite_existing);
    std::ofstream(tmp + "/id_E.fun") << fun;
    Loader L;
    std::string nat = "twocat-format 1 transformation\nsource id_E.fun\ntarget id_E.fun\n"
                      "component 0 = id:0\ncomponent 1 = id:1\ncomponent2 u = id2:u\ncomponent2 v = id2:v\n";
    Workspace t = L.load_text(nat, tmp + "/id.nat");
    CHECK(t.kind == Kind::transformation);
    REQUIRE(t.transformation);
    CHECK(validate_lax_transformation(*t.transformation).ok());
    std::filesystem::remove_all(tmp);
}

TEST_CASE("malformed files report their kind") {
    CHECK(error_kind([] { parse_file(fixtures::path("bad/dangling.tc")); }) == "ValidationError");
    CHECK(error_text([] { parse_file(fixtures::path("bad/dangling.tc")); }).find("BoundaryMismatch") != std::string::npos);
    CHECK(error_kind([] { parse_file(fixtures::path("bad/missing_fibre.2d")); }) == "SyntaxError");
    CHECK(error_kind([] { parse_file(fixtures::path("bad/kind.tc")); }) == "UnknownKind");
    CHECK(error_kind([] { parse_file(fixtures::path("bad/syntax.tc")); }) == "SyntaxError");
    CHECK(error_text([] { parse_file(fixtures::path("bad/syntax.tc")); }).find(":3:9") != std::string::npos);
    CHECK(error_kind([] { parse_file(fixtures::path("bad/cocycle.2d")); }) == "ValidationError");
    CHECK(error_text([] { parse_file(fixtures::path("bad/cocycle.2d")); }).find("ZetaCocycleViolation") !=
          std::string::npos);

    Loader L;
    std::string base = fixtures::path("inline.tc");
    CHECK(error_kind([&] { L.load_text("twocat-format 1 twocat\nobject x\nobject x\n", base); }) == "ValidationError");
    CHECK(error_kind([&] {
              L.load_text("twocat-format 1 twocat\nobject x\ncell1 f : x -> x\nhcomp1 f o f = f\nhcomp1 f o f = id:x\n",
                          base);
          }) == "ValidationError");
    CHECK(error_kind([&] { L.load_text("object x\n", base); }) == "SyntaxError");
    CHECK(error_kind([&] { L.load_text("twocat-format 1 twocat\nfrobnicate x\n", base); }) == "SyntaxError");
}

TEST_CASE("canonical text") {
    std::string messy = "# comment\ntwocat-format 1 twocat\n\ncell1   u : 1 -> 0   # trailing\nobject 1\nobject 0\n";
    std::string canon = canonical_text(messy);
    CHECK(canon == "twocat-format 1 twocat\ncell1 u : 1 -> 0\nobject 0\nobject 1\n");
    CHECK(canonical_text(canon) == canon);
}

TEST_CASE("writing a 2-category round-trips") {
    for (const char* name : {"point.tc", "E.tc", "interval.tc", "sigma_z2.tc", "sigma_z3.tc", "wedge.tc", "bz3.tc",
                             "chain.tc"}) {
        INFO(name);
        std::string text = write_twocat(*fixtures::load_twocat(name));
        CHECK(text == canonical_text(read(name)));
        Loader L;
        Workspace again = L.load_text(text, fixtures::path(name));
        CHECK(write_twocat(*again.twocat) == text);
    }
    Category O = ordinal(2);
    std::string text = write_category(O);
    Loader L;
    Workspace c = L.load_text(text, fixtures::path("o2.cat"));
    CHECK(write_category(*c.category) == text);

    TwoCategory bad;
    bad.add_object("has space");
    CHECK(error_kind([&] { write_twocat(bad); }) == "InvalidName");
}

TEST_CASE("declaration order does not matter") {
    std::mt19937 rng(11);
    for (const char* name : {"wedge.tc", "bz3.tc", "chain.tc"}) {
        std::string canon = canonical_text(read(name));
        std::vector<std::string> lines;
        std::stringstream ss(canon);
        std::string line, header;
        std::getline(ss, header);
        while (std::getline(ss, line)) lines.push_back(line);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(lines.begin(), lines.end(), rng);
            std::string text = header + "\n";
            for (const auto& l : lines) text += l + "\n";
            Loader L;
            CHECK(write_twocat(*L.load_text(text, fixtures::path(name)).twocat) == canon);
        }
    }
}

TEST_CASE("shared references load once") {
    Loader L;
    Workspace a = L.load(fixtures::path("E.tc"));
    Workspace b = L.load(fixtures::path("E.tc"));
    CHECK(a.twocat == b.twocat);
    Workspace w = L.load(fixtures::path("wedge.2d"));
    CHECK(w.diagram->fibre[0] == w.diagram->fibre[1]);
    CHECK(w.diagram->fibre[1] == w.diagram->fibre[2]);
}
