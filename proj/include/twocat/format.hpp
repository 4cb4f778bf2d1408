#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "twocat/grothendieck.hpp"

namespace twocat {

// Text fixtures. The first non-comment line is "twocat-format 1 <kind>"; every further line is one
// declaration of whitespace-separated tokens; '#' starts a comment.
//
//  twocat:         object X | cell1 U : X -> Y | cell2 A : U => V
//                  hcomp1 U o V = W | vcomp B . A = C | hcomp2 B o A = C
//  category:       object X | arrow F : X -> Y | comp G o F = H
//  monoidal:       the category declarations plus unit E | tensor A B = C
//  diagram:        base PATH | fibre X PATH | ustar U obj A = B | ustar U cell1 F = G
//                  ustar U cell2 P = Q | astar AL A = F | zeta U V A = F
//             or:  action MONOIDAL_PATH CATEGORY_PATH | act A M = B
//  functor:        source PATH | target PATH | obj X = Y | cell1 U = V | cell2 A = B
//                  constraint U V = A
//  transformation: source PATH | target PATH | oplax | component X = F | component2 U = A
//
// Identities are implicit (id:X and id2:U) and may be named in tables. Paths are relative to the
// referencing file. Declarations may appear in any order.
enum class Kind { twocat, category, monoidal, diagram, functor, transformation };

std::string kind_name(Kind k);

struct Workspace {
    Kind kind = Kind::twocat;
    std::string path;
    TwoCatPtr twocat;
    std::shared_ptr<Category> category;
    std::shared_ptr<MonoidalCategory> monoidal;
    std::shared_ptr<TwoDiagram> diagram;
    std::shared_ptr<MonoidalAction> action;  // set when a diagram is given by an action
    std::shared_ptr<NormalLaxFunctor> functor;
    std::shared_ptr<LaxTransformation> transformation;
};

// Resolves referenced files once per path so that shared sources are the same object.
class Loader {
public:
    // Throws SyntaxError (with line and column), UnknownKind or ValidationError.
    Workspace load(const std::string& path);
    Workspace load_text(const std::string& text, const std::string& path);

private:
    std::map<std::string, Workspace> cache_;
};

Workspace parse_file(const std::string& path);

// Comments and blank lines dropped, tokens joined by single spaces, declarations sorted,
// header first, LF endings.
std::string canonical_text(const std::string& text);

// Canonical text of a structure; unit-law table entries are left implicit.
// Throws InvalidName when a name contains whitespace or '#'.
std::string write_twocat(const TwoCategory& C);
std::string write_category(const Category& C);

}  // namespace twocat
