#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace loday {

enum class ShapeFamily {
    associative,
    dialgebra,
    trialgebra,
    dendriform,
    tridendriform,
    quadri,
    ennea,
};

std::string family_name(ShapeFamily f);
std::optional<ShapeFamily> family_from_name(const std::string& name);

/// Planar rooted tree; a node with no children is a leaf. Internal vertices
/// of dialgebra shapes have exactly two children, trialgebra shapes at least
/// two. Leaves are labeled 0..n left to right.
struct Tree {
    std::vector<Tree> children;
    bool is_leaf() const { return children.empty(); }
    int leaves() const;
    bool binary() const;
    bool planar_wellformed() const;  // every internal vertex has >= 2 children
    bool operator==(const Tree&) const = default;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    size_t position;
};

/// One element of U_n for some family. The payload variant matches the
/// family: unit marker, label, subset, label pair, subset pair, or tree.
class Shape {
public:
    using SubsetPair = std::pair<std::vector<int>, std::vector<int>>;

    static Shape unit();                               // associative
    static Shape label(int k);                         // dendriform, k >= 1
    static Shape subset(std::vector<int> s);           // tridendriform
    static Shape label_pair(int r, int s);             // quadri
    static Shape subset_pair(std::vector<int> r, std::vector<int> s);  // ennea
    static Shape tree(Tree t, ShapeFamily f);          // dialgebra / trialgebra

    ShapeFamily family() const { return family_; }
    std::string str() const;
    static Shape parse(ShapeFamily f, const std::string& text);

    bool operator==(const Shape& o) const { return family_ == o.family_ && data_ == o.data_; }

    int as_label() const { return std::get<int>(data_); }
    const std::vector<int>& as_subset() const { return std::get<std::vector<int>>(data_); }
    const std::pair<int, int>& as_label_pair() const { return std::get<std::pair<int, int>>(data_); }
    const SubsetPair& as_subset_pair() const { return std::get<SubsetPair>(data_); }
    const Tree& as_tree() const { return std::get<Tree>(data_); }

private:
    Shape(ShapeFamily f, auto&& payload) : family_(f), data_(std::forward<decltype(payload)>(payload)) {}
    ShapeFamily family_;
    std::variant<std::monostate, int, std::vector<int>, std::pair<int, int>, SubsetPair, Tree> data_;
};

struct ShapeTerm {
    Shape shape;
    long coeff;  // >= 1
};
using FormalShapeSum = std::vector<ShapeTerm>;

/// |U_n| by closed form (cross-checked against enumerate in the test suite).
long family_count(ShapeFamily f, int n);

/// All of U_n in canonical order: lexicographic on the canonical strings.
/// Cached; the returned reference stays valid for the process lifetime.
const std::vector<Shape>& enumerate(ShapeFamily f, int n);

/// Position of a shape in enumerate(f, n); throws if it is not a member.
int shape_index(ShapeFamily f, int n, const Shape& s);

/// Delete the i-th leaf of a tree shape (0-based). The parent vertex is
/// contracted when it becomes unary.
Shape face(const Shape& tree_shape, int i);

/// Structure function R_0(m; 1,...,n,...,1) with n in the i-th slot,
/// U_{m+n-1} -> U_m.
Shape r0(ShapeFamily f, int m, int n, int i, const Shape& r);

/// Structure function R_i(m; 1,...,n,...,1) : U_{m+n-1} -> K[U_n].
/// Coefficients are all >= 1; for tree families the sum has one term.
FormalShapeSum ri(ShapeFamily f, int m, int n, int i, const Shape& r);

/// Index-level tables for (f, m, n, i): r0 and ri of every shape of
/// U_{m+n-1}, resolved to positions in the canonical enumerations. Cached.
struct RouteTable {
    std::vector<int> r0;                                  // per index in U_{m+n-1}
    std::vector<std::vector<std::pair<int, long>>> ri;    // (index in U_n, coeff)
};
const RouteTable& routes(ShapeFamily f, int m, int n, int i);

}  // namespace loday
