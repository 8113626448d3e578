#include "loday/shapes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace loday {

std::string family_name(ShapeFamily f) {
    switch (f) {
        case ShapeFamily::associative: return "associative";
        case ShapeFamily::dialgebra: return "dialgebra";
        case ShapeFamily::trialgebra: return "trialgebra";
        case ShapeFamily::dendriform: return "dendriform";
        case ShapeFamily::tridendriform: return "tridendriform";
        case ShapeFamily::quadri: return "quadri";
        case ShapeFamily::ennea: return "ennea";
    }
    throw std::logic_error("family_name: bad enum");
}

std::optional<ShapeFamily> family_from_name(const std::string& name) {
    for (ShapeFamily f :
         {ShapeFamily::associative, ShapeFamily::dialgebra, ShapeFamily::trialgebra,
          ShapeFamily::dendriform, ShapeFamily::tridendriform, ShapeFamily::quadri,
          ShapeFamily::ennea}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

int Tree::leaves() const {
    if (is_leaf()) return 1;
    int total = 0;
    for (const Tree& c : children) total += c.leaves();
    return total;
}

bool Tree::binary() const {
    if (is_leaf()) return true;
    if (children.size() != 2) return false;
    return children[0].binary() && children[1].binary();
}

bool Tree::planar_wellformed() const {
    if (is_leaf()) return true;
    if (children.size() < 2) return false;
    for (const Tree& c : children)
        if (!c.planar_wellformed()) return false;
    return true;
}

Shape Shape::unit() { return Shape(ShapeFamily::associative, std::monostate{}); }

Shape Shape::label(int k) {
    if (k < 1) throw std::invalid_argument("Shape::label: k must be >= 1");
    return Shape(ShapeFamily::dendriform, k);
}

Shape Shape::subset(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (s.empty() || s.front() < 1 || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("Shape::subset: need a non-empty set of labels >= 1");
    return Shape(ShapeFamily::tridendriform, std::move(s));
}

Shape Shape::label_pair(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("Shape::label_pair: labels must be >= 1");
    return Shape(ShapeFamily::quadri, std::make_pair(r, s));
}

Shape Shape::subset_pair(std::vector<int> r, std::vector<int> s) {
    Shape a = subset(std::move(r)), b = subset(std::move(s));
    return Shape(ShapeFamily::ennea, SubsetPair{a.as_subset(), b.as_subset()});
}

Shape Shape::tree(Tree t, ShapeFamily f) {
    // A bare leaf (Y_0 / T_0) is representable: face() of a 2-leaf tree
    // produces it. It is not a member of any U_n, n >= 1.
    if (f == ShapeFamily::dialgebra) {
        if (!t.binary()) throw std::invalid_argument("Shape::tree: dialgebra shapes are binary trees");
    } else if (f == ShapeFamily::trialgebra) {
        if (!t.planar_wellformed())
            throw std::invalid_argument("Shape::tree: trialgebra shapes are planar trees");
    } else {
        throw std::invalid_argument("Shape::tree: family does not use trees");
    }
    return Shape(f, std::move(t));
}

namespace {

std::string tree_str(const Tree& t) {
    if (t.is_leaf()) return "L";
    std::string out = "(";
    for (size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ",";
        out += tree_str(t.children[i]);
    }
    out += ")";
    return out;
}

std::string subset_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

struct Parser {
    const std::string& text;
    size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    char take() {
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        return text[pos++];
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    int number() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        return std::stoi(text.substr(start, pos - start));
    }
    std::vector<int> subset() {
        expect('{');
        std::vector<int> s;
        s.push_back(number());
        while (peek() == ',') {
            ++pos;
            s.push_back(number());
        }
        expect('}');
        return s;
    }
    Tree tree() {
        if (peek() == 'L') {
            ++pos;
            return Tree{};
        }
        expect('(');
        Tree t;
        t.children.push_back(tree());
        while (peek() == ',') {
            ++pos;
            t.children.push_back(tree());
        }
        expect(')');
        if (t.children.size() < 2) throw ParseError("tree vertex needs >= 2 children", pos);
        return t;
    }
    void done() const {
        if (pos != text.size()) throw ParseError("trailing input", pos);
    }
};

}  // namespace

std::string Shape::str() const {
    switch (family_) {
        case ShapeFamily::associative: return "*";
        case ShapeFamily::dendriform: return std::to_string(as_label());
        case ShapeFamily::tridendriform: return subset_str(as_subset());
        case ShapeFamily::quadri: {
            auto [r, s] = as_label_pair();
            return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
        }
        case ShapeFamily::ennea: {
            const auto& [r, s] = as_subset_pair();
            return "(" + subset_str(r) + "," + subset_str(s) + ")";
        }
        case ShapeFamily::dialgebra:
        case ShapeFamily::trialgebra: return tree_str(as_tree());
    }
    throw std::logic_error("Shape::str: bad enum");
}

Shape Shape::parse(ShapeFamily f, const std::string& text) {
    Parser p{text};
    switch (f) {
        case ShapeFamily::associative: {
            p.expect('*');
            p.done();
            return unit();
        }
        case ShapeFamily::dendriform: {
            int k = p.number();
            p.done();
            return label(k);
        }
        case ShapeFamily::tridendriform: {
            auto s = p.subset();
            p.done();
            return subset(std::move(s));
        }
        case ShapeFamily::quadri: {
            p.expect('(');
            int r = p.number();
            p.expect(',');
            int s = p.number();
            p.expect(')');
            p.done();
            return label_pair(r, s);
        }
        case ShapeFamily::ennea: {
            p.expect('(');
            auto r = p.subset();
            p.expect(',');
            auto s = p.subset();
            p.expect(')');
            p.done();
            return subset_pair(std::move(r), std::move(s));
        }
        case ShapeFamily::dialgebra:
        case ShapeFamily::trialgebra: {
            Tree t = p.tree();
            p.done();
            return tree(std::move(t), f);
        }
    }
    throw std::logic_error("Shape::parse: bad enum");
}

namespace {

long catalan(int n) {
    std::vector<long> c(n + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j < k; ++j) c[k] += c[j] * c[k - 1 - j];
    return c[n];
}

// Planar trees with ell leaves, every internal vertex of arity >= 2
// (super-Catalan numbers 1, 1, 3, 11, 45, 197, ...). With A(l) the number of
// nonempty tree sequences carrying l leaves total, a tree on l >= 2 leaves is
// a root over a length >= 2 sequence, so T(l) = sum_{l1 < l} T(l1) A(l-l1)
// and A(l) = T(l) + that same sum = 2 T(l).
long planar_tree_count(int ell) {
    std::vector<long> T(ell + 1, 0), A(ell + 1, 0);
    T[1] = A[1] = 1;
    for (int l = 2; l <= ell; ++l) {
        long s = 0;
        for (int l1 = 1; l1 < l; ++l1) s += T[l1] * A[l - l1];
        T[l] = s;
        A[l] = 2 * s;
    }
    return T[ell];
}

std::vector<Tree> binary_trees(int leaves) {
    if (leaves == 1) return {Tree{}};
    std::vector<Tree> out;
    for (int l = 1; l < leaves; ++l) {
        for (const Tree& a : binary_trees(l))
            for (const Tree& b : binary_trees(leaves - l)) out.push_back(Tree{{a, b}});
    }
    return out;
}

void planar_forests(int leaves, int min_len, std::vector<Tree>& prefix,
                    const std::vector<std::vector<Tree>>& trees_by_leaves,
                    std::vector<std::vector<Tree>>& out) {
    if (leaves == 0) {
        if (static_cast<int>(prefix.size()) >= min_len) out.push_back(prefix);
        return;
    }
    for (int l = 1; l <= leaves; ++l) {
        for (const Tree& t : trees_by_leaves[l]) {
            prefix.push_back(t);
            planar_forests(leaves - l, min_len, prefix, trees_by_leaves, out);
            prefix.pop_back();
        }
    }
}

std::vector<Tree> planar_trees(int leaves) {
    std::vector<std::vector<Tree>> by_leaves(leaves + 1);
    by_leaves[1] = {Tree{}};
    for (int l = 2; l <= leaves; ++l) {
        std::vector<std::vector<Tree>> forests;
        std::vector<Tree> prefix;
        planar_forests(l, 2, prefix, by_leaves, forests);
        for (auto& f : forests) by_leaves[l].push_back(Tree{std::move(f)});
    }
    return by_leaves[leaves];
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) s.push_back(b + 1);
        out.push_back(std::move(s));
    }
    return out;
}

struct ShapeCache {
    std::vector<Shape> shapes;
    std::map<std::string, int> index;
};

const ShapeCache& shape_cache(ShapeFamily f, int n) {
    static std::map<std::pair<ShapeFamily, int>, ShapeCache> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(f, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    std::vector<Shape> shapes;
    switch (f) {
        case ShapeFamily::associative: shapes.push_back(Shape::unit()); break;
        case ShapeFamily::dendriform:
            for (int k = 1; k <= n; ++k) shapes.push_back(Shape::label(k));
            break;
        case ShapeFamily::tridendriform:
            for (const auto& s : nonempty_subsets(n)) shapes.push_back(Shape::subset(s));
            break;
        case ShapeFamily::quadri:
            for (int r = 1; r <= n; ++r)
                for (int s = 1; s <= n; ++s) shapes.push_back(Shape::label_pair(r, s));
            break;
        case ShapeFamily::ennea: {
            const auto subsets = nonempty_subsets(n);
            for (const auto& a : subsets)
                for (const auto& b : subsets) shapes.push_back(Shape::subset_pair(a, b));
            break;
        }
        case ShapeFamily::dialgebra:
            for (Tree& t : binary_trees(n + 1)) shapes.push_back(Shape::tree(std::move(t), f));
            break;
        case ShapeFamily::trialgebra:
            for (Tree& t : planar_trees(n + 1)) shapes.push_back(Shape::tree(std::move(t), f));
            break;
    }
    std::sort(shapes.begin(), shapes.end(),
              [](const Shape& a, const Shape& b) { return a.str() < b.str(); });
    ShapeCache sc;
    sc.shapes = std::move(shapes);
    for (size_t i = 0; i < sc.shapes.size(); ++i) sc.index[sc.shapes[i].str()] = static_cast<int>(i);
    return cache.emplace(key, std::move(sc)).first->second;
}

}  // namespace

long family_count(ShapeFamily f, int n) {
    if (n < 1) throw std::invalid_argument("family_count: n must be >= 1");
    switch (f) {
        case ShapeFamily::associative: return 1;
        case ShapeFamily::dendriform: return n;
        case ShapeFamily::tridendriform: return (1L << n) - 1;
        case ShapeFamily::quadri: return static_cast<long>(n) * n;
        case ShapeFamily::ennea: {
            long p = (1L << n) - 1;
            return p * p;
        }
        case ShapeFamily::dialgebra: return catalan(n);
        case ShapeFamily::trialgebra: return planar_tree_count(n + 1);
    }
    throw std::logic_error("family_count: bad enum");
}

const std::vector<Shape>& enumerate(ShapeFamily f, int n) { return shape_cache(f, n).shapes; }

int shape_index(ShapeFamily f, int n, const Shape& s) {
    const auto& cache = shape_cache(f, n);
    auto it = cache.index.find(s.str());
    if (it == cache.index.end())
        throw std::invalid_argument("shape_index: '" + s.str() + "' is not in U_" +
                                    std::to_string(n) + " of " + family_name(f));
    return it->second;
}

namespace {

// Delete the i-th leaf; contract the parent when it becomes unary.
Tree delete_leaf(const Tree& t, int i) {
    if (t.is_leaf()) throw std::invalid_argument("delete_leaf: tree has a single leaf");
    std::vector<Tree> kids;
    int offset = i;
    bool deleted = false;
    for (const Tree& c : t.children) {
        int lc = c.leaves();
        if (!deleted && offset < lc) {
            deleted = true;
            if (!c.is_leaf()) kids.push_back(delete_leaf(c, offset));
            // a deleted leaf child simply disappears
        } else {
            kids.push_back(c);
            if (!deleted) offset -= lc;
        }
    }
    if (kids.size() == 1) return kids[0];
    return Tree{std::move(kids)};
}

int box_of(int x, int n, int i) {
    if (x <= i - 1) return x;
    if (x <= i + n - 1) return i;
    return x - n + 1;
}

int dendriform_r0(int m, int n, int i, int r) { return box_of(r, n, i); }

// label -> single label (in box) or the full sum 1..n (outside)
std::optional<int> dendriform_ri(int n, int i, int r) {
    if (i <= r && r <= i + n - 1) return r - i + 1;
    return std::nullopt;
}

std::vector<int> tridendriform_r0(int n, int i, const std::vector<int>& x) {
    std::vector<int> out;
    for (int v : x) out.push_back(box_of(v, n, i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// subset -> single shifted subset (meets the i-th box) or all of P_n
std::optional<std::vector<int>> tridendriform_ri(int n, int i, const std::vector<int>& x) {
    std::vector<int> inter;
    for (int v : x)
        if (i <= v && v <= i + n - 1) inter.push_back(v - (i - 1));
    if (inter.empty()) return std::nullopt;
    return inter;
}

void require_member(ShapeFamily f, int n, const Shape& r, const char* who) {
    try {
        shape_index(f, n, r);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(std::string(who) + ": malformed shape '" + r.str() +
                                    "' for U_" + std::to_string(n));
    }
}

}  // namespace

Shape face(const Shape& tree_shape, int i) {
    ShapeFamily f = tree_shape.family();
    if (f != ShapeFamily::dialgebra && f != ShapeFamily::trialgebra)
        throw std::invalid_argument("face: only tree shapes have faces");
    const Tree& t = tree_shape.as_tree();
    int n = t.leaves() - 1;
    if (n < 1) throw std::invalid_argument("face: tree must have >= 2 leaves");
    if (i < 0 || i > n) throw std::out_of_range("face: leaf index out of range");
    return Shape::tree(delete_leaf(t, i), f);
}

Shape r0(ShapeFamily f, int m, int n, int i, const Shape& r) {
    if (m < 1 || n < 1 || i < 1 || i > m) throw std::invalid_argument("r0: bad (m, n, i)");
    require_member(f, m + n - 1, r, "r0");
    switch (f) {
        case ShapeFamily::associative: return Shape::unit();
        case ShapeFamily::dendriform: return Shape::label(dendriform_r0(m, n, i, r.as_label()));
        case ShapeFamily::tridendriform:
            return Shape::subset(tridendriform_r0(n, i, r.as_subset()));
        case ShapeFamily::quadri: {
            auto [a, b] = r.as_label_pair();
            return Shape::label_pair(dendriform_r0(m, n, i, a), dendriform_r0(m, n, i, b));
        }
        case ShapeFamily::ennea: {
            const auto& [a, b] = r.as_subset_pair();
            return Shape::subset_pair(tridendriform_r0(n, i, a), tridendriform_r0(n, i, b));
        }
        case ShapeFamily::dialgebra:
        case ShapeFamily::trialgebra: {
            // composite d_i o ... o d_{i+n-2}, rightmost map applied first
            Tree t = r.as_tree();
            for (int k = i + n - 2; k >= i; --k) t = delete_leaf(t, k);
            return Shape::tree(std::move(t), f);
        }
    }
    throw std::logic_error("r0: bad enum");
}

FormalShapeSum ri(ShapeFamily f, int m, int n, int i, const Shape& r) {
    if (m < 1 || n < 1 || i < 1 || i > m) throw std::invalid_argument("ri: bad (m, n, i)");
    require_member(f, m + n - 1, r, "ri");
    FormalShapeSum out;
    switch (f) {
        case ShapeFamily::associative: out.push_back({Shape::unit(), 1}); break;
        case ShapeFamily::dendriform: {
            if (auto k = dendriform_ri(n, i, r.as_label())) {
                out.push_back({Shape::label(*k), 1});
            } else {
                for (int k = 1; k <= n; ++k) out.push_back({Shape::label(k), 1});
            }
            break;
        }
        case ShapeFamily::tridendriform: {
            if (auto s = tridendriform_ri(n, i, r.as_subset())) {
                out.push_back({Shape::subset(std::move(*s)), 1});
            } else {
                for (const Shape& s : enumerate(ShapeFamily::tridendriform, n))
                    out.push_back({s, 1});
            }
            break;
        }
        case ShapeFamily::quadri: {
            auto [a, b] = r.as_label_pair();
            auto one = dendriform_ri(n, i, a), two = dendriform_ri(n, i, b);
            std::vector<int> lefts, rights;
            if (one)
                lefts.push_back(*one);
            else
                for (int k = 1; k <= n; ++k) lefts.push_back(k);
            if (two)
                rights.push_back(*two);
            else
                for (int k = 1; k <= n; ++k) rights.push_back(k);
            for (int u : lefts)
                for (int v : rights) out.push_back({Shape::label_pair(u, v), 1});
            break;
        }
        case ShapeFamily::ennea: {
            const auto& [a, b] = r.as_subset_pair();
            auto one = tridendriform_ri(n, i, a), two = tridendriform_ri(n, i, b);
            std::vector<std::vector<int>> lefts, rights;
            if (one)
                lefts.push_back(std::move(*one));
            else
                for (const Shape& s : enumerate(ShapeFamily::tridendriform, n))
                    lefts.push_back(s.as_subset());
            if (two)
                rights.push_back(std::move(*two));
            else
                for (const Shape& s : enumerate(ShapeFamily::tridendriform, n))
                    rights.push_back(s.as_subset());
            for (const auto& u : lefts)
                for (const auto& v : rights) out.push_back({Shape::subset_pair(u, v), 1});
            break;
        }
        case ShapeFamily::dialgebra:
        case ShapeFamily::trialgebra: {
            // composite of all face maps except d_{i-1}..d_{i+n-1}, rightmost first
            Tree t = r.as_tree();
            for (int k = m + n - 1; k >= i + n; --k) t = delete_leaf(t, k);
            for (int k = i - 2; k >= 0; --k) t = delete_leaf(t, k);
            out.push_back({Shape::tree(std::move(t), f), 1});
            break;
        }
    }
    return out;
}

const RouteTable& routes(ShapeFamily f, int m, int n, int i) {
    static std::map<std::tuple<ShapeFamily, int, int, int>, RouteTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(f, m, n, i);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const auto& sources = enumerate(f, m + n - 1);
    RouteTable table;
    table.r0.reserve(sources.size());
    table.ri.reserve(sources.size());
    for (const Shape& r : sources) {
        table.r0.push_back(shape_index(f, m, r0(f, m, n, i, r)));
        std::vector<std::pair<int, long>> terms;
        for (const ShapeTerm& t : ri(f, m, n, i, r))
            terms.emplace_back(shape_index(f, n, t.shape), t.coeff);
        table.ri.push_back(std::move(terms));
    }
    return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace loday
