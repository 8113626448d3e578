#include "loday/operad.hpp"

#include <sstream>

namespace loday {

OperadOps::OperadOps(ShapeFamily fam, int dim) : family_(fam), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("OperadOps: dim must be >= 1");
}

OperadOps::OperadOps(ShapeFamily fam, int dim, Element alpha, Element beta)
    : family_(fam), dim_(dim) {
    if (dim < 1) throw std::invalid_argument("OperadOps: dim must be >= 1");
    if (alpha.arity() != 1 || beta.arity() != 1 || alpha.family() != fam ||
        beta.family() != fam || alpha.in_dim() != dim || beta.in_dim() != dim ||
        alpha.out_dim() != dim || beta.out_dim() != dim)
        throw std::invalid_argument("OperadOps: twist maps must be arity-1 in the same context");
    twist_ = std::make_pair(std::move(alpha), std::move(beta));
}

void OperadOps::check_operadic(const Element& e, const char* who) const {
    if (e.family() != family_ || e.in_dim() != dim_ || e.out_dim() != dim_)
        throw std::invalid_argument(std::string(who) + ": context mismatch");
}

Element OperadOps::raw_compose(const Element& f, const Element& g, int i) const {
    check_operadic(f, "partial_compose");
    check_operadic(g, "partial_compose");
    const int m = f.arity(), n = g.arity();
    if (i < 1 || i > m) throw std::out_of_range("partial_compose: slot index out of range");

    const int d = dim_;
    Element out(family_, m + n - 1, d, d);
    const RouteTable& rt = routes(family_, m, n, i);
    const long pre_count = ipow(d, i - 1);
    const long mid_count = ipow(d, n);
    const long suf_count = ipow(d, m - i);

    for (int s = 0; s < out.shape_count(); ++s) {
        const int s0 = rt.r0[s];
        for (const auto& [sg, coeff] : rt.ri[s]) {
            const Rational c(coeff);
            for (long pre = 0; pre < pre_count; ++pre) {
                for (long suf = 0; suf < suf_count; ++suf) {
                    for (int z = 0; z < d; ++z) {
                        const long ftup = (pre * d + z) * suf_count + suf;
                        for (int y = 0; y < d; ++y) {
                            const Rational& fv = f.at(s0, ftup, y);
                            if (fv.is_zero()) continue;
                            const Rational cf = c * fv;
                            for (long mid = 0; mid < mid_count; ++mid) {
                                const Rational& gv = g.at(sg, mid, z);
                                if (gv.is_zero()) continue;
                                const long otup = (pre * mid_count + mid) * suf_count + suf;
                                out.at(s, otup, y) += cf * gv;
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

Element OperadOps::raw_gamma(const Element& f, const std::vector<Element>& gs) const {
    if (static_cast<int>(gs.size()) != f.arity())
        throw std::invalid_argument("gamma: need exactly arity(f) arguments");
    Element state = f;
    for (int j = static_cast<int>(gs.size()); j >= 1; --j)
        state = raw_compose(state, gs[j - 1], j);
    return state;
}

Element OperadOps::power(const Element& a, int k) const {
    if (a.arity() != 1) throw std::invalid_argument("power: arity-1 elements only");
    Element acc = Element::identity(family_, dim_);
    for (int j = 0; j < k; ++j) acc = raw_compose(acc, a, 1);
    return acc;
}

Element OperadOps::partial_compose(const Element& f, const Element& g, int i) const {
    if (!twist_) return raw_compose(f, g, i);
    const int m = f.arity(), n = g.arity();
    if (i < 1 || i > m) throw std::out_of_range("partial_compose: slot index out of range");
    const Element ap = power(twist_->first, n - 1);
    const Element bp = power(twist_->second, n - 1);
    std::vector<Element> args;
    args.reserve(m);
    for (int j = 1; j <= m; ++j) {
        if (j < i)
            args.push_back(ap);
        else if (j == i)
            args.push_back(g);
        else
            args.push_back(bp);
    }
    return raw_gamma(f, args);
}

Element OperadOps::gamma(const Element& f, const std::vector<Element>& gs) const {
    if (!twist_) return raw_gamma(f, gs);
    if (static_cast<int>(gs.size()) != f.arity())
        throw std::invalid_argument("gamma: need exactly arity(f) arguments");
    Element state = f;
    for (int j = static_cast<int>(gs.size()); j >= 1; --j)
        state = partial_compose(state, gs[j - 1], j);
    return state;
}

Element OperadOps::brace(const Element& f, const std::vector<Element>& gs, bool* overflow) const {
    if (overflow) *overflow = false;
    const int m = f.arity();
    const int p = static_cast<int>(gs.size());
    if (p == 0) return f;

    int result_arity = m - p;
    for (const Element& g : gs) result_arity += g.arity();
    if (p > m) {
        if (overflow) *overflow = true;
        return zero(std::max(result_arity, 1));
    }

    Element acc = zero(result_arity);
    std::vector<int> pos(p);
    for (int l = 0; l < p; ++l) pos[l] = l + 1;  // first increasing tuple

    while (true) {
        // epsilon = sum_l |g_l| * i_l, i_l = inputs in front of g_l
        long eps = 0, degs_before = 0;
        for (int l = 0; l < p; ++l) {
            eps += static_cast<long>(gs[l].degree()) * (pos[l] - 1 + degs_before);
            degs_before += gs[l].degree();
        }
        Element term = f;
        for (int l = p - 1; l >= 0; --l) term = partial_compose(term, gs[l], pos[l]);
        if (eps % 2 == 0)
            acc += term;
        else
            acc -= term;

        // next increasing tuple 1 <= pos[0] < ... < pos[p-1] <= m
        int l = p - 1;
        while (l >= 0 && pos[l] == m - (p - 1 - l)) --l;
        if (l < 0) break;
        ++pos[l];
        for (int j = l + 1; j < p; ++j) pos[j] = pos[j - 1] + 1;
    }
    return acc;
}

Element OperadOps::circle(const Element& f, const Element& g) const {
    const int m = f.arity();
    Element acc = zero(m + g.arity() - 1);
    for (int i = 1; i <= m; ++i) {
        Element term = partial_compose(f, g, i);
        if (((i - 1) * g.degree()) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Element OperadOps::lie_bracket(const Element& f, const Element& g) const {
    Element out = circle(f, g);
    Element rev = circle(g, f);
    if ((f.degree() * g.degree()) % 2 == 0)
        out -= rev;
    else
        out += rev;
    return out;
}

Element OperadOps::cup(const Element& pi, const Element& f, const Element& g) const {
    if (pi.arity() != 2) throw std::invalid_argument("cup: pi must have arity 2");
    Element out = brace(pi, {f, g});
    if ((f.degree() + 1) % 2 != 0) out.scale(Rational(-1));
    return out;
}

Element OperadOps::differential(const Element& pi, const Element& f,
                                bool* pi_is_multiplication) const {
    if (pi.arity() != 2) throw std::invalid_argument("differential: pi must have arity 2");
    if (pi_is_multiplication) *pi_is_multiplication = !multiplication_defect(pi).has_value();
    Element out = circle(pi, f);
    Element rev = circle(f, pi);
    if (f.degree() % 2 == 0)
        out -= rev;
    else
        out += rev;
    return out;
}

std::optional<Element::Entry> OperadOps::multiplication_defect(const Element& pi) const {
    if (pi.arity() != 2) throw std::invalid_argument("multiplication_defect: arity 2 required");
    return circle(pi, pi).first_nonzero();
}

QMatrix OperadOps::differential_matrix(const Element& pi, int arity) const {
    Element probe = zero(arity);
    Element image = zero(arity + 1);
    QMatrix m(static_cast<int>(image.dimension()), static_cast<int>(probe.dimension()));
    QVector unit(probe.dimension(), Rational(0));
    for (long col = 0; col < probe.dimension(); ++col) {
        unit[col] = Rational(1);
        Element e = Element::from_vector(family_, arity, dim_, dim_, unit);
        QVector out = differential(pi, e).to_vector();
        for (long row = 0; row < static_cast<long>(out.size()); ++row)
            if (!out[row].is_zero()) m.set(static_cast<int>(row), static_cast<int>(col), out[row]);
        unit[col] = Rational(0);
    }
    return m;
}

Element random_element(ShapeFamily fam, int arity, int in_dim, int out_dim,
                       std::mt19937_64& rng) {
    Element e(fam, arity, in_dim, out_dim);
    std::uniform_int_distribution<int> zero_die(0, 2), num(-3, 3), den(1, 2);
    QVector v(e.dimension(), Rational(0));
    for (Rational& x : v) {
        if (zero_die(rng) == 0) continue;
        x = Rational(num(rng), den(rng));
    }
    return Element::from_vector(fam, arity, in_dim, out_dim, v);
}

AxiomReport check_operad_axioms(const OperadOps& ops, int max_arity, int samples, unsigned seed,
                                const std::function<Element(int, std::mt19937_64&)>& sampler) {
    std::mt19937_64 rng(seed);
    auto sample = sampler ? sampler : [&](int arity, std::mt19937_64& r) {
        return random_element(ops.family(), arity, ops.dim(), ops.dim(), r);
    };
    std::uniform_int_distribution<int> arity_die(1, max_arity);
    AxiomReport report;
    auto complain = [&](const std::string& what) {
        report.ok = false;
        if (report.violations.size() < 16) report.violations.push_back(what);
    };

    for (int run = 0; run < samples; ++run) {
        const int m = arity_die(rng), n = arity_die(rng), p = arity_die(rng);
        Element f = sample(m, rng), g = sample(n, rng), h = sample(p, rng);

        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j) {
                Element lhs = ops.partial_compose(ops.partial_compose(f, g, i), h, i + j - 1);
                Element rhs = ops.partial_compose(f, ops.partial_compose(g, h, j), i);
                ++report.checks;
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "sequential axiom failed: m=" << m << " n=" << n << " p=" << p
                       << " i=" << i << " j=" << j;
                    complain(os.str());
                }
            }
        }
        for (int i = 1; i <= m; ++i) {
            for (int j = i + 1; j <= m; ++j) {
                Element lhs = ops.partial_compose(ops.partial_compose(f, g, i), h, j + n - 1);
                Element rhs = ops.partial_compose(ops.partial_compose(f, h, j), g, i);
                ++report.checks;
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "parallel axiom failed: m=" << m << " n=" << n << " p=" << p
                       << " i=" << i << " j=" << j;
                    complain(os.str());
                }
            }
        }
        Element id = ops.identity();
        for (int i = 1; i <= m; ++i) {
            ++report.checks;
            if (!(ops.partial_compose(f, id, i) == f)) complain("unit law f o_i id failed");
        }
        ++report.checks;
        if (!(ops.partial_compose(id, f, 1) == f)) complain("unit law id o_1 f failed");
    }
    return report;
}

}  // namespace loday
