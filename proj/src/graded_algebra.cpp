#include "gtwist/graded_algebra.hpp"

#include "gtwist/error.hpp"

#include <algorithm>
#include <functional>

namespace gtwist {

namespace {

std::string fmt_pair(const GradingGroup& g, GroupElement a, GroupElement b) {
    return "(" + g.format_element(a) + "," + g.format_element(b) + ")";
}

std::string pow_label(const std::string& var, std::int64_t k) {
    if (k == 0) return "";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

std::string monomial_label(const std::vector<std::string>& gens,
                           const std::vector<std::int64_t>& exps) {
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string part = pow_label(gens[i], exps[i]);
        if (part.empty()) continue;
        if (!out.empty()) out += "*";
        out += part;
    }
    return out.empty() ? "1" : out;
}

}  // namespace

std::string format_element_ref(const GradingGroup& g, GroupElement deg, const std::string& label) {
    return "(" + g.format_element(deg) + "," + label + ")";
}

std::size_t GradedAlgebra::dim(GroupElement g) const {
    auto it = basis.find(g);
    if (it == basis.end())
        throw OutOfWindowError("degree " + group.format_element(g) + " not in the algebra window");
    return it->second.size();
}

bool GradedAlgebra::has_degree(GroupElement g) const { return basis.count(g) != 0; }

const Tensor3& GradedAlgebra::tensor(GroupElement g, GroupElement h) const {
    auto it = structure.find({g, h});
    if (it == structure.end())
        throw OutOfWindowError("no structure tensor for " + fmt_pair(group, g, h));
    return it->second;
}

bool algebra_equal(const GradedAlgebra& a, const GradedAlgebra& b) {
    return a.field == b.field && a.group == b.group && a.window == b.window &&
           a.basis == b.basis && a.structure == b.structure && a.unit == b.unit;
}

bool structure_equal(const GradedAlgebra& a, const GradedAlgebra& b) {
    return algebra_equal(a, b);
}

ValidationReport validate_algebra(const GradedAlgebra& a) {
    ValidationReport report;
    const auto& G = a.group;
    auto degrees = window_elements(G, a.window);

    // unit shape
    GroupElement e = G.identity();
    if (!a.has_degree(e)) {
        report.violations.push_back("unit: identity degree not in window");
        return report;
    }
    if (a.unit.size() != a.dim(e))
        report.violations.push_back("unit: coordinate length " + std::to_string(a.unit.size()) +
                                    " does not match dim " + std::to_string(a.dim(e)));
    else if (vec_is_zero(a.unit) && a.dim(e) > 0)
        report.violations.push_back("unit: coordinates are zero");
    if (a.dim(e) == 0) report.violations.push_back("unit: dim at identity degree is 0");
    if (!report.violations.empty()) return report;

    // tensor presence and shape
    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = G.op(g, h);
            if (!window_contains(G, a.window, gh)) continue;
            auto it = a.structure.find({g, h});
            if (it == a.structure.end()) {
                report.violations.push_back("missing structure tensor at " + fmt_pair(G, g, h));
                continue;
            }
            const Tensor3& t = it->second;
            if (t.dim0() != a.dim(g) || t.dim1() != a.dim(h) || t.dim2() != a.dim(gh))
                report.violations.push_back("tensor shape at " + fmt_pair(G, g, h));
        }
    for (const auto& [key, t] : a.structure) {
        (void)t;
        if (!window_contains(G, a.window, key.first) ||
            !window_contains(G, a.window, key.second) ||
            !window_contains(G, a.window, G.op(key.first, key.second)))
            report.violations.push_back("stray structure tensor at " +
                                        fmt_pair(G, key.first, key.second));
    }
    if (!report.violations.empty()) return report;

    // unit laws
    for (auto g : degrees) {
        for (std::size_t i = 0; i < a.dim(g); ++i) {
            std::vector<Scalar> x(a.dim(g), Scalar(0));
            x[i] = Scalar(1);
            auto left = tensor_apply(a.field, a.tensor(e, g), a.unit, x);
            auto right = tensor_apply(a.field, a.tensor(g, e), x, a.unit);
            std::string ref = format_element_ref(G, g, a.basis.at(g)[i]);
            if (left != x) report.violations.push_back("left unit: " + ref);
            if (right != x) report.violations.push_back("right unit: " + ref);
        }
    }

    // associativity on fully in-window triples
    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = G.op(g, h);
            for (auto l : degrees) {
                GroupElement hl = G.op(h, l);
                GroupElement ghl = G.op(gh, l);
                if (!window_contains(G, a.window, gh) || !window_contains(G, a.window, hl) ||
                    !window_contains(G, a.window, ghl)) {
                    ++report.skipped;
                    continue;
                }
                for (std::size_t i = 0; i < a.dim(g); ++i)
                    for (std::size_t j = 0; j < a.dim(h); ++j) {
                        std::vector<Scalar> x(a.dim(g), Scalar(0)), y(a.dim(h), Scalar(0));
                        x[i] = Scalar(1);
                        y[j] = Scalar(1);
                        auto xy = tensor_apply(a.field, a.tensor(g, h), x, y);
                        for (std::size_t m = 0; m < a.dim(l); ++m) {
                            std::vector<Scalar> z(a.dim(l), Scalar(0));
                            z[m] = Scalar(1);
                            auto lhs = tensor_apply(a.field, a.tensor(gh, l), xy, z);
                            auto yz = tensor_apply(a.field, a.tensor(h, l), y, z);
                            auto rhs = tensor_apply(a.field, a.tensor(g, hl), x, yz);
                            if (lhs != rhs)
                                report.violations.push_back(
                                    "associativity: (" +
                                    format_element_ref(G, g, a.basis.at(g)[i]) + "," +
                                    format_element_ref(G, h, a.basis.at(h)[j]) + "," +
                                    format_element_ref(G, l, a.basis.at(l)[m]) + ")");
                        }
                    }
            }
        }
    return report;
}

HomogeneousElement multiply(const GradedAlgebra& a, const HomogeneousElement& x,
                            const HomogeneousElement& y) {
    const auto& G = a.group;
    if (!window_contains(G, a.window, x.degree) || !window_contains(G, a.window, y.degree))
        throw OutOfWindowError("factor degree outside the algebra window");
    GroupElement d = G.op(x.degree, y.degree);
    if (!window_contains(G, a.window, d))
        throw OutOfWindowError("product degree " + G.format_element(d) + " leaves the window");
    if (x.coords.size() != a.dim(x.degree) || y.coords.size() != a.dim(y.degree))
        throw DimensionMismatchError("multiply: coordinate lengths");
    return {d, tensor_apply(a.field, a.tensor(x.degree, y.degree), x.coords, y.coords)};
}

const Mat& GradedLinearMap::block(GroupElement g) const {
    auto it = blocks.find(g);
    if (it == blocks.end())
        throw MissingComponentError("graded map has no block at degree " + std::to_string(g));
    return it->second;
}

GradedLinearMap identity_map(std::shared_ptr<const GradedAlgebra> a) {
    GradedLinearMap phi;
    phi.source = a;
    phi.target = a;
    phi.shift = a->group.identity();
    for (const auto& [g, labels] : a->basis)
        if (!labels.empty()) phi.blocks[g] = Mat::identity(labels.size());
    return phi;
}

GradedLinearMap generator_scaling_map(std::shared_ptr<const GradedAlgebra> a,
                                      const std::vector<Scalar>& factors) {
    if (!a->monomials)
        throw InvalidArgumentError("algebra carries no monomial presentation");
    const MonomialInfo& info = *a->monomials;
    if (factors.size() != info.generators.size())
        throw DimensionMismatchError("one scaling factor per generator required");
    GradedLinearMap phi;
    phi.source = a;
    phi.target = a;
    phi.shift = a->group.identity();
    for (const auto& [g, entries] : info.basis) {
        if (entries.empty()) continue;
        Mat m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            Scalar c = a->field.one();
            for (std::size_t k = 0; k < factors.size(); ++k)
                if (entries[i].exponents[k] != 0)
                    c = a->field.mul(c, a->field.pow(factors[k], entries[i].exponents[k]));
            m.at(i, i) = c;
        }
        phi.blocks[g] = std::move(m);
    }
    return phi;
}

HomogeneousElement apply_graded_map(const GradedLinearMap& phi, const HomogeneousElement& x) {
    const auto& S = *phi.source;
    const auto& T = *phi.target;
    const auto& G = S.group;
    if (!window_contains(G, S.window, x.degree))
        throw OutOfWindowError("argument degree outside source window");
    GroupElement d = G.op(phi.shift, x.degree);
    if (!window_contains(G, T.window, d))
        throw OutOfWindowError("image degree " + G.format_element(d) + " outside target window");
    if (x.coords.size() != S.dim(x.degree))
        throw DimensionMismatchError("apply_graded_map: coordinate length");
    if (S.dim(x.degree) == 0 || T.dim(d) == 0)
        return {d, std::vector<Scalar>(T.dim(d), Scalar(0))};
    const Mat& b = phi.block(x.degree);
    if (b.rows() != T.dim(d) || b.cols() != S.dim(x.degree))
        throw DimensionMismatchError("apply_graded_map: block shape at degree " +
                                     G.format_element(x.degree));
    return {d, mat_vec(S.field, b, x.coords)};
}

GradedLinearMap compose_maps(const GradedLinearMap& phi2, const GradedLinearMap& phi1) {
    const auto& G = phi1.source->group;
    GradedLinearMap out;
    out.source = phi1.source;
    out.target = phi2.target;
    out.shift = G.op(phi2.shift, phi1.shift);
    for (const auto& [g, b1] : phi1.blocks) {
        GroupElement mid = G.op(phi1.shift, g);
        auto it = phi2.blocks.find(mid);
        if (it == phi2.blocks.end()) continue;
        out.blocks[g] = mat_mul(phi1.source->field, it->second, b1);
    }
    return out;
}

GradedLinearMap inverse_map(const GradedLinearMap& phi) {
    const auto& G = phi.source->group;
    GradedLinearMap out;
    out.source = phi.target;
    out.target = phi.source;
    out.shift = G.inv(phi.shift);
    for (const auto& [g, b] : phi.blocks) {
        auto inv = mat_inverse(phi.source->field, b);
        if (!inv)
            throw SingularBlockError("graded map block at degree " + G.format_element(g));
        out.blocks[G.op(phi.shift, g)] = std::move(*inv);
    }
    return out;
}

CheckResult check_graded_iso(const GradedAlgebra& a, const GradedAlgebra& b,
                             const GradedLinearMap& phi) {
    const auto& G = a.group;
    if (G != b.group) throw ShapeMismatchError("different grading groups");
    if (a.window != b.window) throw ShapeMismatchError("different degree windows");
    if (a.field != b.field) throw ShapeMismatchError("different base fields");
    if (phi.shift != G.identity())
        throw ShapeMismatchError("iso check requires a degree-preserving map");

    auto degrees = window_elements(G, a.window);

    // shape scan
    for (auto g : degrees) {
        if (a.dim(g) != b.dim(g))
            return CheckResult::fail("dims at " + G.format_element(g) + ": " +
                                     std::to_string(a.dim(g)) + " vs " +
                                     std::to_string(b.dim(g)));
        if (a.dim(g) == 0) continue;
        if (!phi.has_block(g))
            return CheckResult::fail("missing block at " + G.format_element(g));
        const Mat& m = phi.block(g);
        if (m.rows() != b.dim(g) || m.cols() != a.dim(g))
            return CheckResult::fail("block shape at " + G.format_element(g));
    }

    // applies phi blockwise against the algebras passed in, so hand-built
    // maps without source/target pointers are checkable
    auto apply = [&](const HomogeneousElement& x) -> HomogeneousElement {
        if (a.dim(x.degree) == 0)
            return {x.degree, std::vector<Scalar>(b.dim(x.degree), Scalar(0))};
        return {x.degree, mat_vec(a.field, phi.block(x.degree), x.coords)};
    };

    // multiplicativity on basis pairs
    std::size_t skipped = 0;
    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = G.op(g, h);
            if (!window_contains(G, a.window, gh)) {
                ++skipped;
                continue;
            }
            for (std::size_t i = 0; i < a.dim(g); ++i)
                for (std::size_t j = 0; j < a.dim(h); ++j) {
                    HomogeneousElement x{g, std::vector<Scalar>(a.dim(g), Scalar(0))};
                    HomogeneousElement y{h, std::vector<Scalar>(a.dim(h), Scalar(0))};
                    x.coords[i] = Scalar(1);
                    y.coords[j] = Scalar(1);
                    auto lhs = apply(multiply(a, x, y));
                    auto rhs = multiply(b, apply(x), apply(y));
                    if (lhs.coords != rhs.coords)
                        return CheckResult::fail(
                            "(" + format_element_ref(G, g, a.basis.at(g)[i]) + "," +
                                format_element_ref(G, h, a.basis.at(h)[j]) + ")",
                            skipped);
                }
        }

    // unit
    {
        HomogeneousElement one{G.identity(), a.unit};
        if (apply(one).coords != b.unit) return CheckResult::fail("unit", skipped);
    }

    // blockwise invertibility
    for (auto g : degrees) {
        if (a.dim(g) == 0) continue;
        if (!mat_inverse(a.field, phi.block(g)))
            return CheckResult::fail("singular block at " + G.format_element(g), skipped);
    }
    return CheckResult::pass(skipped);
}

CheckResult check_algebra_automorphism(const GradedAlgebra& a, const GradedLinearMap& phi) {
    return check_graded_iso(a, a, phi);
}

// ---- builders ----

namespace {

// Wires basis/monomial data into tensors by exponent-vector lookup.
struct MonomialRing {
    GradedAlgebra alg;
    // per-degree lookup (summand, exponents) -> basis index
    std::map<GroupElement, std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::size_t>>
        index;
};

void finish_monomial_ring(MonomialRing& ring, std::size_t summand_count) {
    (void)summand_count;
    GradedAlgebra& a = ring.alg;
    const auto& G = a.group;
    auto degrees = window_elements(G, a.window);
    const MonomialInfo& info = *a.monomials;
    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = G.op(g, h);
            if (!window_contains(G, a.window, gh)) continue;
            const auto& bg = info.basis.at(g);
            const auto& bh = info.basis.at(h);
            Tensor3 t(bg.size(), bh.size(), info.basis.at(gh).size());
            for (std::size_t i = 0; i < bg.size(); ++i)
                for (std::size_t j = 0; j < bh.size(); ++j) {
                    if (bg[i].summand != bh[j].summand) continue;  // cross terms vanish
                    std::vector<std::int64_t> sum(bg[i].exponents.size());
                    for (std::size_t k = 0; k < sum.size(); ++k)
                        sum[k] = bg[i].exponents[k] + bh[j].exponents[k];
                    auto it = ring.index.at(gh).find({bg[i].summand, sum});
                    if (it == ring.index.at(gh).end()) continue;
                    t.at(i, j, it->second) = Scalar(1);
                }
            a.structure[{g, h}] = std::move(t);
        }
}

void check_built(const GradedAlgebra& a, const char* builder) {
    ValidationReport r = validate_algebra(a);
    if (!r.ok())
        throw Error(std::string(builder) + " produced an invalid algebra: " + r.violations[0]);
}

}  // namespace

GradedAlgebra build_polynomial_ring(const Field& f,
                                    const std::vector<std::pair<std::string, std::int64_t>>& gens,
                                    const Window& w) {
    GradingGroup G = GradingGroup::integers();
    require_degree_window(G, w);
    if (gens.empty()) throw InvalidArgumentError("polynomial ring needs at least one generator");
    bool positive = gens[0].second > 0;
    for (const auto& [name, d] : gens) {
        (void)name;
        if (d == 0) throw InvalidArgumentError("generator degree 0 gives infinite dimensions");
        if ((d > 0) != positive)
            throw InvalidArgumentError("mixed generator degree signs give infinite dimensions");
    }

    MonomialRing ring;
    GradedAlgebra& a = ring.alg;
    a.field = f;
    a.group = G;
    a.window = w;
    MonomialInfo info;
    for (const auto& [name, d] : gens) {
        (void)d;
        info.generators.push_back(name);
    }

    // exponent vectors with sum(e_i * d_i) = n, descending lex
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
        std::vector<MonomialInfo::Entry> entries;
        std::vector<std::int64_t> exps(gens.size(), 0);
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t r) {
            if (k == gens.size()) {
                if (r == 0) entries.push_back({0, exps});
                return;
            }
            std::int64_t d = gens[k].second;
            std::int64_t top = (r != 0 && ((r > 0) == (d > 0))) ? r / d : 0;
            for (std::int64_t e = top; e >= 0; --e) {
                exps[k] = e;
                rec(k + 1, r - e * d);
            }
            exps[k] = 0;
        };
        rec(0, n);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            labels.push_back(monomial_label(info.generators, entries[i].exponents));
            ring.index[n][{0, entries[i].exponents}] = i;
        }
        ring.index.try_emplace(n);
        a.basis[n] = std::move(labels);
        info.basis[n] = std::move(entries);
    }
    a.monomials = std::move(info);
    a.unit = {Scalar(1)};
    finish_monomial_ring(ring, 1);
    check_built(a, "build_polynomial_ring");
    return a;
}

GradedAlgebra build_laurent_ring(const Field& f, const std::string& var,
                                 std::int64_t generator_degree, const Window& w) {
    GradingGroup G = GradingGroup::integers();
    require_degree_window(G, w);
    if (generator_degree == 0)
        throw InvalidArgumentError("Laurent generator degree must be nonzero");

    MonomialRing ring;
    GradedAlgebra& a = ring.alg;
    a.field = f;
    a.group = G;
    a.window = w;
    MonomialInfo info;
    info.generators.push_back(var);
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
        ring.index.try_emplace(n);
        if (n % generator_degree == 0) {
            std::int64_t k = n / generator_degree;
            a.basis[n] = {pow_label(var, n).empty() ? "1" : pow_label(var, n)};
            info.basis[n] = {{0, {k}}};
            ring.index[n][{0, {k}}] = 0;
        } else {
            a.basis[n] = {};
            info.basis[n] = {};
        }
    }
    a.monomials = std::move(info);
    a.unit = {Scalar(1)};
    finish_monomial_ring(ring, 1);
    check_built(a, "build_laurent_ring");
    return a;
}

GradedAlgebra build_direct_sum(const GradedAlgebra& x, const GradedAlgebra& y) {
    if (x.field != y.field) throw ShapeMismatchError("direct sum over different fields");
    if (x.group != y.group) throw ShapeMismatchError("direct sum over different groups");
    if (x.window != y.window) throw ShapeMismatchError("direct sum needs equal windows");

    auto decorate = [](const std::string& tag, const std::string& label) {
        return label == "1" ? tag : tag + "*" + label;
    };

    GradedAlgebra a;
    a.field = x.field;
    a.group = x.group;
    a.window = x.window;
    auto degrees = window_elements(a.group, a.window);
    for (auto g : degrees) {
        std::vector<std::string> labels;
        for (const auto& l : x.basis.at(g)) labels.push_back(decorate("e1", l));
        for (const auto& l : y.basis.at(g)) labels.push_back(decorate("e2", l));
        a.basis[g] = std::move(labels);
    }
    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = a.group.op(g, h);
            if (!window_contains(a.group, a.window, gh)) continue;
            const Tensor3& tx = x.tensor(g, h);
            const Tensor3& ty = y.tensor(g, h);
            Tensor3 t(tx.dim0() + ty.dim0(), tx.dim1() + ty.dim1(), tx.dim2() + ty.dim2());
            for (std::size_t i = 0; i < tx.dim0(); ++i)
                for (std::size_t j = 0; j < tx.dim1(); ++j)
                    for (std::size_t m = 0; m < tx.dim2(); ++m)
                        t.at(i, j, m) = tx.at(i, j, m);
            for (std::size_t i = 0; i < ty.dim0(); ++i)
                for (std::size_t j = 0; j < ty.dim1(); ++j)
                    for (std::size_t m = 0; m < ty.dim2(); ++m)
                        t.at(tx.dim0() + i, tx.dim1() + j, tx.dim2() + m) = ty.at(i, j, m);
            a.structure[{g, h}] = std::move(t);
        }
    a.unit = x.unit;
    a.unit.insert(a.unit.end(), y.unit.begin(), y.unit.end());

    if (x.monomials && y.monomials) {
        MonomialInfo info;
        info.generators = x.monomials->generators;
        info.generators.insert(info.generators.end(), y.monomials->generators.begin(),
                               y.monomials->generators.end());
        std::size_t x_summands = 0;
        for (const auto& [g, entries] : x.monomials->basis)
            for (const auto& en : entries) x_summands = std::max(x_summands, en.summand + 1);
        x_summands = std::max<std::size_t>(x_summands, 1);
        const std::size_t xg = x.monomials->generators.size();
        const std::size_t yg = y.monomials->generators.size();
        for (auto g : degrees) {
            std::vector<MonomialInfo::Entry> entries;
            for (const auto& en : x.monomials->basis.at(g)) {
                MonomialInfo::Entry e = en;
                e.exponents.resize(xg + yg, 0);
                entries.push_back(std::move(e));
            }
            for (const auto& en : y.monomials->basis.at(g)) {
                MonomialInfo::Entry e;
                e.summand = x_summands + en.summand;
                e.exponents.assign(xg, 0);
                e.exponents.insert(e.exponents.end(), en.exponents.begin(), en.exponents.end());
                entries.push_back(std::move(e));
            }
            info.basis[g] = std::move(entries);
        }
        a.monomials = std::move(info);
    }
    check_built(a, "build_direct_sum");
    return a;
}

GradedAlgebra build_matrix_example(const Field& f, const Window& w) {
    GradingGroup G = GradingGroup::integers();
    require_degree_window(G, w);

    GradedAlgebra a;
    a.field = f;
    a.group = G;
    a.window = w;
    // degree n basis: matrix units times x^n; diagonal for even n,
    // antidiagonal for odd n, ordered by (row, col)
    auto units_at = [](std::int64_t n) {
        using P = std::pair<int, int>;
        if (n % 2 == 0) return std::vector<P>{{1, 1}, {2, 2}};
        return std::vector<P>{{1, 2}, {2, 1}};
    };
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
        std::vector<std::string> labels;
        for (auto [r, c] : units_at(n)) {
            std::string unit = "E" + std::to_string(r) + std::to_string(c);
            std::string power = pow_label("x", n);
            labels.push_back(power.empty() ? unit : unit + "*" + power);
        }
        a.basis[n] = std::move(labels);
    }
    for (std::int64_t g = w.lo; g <= w.hi; ++g)
        for (std::int64_t h = w.lo; h <= w.hi; ++h) {
            std::int64_t gh = g + h;
            if (gh < w.lo || gh > w.hi) continue;
            auto ug = units_at(g), uh = units_at(h), up = units_at(gh);
            Tensor3 t(2, 2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    if (ug[i].second != uh[j].first) continue;
                    std::pair<int, int> prod{ug[i].first, uh[j].second};
                    for (std::size_t m = 0; m < 2; ++m)
                        if (up[m] == prod) t.at(i, j, m) = Scalar(1);
                }
            a.structure[{g, h}] = std::move(t);
        }
    a.unit = {Scalar(1), Scalar(1)};  // E11 + E22
    check_built(a, "build_matrix_example");
    return a;
}

GradedAlgebra build_group_algebra(const Field& f, const GradingGroup& g) {
    if (g.kind() != GroupKind::finite)
        throw InvalidArgumentError("group algebra builder needs a finite group");
    GradedAlgebra a;
    a.field = f;
    a.group = g;
    a.window = Window::full();
    for (std::size_t i = 0; i < g.order(); ++i)
        a.basis[static_cast<GroupElement>(i)] = {g.labels()[i]};
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) {
            Tensor3 t(1, 1, 1);
            t.at(0, 0, 0) = Scalar(1);
            a.structure[{static_cast<GroupElement>(i), static_cast<GroupElement>(j)}] =
                std::move(t);
        }
    a.unit = {Scalar(1)};
    check_built(a, "build_group_algebra");
    return a;
}

}  // namespace gtwist
