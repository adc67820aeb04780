#include "gtwist/g_algebra.hpp"

#include "gtwist/error.hpp"

#include <algorithm>

namespace gtwist {

std::string format_component(const GradingGroup& g, ComponentKey key) {
    return "(" + g.format_element(key.first) + "," + g.format_element(key.second) + ")";
}

namespace {

std::string fmt_shift(const GradingGroup& g, GroupElement s) { return g.format_element(s); }

}  // namespace

std::size_t GAlgebraWindow::dim(GroupElement f, GroupElement g) const {
    auto it = components.find({f, g});
    if (it == components.end())
        throw OutOfWindowError("component " + format_component(group, {f, g}) + " is absent");
    return it->second.size();
}

const std::vector<std::string>& GAlgebraWindow::labels(GroupElement f, GroupElement g) const {
    auto it = components.find({f, g});
    if (it == components.end())
        throw OutOfWindowError("component " + format_component(group, {f, g}) + " is absent");
    return it->second;
}

const Tensor3& GAlgebraWindow::tensor(GroupElement f, GroupElement g, GroupElement h) const {
    auto it = structure.find({f, g, h});
    if (it == structure.end())
        throw OutOfWindowError("no structure tensor for (" + group.format_element(f) + "," +
                               group.format_element(g) + "," + group.format_element(h) + ")");
    return it->second;
}

const std::vector<Scalar>& GAlgebraWindow::unit(GroupElement f) const {
    auto it = local_units.find(f);
    if (it == local_units.end())
        throw OutOfWindowError("no local unit at " + group.format_element(f));
    return it->second;
}

bool g_algebra_equal(const GAlgebraWindow& a, const GAlgebraWindow& b) {
    return a.field == b.field && a.group == b.group && a.index_window == b.index_window &&
           a.components == b.components && a.structure == b.structure &&
           a.local_units == b.local_units;
}

GAlgebraElement ga_multiply(const GAlgebraWindow& r, const GAlgebraElement& x,
                            const GAlgebraElement& y) {
    if (x.col != y.row)
        throw InvalidArgumentError("non-composable G-algebra elements");
    if (x.coords.size() != r.dim(x.row, x.col) || y.coords.size() != r.dim(y.row, y.col))
        throw DimensionMismatchError("ga_multiply coordinate lengths");
    const Tensor3& t = r.tensor(x.row, x.col, y.col);
    return {x.row, y.col, tensor_apply(r.field, t, x.coords, y.coords)};
}

// ---- associated G-algebras ----

namespace {

GAlgebraWindow associated_impl(std::shared_ptr<const GradedAlgebra> a, const Window& index_window,
                               bool right) {
    const GradedAlgebra& A = *a;
    const auto& G = A.group;
    if (G.kind() == GroupKind::integers && index_window.whole_group)
        throw InvalidArgumentError("integer grading requires a bounded index window");

    GAlgebraWindow r;
    r.field = A.field;
    r.group = G;
    r.index_window = G.kind() == GroupKind::finite ? Window::full() : index_window;
    r.assoc = GAlgebraWindow::Assoc{right, a};

    auto indices = window_elements(G, r.index_window);
    auto inner_degree = [&](GroupElement f, GroupElement g) {
        return right ? G.op(G.inv(f), g) : G.op(f, G.inv(g));
    };

    for (auto f : indices)
        for (auto g : indices) {
            GroupElement d = inner_degree(f, g);
            if (!window_contains(G, A.window, d)) continue;  // absent component
            r.components[{f, g}] = A.basis.at(d);
        }
    for (auto f : indices)
        for (auto g : indices) {
            if (!r.present(f, g)) continue;
            for (auto h : indices) {
                if (!r.present(g, h) || !r.present(f, h)) continue;
                // A_{d1} A_{d2} with d1 d2 = inner degree of (f,h) in both conventions
                r.structure[{f, g, h}] = A.tensor(inner_degree(f, g), inner_degree(g, h));
            }
        }
    for (auto f : indices) r.local_units[f] = A.unit;
    return r;
}

}  // namespace

GAlgebraWindow associated_g_algebra(std::shared_ptr<const GradedAlgebra> a,
                                    const Window& index_window) {
    return associated_impl(std::move(a), index_window, true);
}

GAlgebraWindow associated_left_g_algebra(std::shared_ptr<const GradedAlgebra> a,
                                         const Window& index_window) {
    return associated_impl(std::move(a), index_window, false);
}

// ---- validation ----

ValidationReport validate_g_algebra(const GAlgebraWindow& r) {
    ValidationReport report;
    const auto& G = r.group;
    const Field& F = r.field;
    auto indices = window_elements(G, r.index_window);

    // local units: presence and shape
    for (auto f : indices) {
        if (!r.present(f, f)) {
            report.violations.push_back("missing diagonal component at " + fmt_shift(G, f));
            continue;
        }
        auto it = r.local_units.find(f);
        if (it == r.local_units.end()) {
            report.violations.push_back("missing local unit at " + fmt_shift(G, f));
            continue;
        }
        if (it->second.size() != r.dim(f, f))
            report.violations.push_back("local unit length at " + fmt_shift(G, f));
        else if (r.dim(f, f) == 0 || vec_is_zero(it->second))
            report.violations.push_back("local unit zero at " + fmt_shift(G, f));
    }
    if (!report.violations.empty()) return report;

    // tensor presence and shape
    for (auto f : indices)
        for (auto g : indices) {
            if (!r.present(f, g)) continue;
            for (auto h : indices) {
                if (!r.present(g, h) || !r.present(f, h)) continue;
                auto it = r.structure.find({f, g, h});
                if (it == r.structure.end()) {
                    report.violations.push_back("missing structure tensor at (" +
                                                fmt_shift(G, f) + "," + fmt_shift(G, g) + "," +
                                                fmt_shift(G, h) + ")");
                    continue;
                }
                if (it->second.dim0() != r.dim(f, g) || it->second.dim1() != r.dim(g, h) ||
                    it->second.dim2() != r.dim(f, h))
                    report.violations.push_back("tensor shape at (" + fmt_shift(G, f) + "," +
                                                fmt_shift(G, g) + "," + fmt_shift(G, h) + ")");
            }
        }
    if (!report.violations.empty()) return report;

    // unit laws
    for (auto f : indices)
        for (auto g : indices) {
            if (!r.present(f, g)) continue;
            for (std::size_t i = 0; i < r.dim(f, g); ++i) {
                std::vector<Scalar> x(r.dim(f, g), Scalar(0));
                x[i] = Scalar(1);
                auto left = tensor_apply(F, r.tensor(f, f, g), r.unit(f), x);
                auto right = tensor_apply(F, r.tensor(f, g, g), x, r.unit(g));
                std::string ref =
                    format_component(G, {f, g}) + "[" + r.labels(f, g)[i] + "]";
                if (left != x) report.violations.push_back("left unit: " + ref);
                if (right != x) report.violations.push_back("right unit: " + ref);
            }
        }

    // associativity on composable present quadruples
    for (auto f : indices)
        for (auto g : indices) {
            if (!r.present(f, g)) continue;
            for (auto h : indices) {
                if (!r.present(g, h)) continue;
                for (auto l : indices) {
                    if (!r.present(h, l)) continue;
                    if (!r.present(f, h) || !r.present(g, l) || !r.present(f, l)) {
                        ++report.skipped;
                        continue;
                    }
                    for (std::size_t i = 0; i < r.dim(f, g); ++i)
                        for (std::size_t j = 0; j < r.dim(g, h); ++j) {
                            std::vector<Scalar> x(r.dim(f, g), Scalar(0));
                            std::vector<Scalar> y(r.dim(g, h), Scalar(0));
                            x[i] = Scalar(1);
                            y[j] = Scalar(1);
                            auto xy = tensor_apply(F, r.tensor(f, g, h), x, y);
                            for (std::size_t m = 0; m < r.dim(h, l); ++m) {
                                std::vector<Scalar> z(r.dim(h, l), Scalar(0));
                                z[m] = Scalar(1);
                                auto lhs = tensor_apply(F, r.tensor(f, h, l), xy, z);
                                auto yz = tensor_apply(F, r.tensor(g, h, l), y, z);
                                auto rhs = tensor_apply(F, r.tensor(f, g, l), x, yz);
                                if (lhs != rhs)
                                    report.violations.push_back(
                                        "associativity: (" + format_component(G, {f, g}) + "[" +
                                        r.labels(f, g)[i] + "]," + format_component(G, {g, h}) +
                                        "[" + r.labels(g, h)[j] + "]," +
                                        format_component(G, {h, l}) + "[" + r.labels(h, l)[m] +
                                        "])");
                            }
                        }
                }
            }
        }
    return report;
}

// ---- principal maps ----

PrincipalMap PrincipalMap::from_family(std::shared_ptr<const GAlgebraWindow> carrier,
                                       Window family_window,
                                       std::map<GroupElement, std::map<ComponentKey, Mat>> family) {
    PrincipalMap t;
    t.carrier = std::move(carrier);
    t.family_window = family_window;
    t.family = std::move(family);
    for (auto& [g, blocks] : t.family) {
        (void)g;
        for (auto it = blocks.begin(); it != blocks.end();)
            it = it->second.empty() ? blocks.erase(it) : std::next(it);
    }
    for (auto g : window_elements(t.carrier->group, family_window)) t.family[g];
    return t;
}

PrincipalMap PrincipalMap::from_generator(std::shared_ptr<const GAlgebraWindow> carrier,
                                          const std::map<ComponentKey, Mat>& degree_one_blocks) {
    const GAlgebraWindow& r = *carrier;
    if (r.group.kind() != GroupKind::integers)
        throw InvalidArgumentError("generator form is only defined for integer grading");

    PrincipalMap t;
    t.carrier = carrier;
    t.family_window = shift_window(r.group, r.index_window);

    auto shifted = [](ComponentKey k, std::int64_t d) {
        return ComponentKey{k.first + d, k.second + d};
    };

    // T_0 = identity on every present component
    std::map<ComponentKey, Mat> identity_blocks;
    for (const auto& [key, labels] : r.components)
        if (!labels.empty()) identity_blocks[key] = Mat::identity(labels.size());
    t.family[0] = identity_blocks;

    // T_1: keep the blocks whose source and target components are present
    std::map<ComponentKey, Mat> t1;
    for (const auto& [key, m] : degree_one_blocks) {
        if (m.empty()) continue;
        if (!r.present(key.first, key.second)) continue;
        ComponentKey to = shifted(key, 1);
        if (!r.present(to.first, to.second)) continue;
        t1[key] = m;
    }

    // positive powers: T_n = T_1 o T_{n-1}
    std::map<ComponentKey, Mat> prev = t1;
    for (std::int64_t n = 1; n <= t.family_window.hi; ++n) {
        t.family[n] = prev;
        if (n == t.family_window.hi) break;
        std::map<ComponentKey, Mat> next;
        for (const auto& [key, m] : prev) {
            auto it = t1.find(shifted(key, n));
            if (it == t1.end()) continue;
            next[key] = mat_mul(r.field, it->second, m);
        }
        prev = std::move(next);
    }

    // negative powers: T_{-1} block at (h,l) inverts T_1 at (h-1,l-1)
    std::map<ComponentKey, Mat> tminus;
    for (const auto& [key, m] : t1) {
        auto inv = mat_inverse(r.field, m);
        if (!inv)
            throw SingularBlockError("generator block at " + format_component(r.group, key));
        tminus[shifted(key, 1)] = std::move(*inv);
    }
    prev = tminus;
    for (std::int64_t n = -1; n >= t.family_window.lo; --n) {
        t.family[n] = prev;
        if (n == t.family_window.lo) break;
        std::map<ComponentKey, Mat> next;
        for (const auto& [key, m] : prev) {
            auto it = tminus.find(shifted(key, n));
            if (it == tminus.end()) continue;
            next[key] = mat_mul(r.field, it->second, m);
        }
        prev = std::move(next);
    }
    return t;
}

bool PrincipalMap::has_block(GroupElement g, ComponentKey key) const {
    auto it = family.find(g);
    return it != family.end() && it->second.count(key) != 0;
}

const Mat& PrincipalMap::block(GroupElement g, ComponentKey key) const {
    auto it = family.find(g);
    if (it != family.end()) {
        auto jt = it->second.find(key);
        if (jt != it->second.end()) return jt->second;
    }
    throw MissingComponentError("principal map block g=" + std::to_string(g) + " at (" +
                                std::to_string(key.first) + "," + std::to_string(key.second) +
                                ")");
}

PrincipalMap canonical_principal_map(std::shared_ptr<const GAlgebraWindow> r) {
    const GAlgebraWindow& R = *r;
    if (!R.assoc || !R.assoc->right)
        throw NotAssociatedError("canonical principal map needs the right associated form");

    PrincipalMap t;
    t.carrier = r;
    t.family_window = shift_window(R.group, R.index_window);
    const auto& G = R.group;
    for (auto g : window_elements(G, t.family_window)) {
        auto& blocks = t.family[g];
        for (const auto& [key, labels] : R.components) {
            if (labels.empty()) continue;
            ComponentKey to{G.op(g, key.first), G.op(g, key.second)};
            if (!R.present(to.first, to.second)) continue;
            blocks[key] = Mat::identity(labels.size());
        }
    }
    return t;
}

CheckResult verify_principal_map(const GAlgebraWindow& r, const PrincipalMap& t) {
    const auto& G = r.group;
    const Field& F = r.field;
    std::size_t skipped = 0;
    auto shifts = window_elements(G, t.family_window);

    // block of T_g at component key, with zero-size blocks materialized
    auto get_block = [&](GroupElement g, ComponentKey key, ComponentKey to) -> std::optional<Mat> {
        if (r.dim(key.first, key.second) == 0 || r.dim(to.first, to.second) == 0)
            return Mat(r.dim(to.first, to.second), r.dim(key.first, key.second));
        if (!t.has_block(g, key)) return std::nullopt;
        return t.block(g, key);
    };

    for (auto g : shifts) {
        std::string gs = "g=" + fmt_shift(G, g);
        // shape, presence and invertibility, componentwise
        for (const auto& [key, labels] : r.components) {
            ComponentKey to{G.op(g, key.first), G.op(g, key.second)};
            if (!window_contains(G, r.index_window, to.first) ||
                !window_contains(G, r.index_window, to.second) || !r.present(to.first, to.second)) {
                ++skipped;
                continue;
            }
            if (labels.size() != r.dim(to.first, to.second))
                return CheckResult::fail("shape: " + gs + " at " + format_component(G, key),
                                         skipped);
            if (labels.empty()) continue;
            auto m = get_block(g, key, to);
            if (!m)
                return CheckResult::fail("missing block: " + gs + " at " + format_component(G, key),
                                         skipped);
            if (m->rows() != labels.size() || m->cols() != labels.size())
                return CheckResult::fail("shape: " + gs + " at " + format_component(G, key),
                                         skipped);
            if (!mat_inverse(F, *m))
                return CheckResult::fail("singular: " + gs + " at " + format_component(G, key),
                                         skipped);
        }
        // unit transport 1_h -> 1_{gh}
        for (auto h : window_elements(G, r.index_window)) {
            GroupElement gh = G.op(g, h);
            if (!window_contains(G, r.index_window, gh) || !r.present(h, h) ||
                !r.present(gh, gh)) {
                ++skipped;
                continue;
            }
            auto m = get_block(g, {h, h}, {gh, gh});
            if (!m) return CheckResult::fail("missing block: " + gs + " at (" +
                                                 fmt_shift(G, h) + "," + fmt_shift(G, h) + ")",
                                             skipped);
            if (mat_vec(F, *m, r.unit(h)) != r.unit(gh))
                return CheckResult::fail("unit: " + gs + " at " + fmt_shift(G, h), skipped);
        }
        // multiplicativity on composable pairs
        for (const auto& [key1, labels1] : r.components) {
            for (const auto& [key2, labels2] : r.components) {
                if (key2.first != key1.second) continue;
                ComponentKey prod{key1.first, key2.second};
                if (!r.present(prod.first, prod.second)) {
                    ++skipped;
                    continue;
                }
                ComponentKey to1{G.op(g, key1.first), G.op(g, key1.second)};
                ComponentKey to2{G.op(g, key2.first), G.op(g, key2.second)};
                ComponentKey top{to1.first, to2.second};
                bool targets_present =
                    window_contains(G, r.index_window, to1.first) &&
                    window_contains(G, r.index_window, to1.second) &&
                    window_contains(G, r.index_window, to2.second) && r.present(to1.first, to1.second) &&
                    r.present(to2.first, to2.second) && r.present(top.first, top.second);
                if (!targets_present) {
                    ++skipped;
                    continue;
                }
                auto m1 = get_block(g, key1, to1);
                auto m2 = get_block(g, key2, to2);
                auto mp = get_block(g, prod, top);
                if (!m1 || !m2 || !mp) {
                    ++skipped;  // block gaps already reported by the presence scan
                    continue;
                }
                const Tensor3& src = r.tensor(key1.first, key1.second, key2.second);
                const Tensor3& dst = r.tensor(to1.first, to1.second, to2.second);
                for (std::size_t i = 0; i < labels1.size(); ++i)
                    for (std::size_t j = 0; j < labels2.size(); ++j) {
                        std::vector<Scalar> x(labels1.size(), Scalar(0));
                        std::vector<Scalar> y(labels2.size(), Scalar(0));
                        x[i] = Scalar(1);
                        y[j] = Scalar(1);
                        auto lhs = mat_vec(F, *mp, tensor_apply(F, src, x, y));
                        auto rhs =
                            tensor_apply(F, dst, mat_vec(F, *m1, x), mat_vec(F, *m2, y));
                        if (lhs != rhs)
                            return CheckResult::fail("multiplicativity: " + gs + " at (" +
                                                         format_component(G, key1) + "," +
                                                         format_component(G, key2) + ")",
                                                     skipped);
                    }
            }
        }
    }

    // composition law T_g T_h = T_{gh}
    for (auto g : shifts)
        for (auto h : shifts) {
            GroupElement gh = G.op(g, h);
            if (!window_contains(G, t.family_window, gh)) {
                ++skipped;
                continue;
            }
            for (const auto& [key, labels] : r.components) {
                if (labels.empty()) continue;
                ComponentKey via{G.op(h, key.first), G.op(h, key.second)};
                ComponentKey to{G.op(gh, key.first), G.op(gh, key.second)};
                bool chain_present =
                    window_contains(G, r.index_window, via.first) &&
                    window_contains(G, r.index_window, via.second) &&
                    window_contains(G, r.index_window, to.first) &&
                    window_contains(G, r.index_window, to.second) &&
                    r.present(via.first, via.second) && r.present(to.first, to.second);
                if (!chain_present) {
                    ++skipped;
                    continue;
                }
                auto mh = get_block(h, key, via);
                auto mg = get_block(g, via, to);
                auto mgh = get_block(gh, key, to);
                if (!mh || !mg || !mgh) {
                    ++skipped;
                    continue;
                }
                if (mat_mul(F, *mg, *mh) != *mgh)
                    return CheckResult::fail("composition: g=" + fmt_shift(G, g) +
                                                 " h=" + fmt_shift(G, h) + " at " +
                                                 format_component(G, key),
                                             skipped);
            }
        }
    return CheckResult::pass(skipped);
}

GradedAlgebra compress(const GAlgebraWindow& r, const PrincipalMap& t) {
    CheckResult cert = verify_principal_map(r, t);
    if (!cert.ok) throw UnverifiedPrincipalMapError(cert.witness);

    const auto& G = r.group;
    GroupElement e = G.identity();
    if (!window_contains(G, r.index_window, e))
        throw OutOfWindowError("compression needs the identity index in the window");

    GradedAlgebra a;
    a.field = r.field;
    a.group = G;
    if (G.kind() == GroupKind::finite) {
        for (auto g : window_elements(G, r.index_window))
            if (!r.present(e, g))
                throw OutOfWindowError("e-row component " + format_component(G, {e, g}) +
                                       " is absent");
        a.window = Window::full();
    } else {
        std::int64_t lo = 0, hi = 0;
        bool found = false;
        for (auto g : window_elements(G, r.index_window))
            if (r.present(e, g)) {
                if (!found) lo = hi = g;
                lo = std::min(lo, g);
                hi = std::max(hi, g);
                found = true;
            }
        if (!found || !r.present(e, e))
            throw OutOfWindowError("empty e-row");
        for (std::int64_t g = lo; g <= hi; ++g)
            if (!r.present(e, g))
                throw OutOfWindowError("gap in the e-row at " + std::to_string(g));
        a.window = Window::integer_range(lo, hi);
    }

    auto degrees = window_elements(G, a.window);
    for (auto g : degrees) a.basis[g] = r.labels(e, g);
    a.unit = r.unit(e);

    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = G.op(g, h);
            if (!window_contains(G, a.window, gh)) continue;
            if (!r.present(g, gh))
                throw OutOfWindowError("component " + format_component(G, {g, gh}) +
                                       " required for compression");
            std::size_t dg = r.dim(e, g), dh = r.dim(e, h), dp = r.dim(e, gh);
            Tensor3 out(dg, dh, dp);
            if (dg != 0 && dh != 0) {
                // T_g maps R_{e,h} into R_{g,gh}
                Mat block(r.dim(g, gh), dh);
                if (r.dim(g, gh) != 0) {
                    if (!t.has_block(g, {e, h}))
                        throw OutOfWindowError("principal map lacks the block g=" +
                                               fmt_shift(G, g) + " at (" + fmt_shift(G, e) + "," +
                                               fmt_shift(G, h) + ")");
                    block = t.block(g, {e, h});
                }
                const Tensor3& mult = r.tensor(e, g, gh);
                for (std::size_t j = 0; j < dh; ++j) {
                    std::vector<Scalar> y(dh, Scalar(0));
                    y[j] = Scalar(1);
                    auto ty = mat_vec(r.field, block, y);
                    for (std::size_t i = 0; i < dg; ++i) {
                        std::vector<Scalar> x(dg, Scalar(0));
                        x[i] = Scalar(1);
                        auto prod = tensor_apply(r.field, mult, x, ty);
                        for (std::size_t m = 0; m < dp; ++m) out.at(i, j, m) = prod[m];
                    }
                }
            }
            a.structure[{g, h}] = std::move(out);
        }

    ValidationReport check = validate_algebra(a);
    if (!check.ok())
        throw Error("compression produced an invalid algebra: " + check.violations[0]);
    return a;
}

// ---- morphisms ----

const Mat& GAlgebraMorphism::block(ComponentKey key) const {
    auto it = blocks.find(key);
    if (it == blocks.end())
        throw MissingComponentError("morphism block at (" + std::to_string(key.first) + "," +
                                    std::to_string(key.second) + ")");
    return it->second;
}

GAlgebraMorphism identity_morphism(std::shared_ptr<const GAlgebraWindow> r) {
    GAlgebraMorphism phi;
    phi.source = r;
    phi.target = r;
    for (const auto& [key, labels] : r->components)
        if (!labels.empty()) phi.blocks[key] = Mat::identity(labels.size());
    return phi;
}

GAlgebraMorphism inverse_morphism(const GAlgebraMorphism& phi) {
    GAlgebraMorphism out;
    out.source = phi.target;
    out.target = phi.source;
    for (const auto& [key, m] : phi.blocks) {
        auto inv = mat_inverse(phi.source->field, m);
        if (!inv)
            throw SingularBlockError("morphism block at (" + std::to_string(key.first) + "," +
                                     std::to_string(key.second) + ")");
        out.blocks[key] = std::move(*inv);
    }
    return out;
}

CheckResult check_g_algebra_iso(const GAlgebraWindow& r, const GAlgebraWindow& s,
                                const GAlgebraMorphism& phi) {
    const auto& G = r.group;
    const Field& F = r.field;
    if (G != s.group) throw ShapeMismatchError("different grading groups");
    if (r.index_window != s.index_window) throw ShapeMismatchError("different index windows");
    if (r.field != s.field) throw ShapeMismatchError("different base fields");
    for (const auto& [key, labels] : r.components) {
        (void)labels;
        if (!s.present(key.first, key.second))
            throw ShapeMismatchError("component " + format_component(G, key) +
                                     " present only in the source");
    }
    for (const auto& [key, labels] : s.components) {
        (void)labels;
        if (!r.present(key.first, key.second))
            throw ShapeMismatchError("component " + format_component(G, key) +
                                     " present only in the target");
    }

    auto apply = [&](ComponentKey key, const std::vector<Scalar>& x) -> std::vector<Scalar> {
        if (r.dim(key.first, key.second) == 0 || s.dim(key.first, key.second) == 0)
            return std::vector<Scalar>(s.dim(key.first, key.second), Scalar(0));
        return mat_vec(F, phi.block(key), x);
    };

    // shape scan
    for (const auto& [key, labels] : r.components) {
        std::size_t ds = s.dim(key.first, key.second);
        if (labels.size() != ds)
            return CheckResult::fail("dims at " + format_component(G, key) + ": " +
                                     std::to_string(labels.size()) + " vs " + std::to_string(ds));
        if (labels.empty()) continue;
        if (!phi.has_block(key))
            return CheckResult::fail("missing block at " + format_component(G, key));
        const Mat& m = phi.block(key);
        if (m.rows() != ds || m.cols() != labels.size())
            return CheckResult::fail("block shape at " + format_component(G, key));
    }

    // multiplicativity over composable present pairs
    std::size_t skipped = 0;
    for (const auto& [key1, labels1] : r.components)
        for (const auto& [key2, labels2] : r.components) {
            if (key2.first != key1.second) continue;
            ComponentKey prod{key1.first, key2.second};
            if (!r.present(prod.first, prod.second)) {
                ++skipped;
                continue;
            }
            const Tensor3& src = r.tensor(key1.first, key1.second, key2.second);
            const Tensor3& dst = s.tensor(key1.first, key1.second, key2.second);
            for (std::size_t i = 0; i < labels1.size(); ++i)
                for (std::size_t j = 0; j < labels2.size(); ++j) {
                    std::vector<Scalar> x(labels1.size(), Scalar(0));
                    std::vector<Scalar> y(labels2.size(), Scalar(0));
                    x[i] = Scalar(1);
                    y[j] = Scalar(1);
                    auto lhs = apply(prod, tensor_apply(F, src, x, y));
                    auto rhs = tensor_apply(F, dst, apply(key1, x), apply(key2, y));
                    if (lhs != rhs)
                        return CheckResult::fail("(" + format_component(G, key1) + "," +
                                                     format_component(G, key2) + ")",
                                                 skipped);
                }
        }

    // local units
    for (auto f : window_elements(G, r.index_window)) {
        if (!r.present(f, f)) continue;
        if (apply({f, f}, r.unit(f)) != s.unit(f))
            return CheckResult::fail("unit at " + fmt_shift(G, f), skipped);
    }

    // blockwise invertibility
    for (const auto& [key, labels] : r.components) {
        if (labels.empty()) continue;
        if (!mat_inverse(F, phi.block(key)))
            return CheckResult::fail("singular block at " + format_component(G, key), skipped);
    }
    return CheckResult::pass(skipped);
}

PrincipalMap conjugate_canonical_map(const GAlgebraMorphism& phi) {
    if (!phi.source || !phi.target)
        throw InvalidArgumentError("morphism lacks source/target carriers");
    const GAlgebraWindow& R = *phi.source;
    const GAlgebraWindow& S = *phi.target;
    if (!R.assoc || !R.assoc->right)
        throw NotAssociatedError("conjugation needs an associated source");
    CheckResult cert = check_g_algebra_iso(R, S, phi);
    if (!cert.ok) throw UncertifiedIsoError(cert.witness);

    const auto& G = S.group;
    PrincipalMap t;
    t.carrier = phi.target;
    t.family_window = shift_window(G, S.index_window);
    for (auto g : window_elements(G, t.family_window)) {
        auto& blocks = t.family[g];
        for (const auto& [key, labels] : S.components) {
            if (labels.empty()) continue;
            ComponentKey to{G.op(g, key.first), G.op(g, key.second)};
            if (!window_contains(G, S.index_window, to.first) ||
                !window_contains(G, S.index_window, to.second) ||
                !S.present(to.first, to.second) || S.dim(to.first, to.second) == 0)
                continue;
            // alpha . S_g . alpha^-1 with identity S_g blocks
            auto inv = mat_inverse(S.field, phi.block(key));
            if (!inv) throw SingularBlockError("morphism block at " + format_component(G, key));
            blocks[key] = mat_mul(S.field, phi.block(to), *inv);
        }
    }
    return t;
}

DimObstructionReport principal_dimension_obstruction(const GAlgebraWindow& r) {
    DimObstructionReport report;
    const auto& G = r.group;
    for (auto g : window_elements(G, shift_window(G, r.index_window))) {
        if (g == G.identity()) continue;
        for (const auto& [key, labels] : r.components) {
            ComponentKey to{G.op(g, key.first), G.op(g, key.second)};
            if (!window_contains(G, r.index_window, to.first) ||
                !window_contains(G, r.index_window, to.second) || !r.present(to.first, to.second))
                continue;
            std::size_t d_to = r.dim(to.first, to.second);
            if (labels.size() != d_to)
                report.entries.push_back({g, key, to, labels.size(), d_to});
        }
    }
    return report;
}

GAlgebraWindow g_algebra_direct_sum(const GAlgebraWindow& a, const GAlgebraWindow& b) {
    if (a.field != b.field) throw ShapeMismatchError("direct sum over different fields");
    if (a.group != b.group) throw ShapeMismatchError("direct sum over different groups");
    if (a.index_window != b.index_window) throw ShapeMismatchError("direct sum needs equal windows");

    auto decorate = [](const std::string& tag, const std::string& label) {
        return label == "1" ? tag : tag + "*" + label;
    };

    GAlgebraWindow out;
    out.field = a.field;
    out.group = a.group;
    out.index_window = a.index_window;
    for (const auto& [key, la] : a.components) {
        if (!b.present(key.first, key.second)) continue;
        std::vector<std::string> labels;
        for (const auto& l : la) labels.push_back(decorate("e1", l));
        for (const auto& l : b.labels(key.first, key.second)) labels.push_back(decorate("e2", l));
        out.components[key] = std::move(labels);
    }
    for (const auto& [trip, ta] : a.structure) {
        auto it = b.structure.find(trip);
        if (it == b.structure.end()) continue;
        auto [f, g, h] = trip;
        if (!out.present(f, g) || !out.present(g, h) || !out.present(f, h)) continue;
        const Tensor3& tb = it->second;
        Tensor3 t(ta.dim0() + tb.dim0(), ta.dim1() + tb.dim1(), ta.dim2() + tb.dim2());
        for (std::size_t i = 0; i < ta.dim0(); ++i)
            for (std::size_t j = 0; j < ta.dim1(); ++j)
                for (std::size_t m = 0; m < ta.dim2(); ++m) t.at(i, j, m) = ta.at(i, j, m);
        for (std::size_t i = 0; i < tb.dim0(); ++i)
            for (std::size_t j = 0; j < tb.dim1(); ++j)
                for (std::size_t m = 0; m < tb.dim2(); ++m)
                    t.at(ta.dim0() + i, ta.dim1() + j, ta.dim2() + m) = tb.at(i, j, m);
        out.structure[trip] = std::move(t);
    }
    for (const auto& [f, ua] : a.local_units) {
        auto it = b.local_units.find(f);
        if (it == b.local_units.end()) continue;
        std::vector<Scalar> u = ua;
        u.insert(u.end(), it->second.begin(), it->second.end());
        out.local_units[f] = std::move(u);
    }
    return out;
}

}  // namespace gtwist
