#include "gtwist/twisting.hpp"

#include "gtwist/error.hpp"

namespace gtwist {

namespace {

Mat mat_power(const Field& f, const Mat& m, std::int64_t n) {
    if (n < 0) {
        auto inv = mat_inverse(f, m);
        if (!inv) throw SingularBlockError("matrix power of a singular block");
        return mat_power(f, *inv, -n);
    }
    Mat acc = Mat::identity(m.rows());
    Mat base = m;
    while (n > 0) {
        if (n & 1) acc = mat_mul(f, acc, base);
        base = mat_mul(f, base, base);
        n >>= 1;
    }
    return acc;
}

}  // namespace

TwistingSystem TwistingSystem::identity(std::shared_ptr<const GradedAlgebra> a) {
    TwistingSystem tau;
    tau.carrier = a;
    const auto& G = a->group;
    auto degrees = window_elements(G, a->window);
    for (auto g : degrees) {
        auto& blocks = tau.family[g];
        for (auto h : degrees) {
            if (!window_contains(G, a->window, G.op(g, h))) continue;
            if (a->dim(h) == 0) continue;
            blocks[h] = Mat::identity(a->dim(h));
        }
    }
    return tau;
}

TwistingSystem TwistingSystem::sigma_powers(std::shared_ptr<const GradedAlgebra> a,
                                            const GradedLinearMap& sigma) {
    const auto& G = a->group;
    if (G.kind() != GroupKind::integers)
        throw InvalidArgumentError("sigma-power systems need an integer grading");
    if (sigma.shift != 0)
        throw InvalidArgumentError("sigma must be degree-preserving");
    TwistingSystem tau;
    tau.carrier = a;
    auto degrees = window_elements(G, a->window);
    for (auto g : degrees) {
        auto& blocks = tau.family[g];
        for (auto h : degrees) {
            if (!window_contains(G, a->window, g + h)) continue;
            if (a->dim(h) == 0) continue;
            blocks[h] = mat_power(a->field, sigma.block(h), g);
        }
    }
    return tau;
}

TwistingSystem TwistingSystem::from_family(
    std::shared_ptr<const GradedAlgebra> a,
    std::map<GroupElement, std::map<GroupElement, Mat>> family) {
    TwistingSystem tau;
    tau.carrier = std::move(a);
    tau.family = std::move(family);
    for (auto& [g, blocks] : tau.family) {
        (void)g;
        for (auto it = blocks.begin(); it != blocks.end();)
            it = it->second.empty() ? blocks.erase(it) : std::next(it);
    }
    for (auto g : window_elements(tau.carrier->group, tau.carrier->window)) tau.family[g];
    return tau;
}

bool TwistingSystem::has_block(GroupElement g, GroupElement degree) const {
    auto it = family.find(g);
    return it != family.end() && it->second.count(degree) != 0;
}

const Mat& TwistingSystem::block(GroupElement g, GroupElement degree) const {
    auto it = family.find(g);
    if (it != family.end()) {
        auto jt = it->second.find(degree);
        if (jt != it->second.end()) return jt->second;
    }
    throw MissingComponentError("twisting block g=" + std::to_string(g) + " at degree " +
                                std::to_string(degree));
}

bool twisting_equal(const TwistingSystem& a, const TwistingSystem& b) {
    return a.family == b.family && structure_equal(*a.carrier, *b.carrier);
}

bool principal_equal(const PrincipalMap& a, const PrincipalMap& b) {
    return a.family_window == b.family_window && a.family == b.family &&
           g_algebra_equal(*a.carrier, *b.carrier);
}

CheckResult verify_twisting_system(const GradedAlgebra& a, const TwistingSystem& tau) {
    const auto& G = a.group;
    const Field& F = a.field;
    auto degrees = window_elements(G, a.window);
    std::size_t skipped = 0;

    // the block of tau_g at degree h, required whenever g, h, gh are all
    // in-window; zero-dimension blocks are implicit
    auto get_block = [&](GroupElement g, GroupElement h) -> Mat {
        if (a.dim(h) == 0) return Mat(0, 0);
        if (!tau.has_block(g, h))
            throw MissingComponentError("twisting block g=" + G.format_element(g) +
                                        " at degree " + G.format_element(h));
        return tau.block(g, h);
    };

    // blockwise shape and invertibility
    for (auto g : degrees)
        for (auto h : degrees) {
            if (!window_contains(G, a.window, G.op(g, h))) continue;
            Mat m = get_block(g, h);
            if (a.dim(h) == 0) continue;
            if (m.rows() != a.dim(h) || m.cols() != a.dim(h))
                return CheckResult::fail("shape: g=" + G.format_element(g) + " at degree " +
                                         G.format_element(h));
            if (!mat_inverse(F, m))
                return CheckResult::fail("singular block: g=" + G.format_element(g) +
                                         " at degree " + G.format_element(h));
        }

    // tau_g(y tau_h(z)) = tau_g(y) tau_{gh}(z) on basis pairs
    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = G.op(g, h);
            for (auto l : degrees) {
                GroupElement hl = G.op(h, l);
                GroupElement ghl = G.op(g, G.op(h, l));
                if (!window_contains(G, a.window, hl) || !window_contains(G, a.window, gh) ||
                    !window_contains(G, a.window, ghl)) {
                    ++skipped;
                    continue;
                }
                if (a.dim(h) == 0 || a.dim(l) == 0) continue;
                Mat th_l = get_block(h, l);
                Mat tg_hl = get_block(g, hl);
                Mat tg_h = get_block(g, h);
                Mat tgh_l = get_block(gh, l);
                const Tensor3& t_hl = a.tensor(h, l);
                for (std::size_t j = 0; j < a.dim(h); ++j)
                    for (std::size_t m = 0; m < a.dim(l); ++m) {
                        std::vector<Scalar> y(a.dim(h), Scalar(0)), z(a.dim(l), Scalar(0));
                        y[j] = Scalar(1);
                        z[m] = Scalar(1);
                        auto lhs = tensor_apply(F, t_hl, y, mat_vec(F, th_l, z));
                        if (a.dim(hl) != 0) lhs = mat_vec(F, tg_hl, lhs);
                        auto rhs =
                            tensor_apply(F, t_hl, mat_vec(F, tg_h, y), mat_vec(F, tgh_l, z));
                        if (lhs != rhs)
                            return CheckResult::fail(
                                "(" + G.format_element(g) + "," +
                                    format_element_ref(G, h, a.basis.at(h)[j]) + "," +
                                    format_element_ref(G, l, a.basis.at(l)[m]) + ")",
                                skipped);
                    }
            }
        }
    return CheckResult::pass(skipped);
}

GradedAlgebra zhang_twist(const GradedAlgebra& a, const TwistingSystem& tau) {
    CheckResult cert = verify_twisting_system(a, tau);
    if (!cert.ok) throw UnverifiedTwistingSystemError(cert.witness);

    const auto& G = a.group;
    GradedAlgebra out;
    out.field = a.field;
    out.group = G;
    out.window = a.window;
    out.basis = a.basis;
    out.unit = a.unit;

    auto degrees = window_elements(G, a.window);
    for (auto g : degrees)
        for (auto h : degrees) {
            GroupElement gh = G.op(g, h);
            if (!window_contains(G, a.window, gh)) continue;
            const Tensor3& t = a.tensor(g, h);
            Tensor3 tw(a.dim(g), a.dim(h), a.dim(gh));
            if (a.dim(g) != 0 && a.dim(h) != 0) {
                const Mat& tg = tau.block(g, h);
                for (std::size_t j = 0; j < a.dim(h); ++j) {
                    std::vector<Scalar> y(a.dim(h), Scalar(0));
                    y[j] = Scalar(1);
                    auto ty = mat_vec(a.field, tg, y);
                    for (std::size_t i = 0; i < a.dim(g); ++i) {
                        std::vector<Scalar> x(a.dim(g), Scalar(0));
                        x[i] = Scalar(1);
                        auto prod = tensor_apply(a.field, t, x, ty);
                        for (std::size_t m = 0; m < a.dim(gh); ++m) tw.at(i, j, m) = prod[m];
                    }
                }
            }
            out.structure[{g, h}] = std::move(tw);
        }

    ValidationReport check = validate_algebra(out);
    if (!check.ok())
        throw Error("Zhang twist produced an invalid algebra: " + check.violations[0]);
    return out;
}

namespace {

// delta/gamma move between a graded algebra and its associated G-algebra;
// the bijection is stated blockwise on an index window equal to the degree
// window, which we require.
void require_matching_windows(const GAlgebraWindow& r) {
    if (!r.assoc || !r.assoc->right)
        throw NotAssociatedError("the carrier is not a right associated G-algebra");
    if (r.index_window != r.assoc->algebra->window)
        throw InvalidArgumentError(
            "index window must equal the degree window of the associated algebra");
}

}  // namespace

TwistingSystem delta(const PrincipalMap& t) {
    if (!t.carrier) throw InvalidArgumentError("principal map lacks a carrier");
    const GAlgebraWindow& r = *t.carrier;
    require_matching_windows(r);
    CheckResult cert = verify_principal_map(r, t);
    if (!cert.ok) throw UnverifiedPrincipalMapError(cert.witness);

    auto a = r.assoc->algebra;
    const auto& G = a->group;
    GroupElement e = G.identity();

    TwistingSystem tau;
    tau.carrier = a;
    auto degrees = window_elements(G, a->window);
    for (auto n : degrees) {
        auto& blocks = tau.family[n];
        for (auto h : degrees) {
            GroupElement nh = G.op(n, h);
            if (!window_contains(G, a->window, nh)) continue;
            if (a->dim(h) == 0) continue;
            // S_n^-1 T_n on the e-row is T_n's block at (e,h) verbatim
            blocks[h] = t.block(n, {e, h});
        }
    }
    return tau;
}

PrincipalMap gamma(const TwistingSystem& tau) {
    if (!tau.carrier) throw InvalidArgumentError("twisting system lacks a carrier");
    auto a = tau.carrier;
    CheckResult cert = verify_twisting_system(*a, tau);
    if (!cert.ok) throw UnverifiedTwistingSystemError(cert.witness);

    const auto& G = a->group;
    auto carrier = std::make_shared<GAlgebraWindow>(associated_g_algebra(a, a->window));

    PrincipalMap t;
    t.carrier = carrier;
    t.family_window = shift_window(G, carrier->index_window);
    for (auto g : window_elements(G, t.family_window)) {
        auto& blocks = t.family[g];
        for (const auto& [key, labels] : carrier->components) {
            if (labels.empty()) continue;
            auto [h, l] = key;
            ComponentKey to{G.op(g, h), G.op(g, l)};
            if (!window_contains(G, carrier->index_window, to.first) ||
                !window_contains(G, carrier->index_window, to.second) ||
                !carrier->present(to.first, to.second))
                continue;
            GroupElement m = G.op(G.inv(h), l);
            auto inv = mat_inverse(a->field, tau.block(h, m));
            if (!inv)
                throw SingularBlockError("twisting block g=" + G.format_element(h) +
                                         " at degree " + G.format_element(m));
            blocks[key] = mat_mul(a->field, tau.block(G.op(g, h), m), *inv);
        }
    }
    return t;
}

CheckResult check_inverse_twist_relation(const GradedAlgebra& a, const TwistingSystem& tau) {
    const auto& G = a.group;
    const Field& F = a.field;
    auto degrees = window_elements(G, a.window);
    std::size_t skipped = 0;

    auto inv_block = [&](GroupElement g, GroupElement h) -> Mat {
        if (a.dim(h) == 0) return Mat(0, 0);
        auto inv = mat_inverse(F, tau.block(g, h));
        if (!inv)
            throw SingularBlockError("twisting block g=" + G.format_element(g) + " at degree " +
                                     G.format_element(h));
        return *inv;
    };

    for (auto h : degrees)
        for (auto m : degrees) {
            GroupElement hm = G.op(h, m);
            for (auto l : degrees) {
                GroupElement ml = G.op(m, l);
                GroupElement hml = G.op(h, ml);
                if (!window_contains(G, a.window, ml) || !window_contains(G, a.window, hm) ||
                    !window_contains(G, a.window, hml)) {
                    ++skipped;
                    continue;
                }
                if (a.dim(m) == 0 || a.dim(l) == 0) continue;
                Mat th_ml_inv = inv_block(h, ml);
                Mat th_m_inv = inv_block(h, m);
                Mat tm_l = tau.block(m, l);
                Mat thm_l_inv = inv_block(hm, l);
                const Tensor3& t_ml = a.tensor(m, l);
                for (std::size_t i = 0; i < a.dim(m); ++i)
                    for (std::size_t j = 0; j < a.dim(l); ++j) {
                        std::vector<Scalar> x(a.dim(m), Scalar(0)), y(a.dim(l), Scalar(0));
                        x[i] = Scalar(1);
                        y[j] = Scalar(1);
                        auto lhs = tensor_apply(F, t_ml, x, y);
                        if (a.dim(ml) != 0) lhs = mat_vec(F, th_ml_inv, lhs);
                        auto rhs = tensor_apply(F, t_ml, mat_vec(F, th_m_inv, x),
                                                mat_vec(F, tm_l, mat_vec(F, thm_l_inv, y)));
                        if (lhs != rhs)
                            return CheckResult::fail(
                                "(" + G.format_element(h) + "," +
                                    format_element_ref(G, m, a.basis.at(m)[i]) + "," +
                                    format_element_ref(G, l, a.basis.at(l)[j]) + ")",
                                skipped);
                    }
            }
        }
    return CheckResult::pass(skipped);
}

TwistEquivalence twist_equivalence_from_iso(const GAlgebraMorphism& alpha) {
    if (!alpha.source || !alpha.target)
        throw InvalidArgumentError("morphism lacks source/target carriers");
    const GAlgebraWindow& src = *alpha.source;
    const GAlgebraWindow& tgt = *alpha.target;
    require_matching_windows(src);
    require_matching_windows(tgt);

    CheckResult cert = check_g_algebra_iso(src, tgt, alpha);
    if (!cert.ok) throw UncertifiedIsoError(cert.witness);

    auto a = src.assoc->algebra;
    auto b = tgt.assoc->algebra;
    const auto& G = a->group;
    GroupElement e = G.identity();

    TwistEquivalence out{conjugate_canonical_map(alpha),
                         TwistingSystem{},
                         GradedAlgebra{},
                         GradedLinearMap{},
                         CheckResult::pass()};
    out.tau = delta(out.transported);
    out.twisted = zhang_twist(*b, out.tau);

    out.iso.shift = e;
    out.iso.source = a;
    out.iso.target = std::make_shared<GradedAlgebra>(out.twisted);
    for (auto g : window_elements(G, a->window)) {
        if (a->dim(g) == 0) continue;
        out.iso.blocks[g] = alpha.block({e, g});
    }
    out.certificate = check_graded_iso(*a, out.twisted, out.iso);
    return out;
}

}  // namespace gtwist
