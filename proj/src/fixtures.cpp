#include "gtwist/fixtures.hpp"

#include "gtwist/error.hpp"

#include <algorithm>

namespace gtwist {

namespace {

void self_verify(const FixtureBundle& b) {
    for (const auto& [name, a] : b.algebras) {
        ValidationReport r = validate_algebra(*a);
        if (!r.ok())
            throw Error("fixture " + b.name + ": algebra " + name + ": " + r.violations[0]);
    }
    for (const auto& [name, r] : b.g_algebras) {
        ValidationReport rep = validate_g_algebra(*r);
        if (!rep.ok())
            throw Error("fixture " + b.name + ": G-algebra " + name + ": " + rep.violations[0]);
    }
    for (const auto& [name, t] : b.twists) {
        CheckResult c = verify_twisting_system(*t.carrier, t);
        if (!c.ok) throw Error("fixture " + b.name + ": twist " + name + ": " + c.witness);
    }
    for (const auto& [name, t] : b.principal_maps) {
        CheckResult c = verify_principal_map(*t.carrier, t);
        if (!c.ok) throw Error("fixture " + b.name + ": principal map " + name + ": " + c.witness);
    }
    for (const auto& [name, m] : b.morphisms) {
        CheckResult c = check_g_algebra_iso(*m.source, *m.target, m);
        if (!c.ok) throw Error("fixture " + b.name + ": morphism " + name + ": " + c.witness);
    }
}

// oracle for endomorphism dims: sum of hom-shift dimensions over the cells
std::map<ComponentKey, std::size_t> dims_by_cell_sums(const GradedAlgebra& base,
                                                      const BigradedModule& p, const Window& w) {
    std::map<ComponentKey, std::size_t> dims;
    auto indices = window_elements(base.group, w);
    for (auto f : indices)
        for (auto g : indices) {
            std::size_t total = 0;
            bool known = true;
            for (auto sf : p.rows.at(f))
                for (auto sg : p.rows.at(g)) {
                    auto cell = hom_shift_component(base, sg, sf);
                    if (!cell.dim) { known = false; break; }
                    total += *cell.dim;
                }
            if (known) dims[{f, g}] = total;
        }
    return dims;
}

DimObstructionReport obstruction_from_dims(const std::map<ComponentKey, std::size_t>& dims,
                                           const GradingGroup& G, const Window& w) {
    DimObstructionReport report;
    for (auto g : window_elements(G, shift_window(G, w))) {
        if (g == G.identity()) continue;
        for (const auto& [key, d] : dims) {
            ComponentKey to{G.op(g, key.first), G.op(g, key.second)};
            auto it = dims.find(to);
            if (it == dims.end()) continue;
            if (it->second != d) report.entries.push_back({g, key, to, d, it->second});
        }
    }
    return report;
}

FixtureBundle make_not_principal(const Field& f, const Window& w) {
    FixtureBundle b;
    b.name = "not-principal";
    b.field = f;
    b.group = GradingGroup::integers();
    b.window = w;

    // rows: B<n> for even n, B<-n> for odd n
    BigradedModule p;
    std::map<GroupElement, std::vector<GroupElement>> rows;
    std::int64_t span_lo = 0, span_hi = 0;
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
        std::int64_t s = (n % 2 == 0) ? n : -n;
        rows[n] = {s};
        span_lo = std::min(span_lo, s);
        span_hi = std::max(span_hi, s);
    }
    // base window wide enough for every cell degree
    Window base_w = Window::integer_range(span_lo - span_hi, span_hi - span_lo);
    auto base = std::make_shared<const GradedAlgebra>(
        build_polynomial_ring(f, {{"x", 1}}, base_w));
    p.base = base;
    p.rows = std::move(rows);

    auto h = std::make_shared<const GAlgebraWindow>(endo_g_algebra(p, w));

    b.algebras["B"] = base;
    b.modules["P"] = p;
    b.g_algebras["H"] = h;
    b.expected_dims = dims_by_cell_sums(*base, p, w);
    b.expected_obstruction = obstruction_from_dims(b.expected_dims, b.group, w);
    self_verify(b);
    return b;
}

FixtureBundle make_eg2(const Field& f, const Window& w) {
    FixtureBundle b;
    b.name = "eg2";
    b.field = f;
    b.group = GradingGroup::integers();
    b.window = w;

    std::int64_t s = std::max(std::llabs(w.lo), std::llabs(w.hi));
    Window base_w = Window::integer_range(-2 * s, 2 * s);

    // the source ring of the example, for reference
    auto kx_pos = build_polynomial_ring(f, {{"x", 1}}, Window::integer_range(0, 2 * s));
    auto ky_pos = build_polynomial_ring(f, {{"y", 1}}, Window::integer_range(0, 2 * s));
    b.algebras["A"] = std::make_shared<const GradedAlgebra>(build_direct_sum(kx_pos, ky_pos));

    // H = hom components of P with P_{n*} = k[x]<n> + k[y]<-n>, computed
    // summandwise over the two polynomial factors
    auto kx = std::make_shared<const GradedAlgebra>(build_polynomial_ring(f, {{"x", 1}}, base_w));
    auto ky = std::make_shared<const GradedAlgebra>(build_polynomial_ring(f, {{"y", 1}}, base_w));
    BigradedModule p1{kx, {}}, p2{ky, {}};
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
        p1.rows[n] = {n};
        p2.rows[n] = {-n};
    }
    auto h = std::make_shared<const GAlgebraWindow>(
        g_algebra_direct_sum(endo_g_algebra(p1, w), endo_g_algebra(p2, w)));

    // B = k[x] + k[y] with x in degree 1 and y in degree -1
    auto bx = build_polynomial_ring(f, {{"x", 1}}, base_w);
    auto by = build_polynomial_ring(f, {{"y", -1}}, base_w);
    auto bb = std::make_shared<const GradedAlgebra>(build_direct_sum(bx, by));
    auto bbar = std::make_shared<const GAlgebraWindow>(associated_g_algebra(bb, w));

    // identity-coordinate iso H -> assoc(B)
    GAlgebraMorphism iso;
    iso.source = h;
    iso.target = bbar;
    for (const auto& [key, labels] : h->components)
        if (!labels.empty()) iso.blocks[key] = Mat::identity(labels.size());

    b.algebras["B"] = bb;
    b.g_algebras["H"] = h;
    b.g_algebras["Bbar"] = bbar;
    b.morphisms["iso"] = iso;
    b.modules["P1"] = p1;
    b.modules["P2"] = p2;

    // the displayed dimension pattern: 1 / 2 / 1 by sign of n - m
    for (std::int64_t n = w.lo; n <= w.hi; ++n)
        for (std::int64_t m = w.lo; m <= w.hi; ++m)
            b.expected_dims[{n, m}] = (n == m) ? 2 : 1;
    b.expected_obstruction = {};  // principal: every shifted diagonal has equal dims
    self_verify(b);
    return b;
}

FixtureBundle make_zhang_matrix_pair(const Field& f, const Window& w) {
    FixtureBundle b;
    b.name = "zhang-matrix-pair";
    b.field = f;
    b.group = GradingGroup::integers();
    b.window = w;

    auto a = std::make_shared<const GradedAlgebra>(build_matrix_example(f, w));
    auto bx = build_laurent_ring(f, "x", 1, w);
    auto by = build_laurent_ring(f, "y", 1, w);
    auto bb = std::make_shared<const GradedAlgebra>(build_direct_sum(bx, by));

    auto abar = std::make_shared<const GAlgebraWindow>(associated_g_algebra(a, w));
    auto bbar = std::make_shared<const GAlgebraWindow>(associated_g_algebra(bb, w));

    GAlgebraMorphism phi = matrix_pair_morphism(bbar, abar);
    GAlgebraMorphism psi = inverse_morphism(phi);  // blocks are self-inverse

    PrincipalMap t = conjugate_canonical_map(psi);

    b.algebras["A"] = a;
    b.algebras["B"] = bb;
    b.g_algebras["Abar"] = abar;
    b.g_algebras["Bbar"] = bbar;
    b.morphisms["phi"] = phi;
    b.morphisms["psi"] = psi;
    b.principal_maps["S_A"] = canonical_principal_map(abar);
    b.principal_maps["S_B"] = canonical_principal_map(bbar);
    b.principal_maps["T"] = t;
    b.twists["tau"] = delta(t);

    for (const auto& [key, labels] : abar->components) b.expected_dims[key] = labels.size();
    b.expected_obstruction = {};
    self_verify(b);
    return b;
}

FixtureBundle make_q_plane(const Field& f, const Window& w) {
    FixtureBundle b;
    b.name = "q-plane";
    b.field = f;
    b.group = GradingGroup::integers();
    b.window = w;

    auto a = std::make_shared<const GradedAlgebra>(
        build_polynomial_ring(f, {{"x", 1}, {"y", 1}}, w));
    Scalar q = f.canon(Scalar(2));
    GradedLinearMap sigma = generator_scaling_map(a, {f.one(), q});
    TwistingSystem tau = TwistingSystem::sigma_powers(a, sigma);
    PrincipalMap t = gamma(tau);

    b.algebras["A"] = a;
    b.algebras["Atau"] = std::make_shared<const GradedAlgebra>(zhang_twist(*a, tau));
    b.twists["tau"] = tau;
    b.principal_maps["T"] = t;
    b.g_algebras["Abar"] = t.carrier;
    self_verify(b);
    return b;
}

}  // namespace

GAlgebraMorphism matrix_pair_morphism(std::shared_ptr<const GAlgebraWindow> b_bar,
                                      std::shared_ptr<const GAlgebraWindow> a_bar) {
    GAlgebraMorphism phi;
    phi.source = b_bar;
    phi.target = a_bar;
    Mat swap(2, 2);
    swap.at(0, 1) = Scalar(1);
    swap.at(1, 0) = Scalar(1);
    for (const auto& [key, labels] : b_bar->components) {
        if (labels.empty()) continue;
        // row parity picks which idempotent goes to E11: (x^d, 0) lands on
        // E_{s(i) s(j)} x^d with s even -> 1, s odd -> 2
        phi.blocks[key] = (key.first % 2 == 0) ? Mat::identity(2) : swap;
    }
    return phi;
}

FixtureBundle fixture(const std::string& name, const Field& f, const Window& window) {
    if (name == "not-principal") return make_not_principal(f, window);
    if (name == "eg2") return make_eg2(f, window);
    if (name == "zhang-matrix-pair") return make_zhang_matrix_pair(f, window);
    if (name == "q-plane") return make_q_plane(f, window);
    throw UnknownFixtureError(name);
}

}  // namespace gtwist
