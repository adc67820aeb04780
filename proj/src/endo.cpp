#include "gtwist/endo.hpp"

#include "gtwist/error.hpp"

#include <algorithm>

namespace gtwist {

HomShiftComponent hom_shift_component(const GradedAlgebra& b, GroupElement a,
                                      GroupElement b_shift) {
    const auto& G = b.group;
    GroupElement d = G.op(G.inv(b_shift), a);
    if (!window_contains(G, b.window, d)) return {d, std::nullopt};
    return {d, b.dim(d)};
}

GAlgebraWindow endo_g_algebra(const BigradedModule& p, const Window& index_window) {
    const GradedAlgebra& B = *p.base;
    const auto& G = B.group;

    GAlgebraWindow h;
    h.field = B.field;
    h.group = G;
    h.index_window = G.kind() == GroupKind::finite ? Window::full() : index_window;
    auto indices = window_elements(G, h.index_window);

    for (auto f : indices)
        if (!p.rows.count(f))
            throw InvalidArgumentError("module has no row at index " + G.format_element(f));

    // cell degree of entry (i,j) in hom(P_{g*}, P_{f*})
    auto cell_degree = [&](GroupElement f, std::size_t i, GroupElement g, std::size_t j) {
        return G.op(G.inv(p.rows.at(f)[i]), p.rows.at(g)[j]);
    };

    // components: present iff every cell degree stays in the base window
    for (auto f : indices) {
        const auto& target = p.rows.at(f);
        for (auto g : indices) {
            const auto& source = p.rows.at(g);
            bool known = true;
            for (std::size_t i = 0; i < target.size() && known; ++i)
                for (std::size_t j = 0; j < source.size() && known; ++j)
                    if (!window_contains(G, B.window, cell_degree(f, i, g, j))) known = false;
            if (!known) {
                if (f == g)
                    throw OutOfWindowError("diagonal cell degree leaves the base window at " +
                                           G.format_element(f));
                continue;
            }
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < target.size(); ++i)
                for (std::size_t j = 0; j < source.size(); ++j) {
                    GroupElement d = cell_degree(f, i, g, j);
                    for (const auto& lab : B.basis.at(d)) {
                        std::string cell = "E[" + std::to_string(i) + "," + std::to_string(j) + "]";
                        labels.push_back(lab == "1" ? cell : cell + "*" + lab);
                    }
                }
            h.components[{f, g}] = std::move(labels);
        }
    }

    // basis index of (i, j, k) inside component (f,g)
    auto offsets = [&](GroupElement f, GroupElement g) {
        const auto& target = p.rows.at(f);
        const auto& source = p.rows.at(g);
        std::vector<std::vector<std::size_t>> off(target.size(),
                                                  std::vector<std::size_t>(source.size(), 0));
        std::size_t acc = 0;
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t j = 0; j < source.size(); ++j) {
                off[i][j] = acc;
                acc += B.dim(cell_degree(f, i, g, j));
            }
        return off;
    };

    for (auto f : indices)
        for (auto g : indices) {
            if (!h.present(f, g)) continue;
            auto off_fg = offsets(f, g);
            for (auto l : indices) {
                if (!h.present(g, l) || !h.present(f, l)) continue;
                auto off_gl = offsets(g, l);
                auto off_fl = offsets(f, l);
                Tensor3 t(h.dim(f, g), h.dim(g, l), h.dim(f, l));
                const auto& target = p.rows.at(f);
                const auto& middle = p.rows.at(g);
                const auto& source = p.rows.at(l);
                for (std::size_t i = 0; i < target.size(); ++i)
                    for (std::size_t j = 0; j < middle.size(); ++j) {
                        GroupElement d1 = cell_degree(f, i, g, j);
                        for (std::size_t k = 0; k < source.size(); ++k) {
                            GroupElement d2 = cell_degree(g, j, l, k);
                            const Tensor3& base = B.tensor(d1, d2);
                            for (std::size_t x = 0; x < B.dim(d1); ++x)
                                for (std::size_t y = 0; y < B.dim(d2); ++y)
                                    for (std::size_t m = 0; m < base.dim2(); ++m) {
                                        const Scalar& c = base.at(x, y, m);
                                        if (c == 0) continue;
                                        t.at(off_fg[i][j] + x, off_gl[j][k] + y,
                                             off_fl[i][k] + m) = c;
                                    }
                        }
                    }
                h.structure[{f, g, l}] = std::move(t);
            }
        }

    // local units: identity matrices, i.e. the base unit on each diagonal cell
    for (auto f : indices) {
        const auto& target = p.rows.at(f);
        auto off = offsets(f, f);
        std::vector<Scalar> u(h.dim(f, f), Scalar(0));
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t k = 0; k < B.unit.size(); ++k) u[off[i][i] + k] = B.unit[k];
        h.local_units[f] = std::move(u);
    }
    return h;
}

GeneratorReport generator_heuristic(const BigradedModule& p, const Window& index_window) {
    const auto& G = p.base->group;
    GeneratorReport report;
    std::vector<GroupElement> shifts;
    for (const auto& [g, row] : p.rows) {
        (void)g;
        for (auto s : row) shifts.push_back(s);
    }
    for (auto want : window_elements(G, index_window))
        if (std::find(shifts.begin(), shifts.end(), want) == shifts.end())
            report.missing_shifts.push_back(want);
    report.sufficient = report.missing_shifts.empty();
    return report;
}

InvertibleReport invertible_homogeneous_report(const GradedAlgebra& a) {
    const auto& G = a.group;
    const Field& F = a.field;
    InvertibleReport report;

    for (auto g : window_elements(G, a.window)) {
        InvertibleEntry entry{g, {}};
        GroupElement ginv = G.inv(g);
        if (window_contains(G, a.window, ginv) && a.dim(g) > 0 && a.dim(ginv) > 0) {
            const Tensor3& t_right = a.tensor(g, ginv);   // x * y
            const Tensor3& t_left = a.tensor(ginv, g);    // y * x
            std::size_t de = a.dim(G.identity());
            std::size_t dy = a.dim(ginv);

            auto invertible = [&](const std::vector<Scalar>& x) {
                Mat sys(2 * de, dy);
                for (std::size_t j = 0; j < dy; ++j) {
                    for (std::size_t m = 0; m < de; ++m) {
                        Scalar top = F.zero(), bottom = F.zero();
                        for (std::size_t i = 0; i < x.size(); ++i) {
                            if (x[i] == 0) continue;
                            top = F.add(top, F.mul(x[i], t_right.at(i, j, m)));
                            bottom = F.add(bottom, F.mul(x[i], t_left.at(j, i, m)));
                        }
                        sys.at(m, j) = top;
                        sys.at(de + m, j) = bottom;
                    }
                }
                std::vector<Scalar> rhs = a.unit;
                rhs.insert(rhs.end(), a.unit.begin(), a.unit.end());
                return mat_solve(F, sys, rhs).has_value();
            };

            for (std::size_t i = 0; i < a.dim(g); ++i) {
                std::vector<Scalar> x(a.dim(g), Scalar(0));
                x[i] = Scalar(1);
                if (invertible(x)) entry.invertible.push_back(a.basis.at(g)[i]);
            }
            if (a.dim(g) > 1) {
                std::vector<Scalar> x(a.dim(g), Scalar(1));
                if (invertible(x)) entry.invertible.push_back("(sum)");
            }
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace gtwist
