#include "gtwist/group.hpp"

#include "gtwist/error.hpp"

#include <algorithm>

namespace gtwist {

GradingGroup GradingGroup::integers() {
    GradingGroup g;
    g.kind_ = GroupKind::integers;
    return g;
}

GradingGroup GradingGroup::finite_unchecked(std::vector<std::string> labels,
                                            std::vector<std::int64_t> table) {
    if (labels.empty()) throw InvalidArgumentError("finite group needs at least one element");
    if (table.size() != labels.size() * labels.size())
        throw InvalidArgumentError("Cayley table size does not match label count");
    GradingGroup g;
    g.kind_ = GroupKind::finite;
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);

    const auto n = static_cast<std::int64_t>(g.labels_.size());
    for (auto v : g.table_)
        if (v < 0 || v >= n) throw InvalidArgumentError("Cayley table entry out of range");

    // best-effort identity and inverses; validate_group reports what is broken
    for (std::int64_t e = 0; e < n; ++e) {
        bool id = true;
        for (std::int64_t i = 0; i < n; ++i)
            if (g.cell(e, i) != i || g.cell(i, e) != i) { id = false; break; }
        if (id) { g.identity_index_ = e; break; }
    }
    g.inverse_.assign(n, -1);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (g.cell(i, j) == g.identity_index_ && g.cell(j, i) == g.identity_index_)
                g.inverse_[i] = j;
    return g;
}

GradingGroup GradingGroup::finite(std::vector<std::string> labels,
                                  std::vector<std::int64_t> table) {
    GradingGroup g = finite_unchecked(std::move(labels), std::move(table));
    GroupReport report = validate_group(g);
    if (!report.ok()) {
        std::string msg = "not a group:";
        for (const auto& v : report.violations) msg += " [" + v + "]";
        throw InvalidArgumentError(msg);
    }
    return g;
}

std::int64_t GradingGroup::cell(std::int64_t i, std::int64_t j) const {
    return table_[static_cast<std::size_t>(i * static_cast<std::int64_t>(labels_.size()) + j)];
}

GroupElement GradingGroup::identity() const {
    return kind_ == GroupKind::integers ? 0 : identity_index_;
}

GroupElement GradingGroup::op(GroupElement f, GroupElement g) const {
    if (kind_ == GroupKind::integers) return f + g;
    if (!contains(f) || !contains(g)) throw InvalidArgumentError("unknown group element");
    return cell(f, g);
}

GroupElement GradingGroup::inv(GroupElement f) const {
    if (kind_ == GroupKind::integers) return -f;
    if (!contains(f)) throw InvalidArgumentError("unknown group element");
    return inverse_[static_cast<std::size_t>(f)];
}

bool GradingGroup::contains(GroupElement f) const {
    if (kind_ == GroupKind::integers) return true;
    return f >= 0 && f < static_cast<std::int64_t>(labels_.size());
}

std::string GradingGroup::format_element(GroupElement f) const {
    if (kind_ == GroupKind::integers) return std::to_string(f);
    if (!contains(f)) throw InvalidArgumentError("unknown group element");
    return labels_[static_cast<std::size_t>(f)];
}

GroupElement GradingGroup::parse_element(const std::string& token) const {
    if (kind_ == GroupKind::integers) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            return v;
        } catch (const std::exception&) {
            throw InvalidArgumentError("bad integer degree '" + token + "'");
        }
    }
    auto it = std::find(labels_.begin(), labels_.end(), token);
    if (it == labels_.end()) throw InvalidArgumentError("unknown element label '" + token + "'");
    return static_cast<GroupElement>(it - labels_.begin());
}

bool GradingGroup::operator==(const GradingGroup& o) const {
    return kind_ == o.kind_ && labels_ == o.labels_ && table_ == o.table_;
}

GroupReport validate_group(const GradingGroup& g) {
    GroupReport report;
    if (g.kind_ == GroupKind::integers) return report;  // built-in group

    const auto n = static_cast<std::int64_t>(g.labels_.size());
    auto name = [&](std::int64_t i) { return g.labels_[static_cast<std::size_t>(i)]; };

    // associativity
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t c = 0; c < n; ++c)
                if (g.cell(g.cell(a, b), c) != g.cell(a, g.cell(b, c)))
                    report.violations.push_back("not associative at (" + name(a) + "," + name(b) +
                                                "," + name(c) + ")");

    // two-sided identity
    std::int64_t identity = -1;
    for (std::int64_t e = 0; e < n && identity < 0; ++e) {
        bool id = true;
        for (std::int64_t i = 0; i < n; ++i)
            if (g.cell(e, i) != i || g.cell(i, e) != i) { id = false; break; }
        if (id) identity = e;
    }
    if (identity < 0) {
        report.violations.push_back("no identity element");
        return report;
    }

    for (std::int64_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::int64_t j = 0; j < n; ++j)
            if (g.cell(i, j) == identity && g.cell(j, i) == identity) has_inverse = true;
        if (!has_inverse) report.violations.push_back("no inverse for " + name(i));
    }
    return report;
}

Window Window::integer_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw EmptyWindowError("[" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    Window w;
    w.lo = lo;
    w.hi = hi;
    return w;
}

Window Window::full() {
    Window w;
    w.whole_group = true;
    return w;
}

bool window_contains(const GradingGroup& g, const Window& w, GroupElement x) {
    if (g.kind() == GroupKind::finite) return g.contains(x);
    if (w.whole_group)
        throw InvalidArgumentError("integer grading requires a bounded window");
    return x >= w.lo && x <= w.hi;
}

void require_degree_window(const GradingGroup& g, const Window& w) {
    if (g.kind() == GroupKind::finite) {
        if (!w.whole_group)
            throw InvalidArgumentError("finite group windows must cover the whole group");
        return;
    }
    if (w.whole_group) throw InvalidArgumentError("integer grading requires a bounded window");
    if (!window_contains(g, w, g.identity()))
        throw OutOfWindowError("degree window must contain the identity degree");
}

std::vector<GroupElement> window_elements(const GradingGroup& g, const Window& w) {
    std::vector<GroupElement> out;
    if (g.kind() == GroupKind::finite) {
        for (std::size_t i = 0; i < g.order(); ++i) out.push_back(static_cast<GroupElement>(i));
        return out;
    }
    if (w.whole_group) throw InvalidArgumentError("integer grading requires a bounded window");
    for (std::int64_t x = w.lo; x <= w.hi; ++x) out.push_back(x);
    return out;
}

Window shift_window(const GradingGroup& g, const Window& index_window) {
    if (g.kind() == GroupKind::finite) return Window::full();
    return Window::integer_range(index_window.lo - index_window.hi,
                                 index_window.hi - index_window.lo);
}

}  // namespace gtwist
