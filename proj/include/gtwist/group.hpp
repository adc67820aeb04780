#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gtwist {

// A group element is an integer degree when the grading group is Z, and an
// index into the label table when the group is finite.
using GroupElement = std::int64_t;

enum class GroupKind { integers, finite };

struct GroupReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

class GradingGroup {
public:
    static GradingGroup integers();
    // Cayley table is row-major: table[i*n + j] = index of labels[i] * labels[j].
    // finite() rejects non-groups; finite_unchecked() keeps them representable
    // so validate_group can report the violated axioms.
    static GradingGroup finite(std::vector<std::string> labels, std::vector<std::int64_t> table);
    static GradingGroup finite_unchecked(std::vector<std::string> labels,
                                         std::vector<std::int64_t> table);

    GroupKind kind() const { return kind_; }
    std::size_t order() const { return labels_.size(); }  // finite groups only
    const std::vector<std::string>& labels() const { return labels_; }

    GroupElement identity() const;
    GroupElement op(GroupElement f, GroupElement g) const;
    GroupElement inv(GroupElement f) const;
    bool contains(GroupElement f) const;

    std::string format_element(GroupElement f) const;
    GroupElement parse_element(const std::string& token) const;

    bool operator==(const GradingGroup& o) const;
    bool operator!=(const GradingGroup& o) const { return !(*this == o); }

private:
    GroupKind kind_ = GroupKind::integers;
    std::vector<std::string> labels_;
    std::vector<std::int64_t> table_;
    std::int64_t identity_index_ = 0;
    std::vector<std::int64_t> inverse_;

    std::int64_t cell(std::int64_t i, std::int64_t j) const;
    friend GroupReport validate_group(const GradingGroup&);
};

// Lists every violated group axiom; empty report iff the table is a group.
GroupReport validate_group(const GradingGroup& g);

// Closed interval of degrees / G-algebra indices.  For finite groups the
// window is always the whole group.
struct Window {
    bool whole_group = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    static Window integer_range(std::int64_t lo, std::int64_t hi);  // throws EmptyWindowError
    static Window full();

    bool operator==(const Window& o) const {
        return whole_group == o.whole_group && (whole_group || (lo == o.lo && hi == o.hi));
    }
    bool operator!=(const Window& o) const { return !(*this == o); }
};

bool window_contains(const GradingGroup& g, const Window& w, GroupElement x);

// Degree windows additionally contain the identity degree.
void require_degree_window(const GradingGroup& g, const Window& w);

// All window members in canonical (ascending / table) order.
std::vector<GroupElement> window_elements(const GradingGroup& g, const Window& w);

// For Z, the interval of shifts d with (I + d) meeting I, i.e. [lo-hi, hi-lo];
// for finite groups, the whole group.  This is the span on which principal
// map families are materialized.
Window shift_window(const GradingGroup& g, const Window& index_window);

}  // namespace gtwist
