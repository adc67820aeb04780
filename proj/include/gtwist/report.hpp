#pragma once

#include "gtwist/group.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gtwist {

// Axiom sweep over a window.  Violations are canonical strings, ordered by
// the lexicographically first witnessing tuple; skipped counts triples whose
// partial or full products leave the window and so cannot be checked.
struct ValidationReport {
    std::vector<std::string> violations;
    std::size_t skipped = 0;
    bool ok() const { return violations.empty(); }
};

// Outcome of a verification: ok, or the canonical first failing witness.
struct CheckResult {
    bool ok = true;
    std::string witness;
    std::size_t skipped = 0;

    static CheckResult pass(std::size_t skipped = 0) { return {true, "", skipped}; }
    static CheckResult fail(std::string witness, std::size_t skipped = 0) {
        return {false, std::move(witness), skipped};
    }
};

using ComponentKey = std::pair<GroupElement, GroupElement>;

// Dimension obstruction to principality: component pairs (h,l) vs (gh,gl)
// with unequal dimensions.  Nonempty entries for some g certify, on-window,
// that no principal map exists.
struct DimObstructionEntry {
    GroupElement shift;
    ComponentKey from;
    ComponentKey to;
    std::size_t dim_from;
    std::size_t dim_to;

    bool operator==(const DimObstructionEntry& o) const {
        return shift == o.shift && from == o.from && to == o.to && dim_from == o.dim_from &&
               dim_to == o.dim_to;
    }
};

struct DimObstructionReport {
    std::vector<DimObstructionEntry> entries;  // sorted by (shift, from)
    bool empty() const { return entries.empty(); }
    bool has_pair(GroupElement shift, ComponentKey from, ComponentKey to) const {
        for (const auto& e : entries)
            if (e.shift == shift && e.from == from && e.to == to) return true;
        return false;
    }
};

// Sufficient-only generator check: SUFFICIENT when every index-window
// element occurs among the row shifts, otherwise INCONCLUSIVE.
struct GeneratorReport {
    bool sufficient = false;
    std::vector<GroupElement> missing_shifts;
};

// Per-degree list of tested elements that have a two-sided inverse inside
// the window.  Candidates are the basis vectors and the all-ones sum.
struct InvertibleEntry {
    GroupElement degree;
    std::vector<std::string> invertible;  // basis labels, plus "(sum)" for the basis sum
};

struct InvertibleReport {
    std::vector<InvertibleEntry> entries;  // one per on-window degree, ascending
    std::vector<GroupElement> degrees_with_invertibles() const {
        std::vector<GroupElement> out;
        for (const auto& e : entries)
            if (!e.invertible.empty()) out.push_back(e.degree);
        return out;
    }
};

}  // namespace gtwist
