#pragma once

#include "gtwist/g_algebra.hpp"
#include "gtwist/graded_algebra.hpp"
#include "gtwist/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace gtwist {

// Bigraded module with free rows: row g is the finite direct sum of shifted
// copies B<s_g(1)> + ... + B<s_g(r_g)> of the base algebra.
struct BigradedModule {
    std::shared_ptr<const GradedAlgebra> base;
    std::map<GroupElement, std::vector<GroupElement>> rows;
};

// hom_B(B<a>, B<b>) is B in degree b^-1 a (integers: a - b).  dim is absent
// when that degree leaves the base window (dimension-unknown, not zero).
struct HomShiftComponent {
    GroupElement degree;
    std::optional<std::size_t> dim;
};

HomShiftComponent hom_shift_component(const GradedAlgebra& b, GroupElement a, GroupElement b_shift);

// Endomorphism G-algebra of P on an index window: component (f,g) is
// hom(P_{g*}, P_{f*}), a matrix of base-algebra degree components with
// multiplication by matrix product over the base.  Components with any cell
// of unknown dimension are marked absent; an unknown diagonal cell is fatal
// since the local unit cannot be built.
GAlgebraWindow endo_g_algebra(const BigradedModule& p, const Window& index_window);

// SUFFICIENT when every index-window element occurs among the row shifts;
// otherwise INCONCLUSIVE with the missing ones.  Never claims "not a
// generator".
GeneratorReport generator_heuristic(const BigradedModule& p, const Window& index_window);

// For each on-window degree, the tested elements with a two-sided inverse
// inside the window.  Tested: every basis vector, and the all-ones sum when
// the component has dimension > 1.
InvertibleReport invertible_homogeneous_report(const GradedAlgebra& a);

}  // namespace gtwist
