#pragma once

#include "gtwist/graded_algebra.hpp"
#include "gtwist/group.hpp"
#include "gtwist/matrix.hpp"
#include "gtwist/report.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gtwist {

// G-algebra on a finite index window: components R_{f,g} with matrix-style
// multiplication R_{f,g} R_{g,h} -> R_{f,h} and local units 1_f in R_{f,f}.
//
// Components can be absent (the data needed to define them leaves the
// window of whatever they were built from); absent is distinct from
// present-with-dimension-0, and operations touching an absent component
// raise OutOfWindowError.
struct GAlgebraWindow {
    Field field;
    GradingGroup group;
    Window index_window;
    std::map<ComponentKey, std::vector<std::string>> components;  // labels of present components
    std::map<std::array<GroupElement, 3>, Tensor3> structure;     // (f,g,h), all three present
    std::map<GroupElement, std::vector<Scalar>> local_units;
    // identification R_{f,g} = A_{f^-1 g} (right) or A_{f g^-1} (left),
    // carried by the associated constructions
    struct Assoc {
        bool right = true;
        std::shared_ptr<const GradedAlgebra> algebra;
    };
    std::optional<Assoc> assoc;

    bool present(GroupElement f, GroupElement g) const { return components.count({f, g}) != 0; }
    std::size_t dim(GroupElement f, GroupElement g) const;  // throws OutOfWindowError if absent
    const std::vector<std::string>& labels(GroupElement f, GroupElement g) const;
    const Tensor3& tensor(GroupElement f, GroupElement g, GroupElement h) const;
    const std::vector<Scalar>& unit(GroupElement f) const;
};

bool g_algebra_equal(const GAlgebraWindow& a, const GAlgebraWindow& b);

// Element of a single component R_{f,g}.
struct GAlgebraElement {
    GroupElement row;
    GroupElement col;
    std::vector<Scalar> coords;
};

GAlgebraElement ga_multiply(const GAlgebraWindow& r, const GAlgebraElement& x,
                            const GAlgebraElement& y);

// Family of maps T_g of left degree g: the block at (h,l) carries R_{h,l}
// to R_{gh,gl}.  For integer gradings the family is materialized from a
// single degree-1 generator as its powers.
struct PrincipalMap {
    std::shared_ptr<const GAlgebraWindow> carrier;
    Window family_window;                                      // shifts g with T_g stored
    std::map<GroupElement, std::map<ComponentKey, Mat>> family;  // zero-size blocks omitted

    static PrincipalMap from_family(std::shared_ptr<const GAlgebraWindow> carrier,
                                    Window family_window,
                                    std::map<GroupElement, std::map<ComponentKey, Mat>> family);
    // integer grading only: T_n = T_1^n on the full shift window
    static PrincipalMap from_generator(std::shared_ptr<const GAlgebraWindow> carrier,
                                       const std::map<ComponentKey, Mat>& degree_one_blocks);

    bool has_block(GroupElement g, ComponentKey key) const;
    const Mat& block(GroupElement g, ComponentKey key) const;  // throws MissingComponentError
};

// Degree-preserving blockwise map between G-algebras on the same window.
struct GAlgebraMorphism {
    std::shared_ptr<const GAlgebraWindow> source;
    std::shared_ptr<const GAlgebraWindow> target;
    std::map<ComponentKey, Mat> blocks;  // zero-size blocks omitted

    const Mat& block(ComponentKey key) const;
    bool has_block(ComponentKey key) const { return blocks.count(key) != 0; }
};

GAlgebraMorphism identity_morphism(std::shared_ptr<const GAlgebraWindow> r);
GAlgebraMorphism inverse_morphism(const GAlgebraMorphism& phi);  // throws SingularBlockError

// ---- operations ----

// The right associated G-algebra: component (f,g) holds A_{f^-1 g}, present
// iff that degree lies in A's window; local units are A's unit.
GAlgebraWindow associated_g_algebra(std::shared_ptr<const GradedAlgebra> a,
                                    const Window& index_window);

// Left variant: component (f,g) holds A_{f g^-1}.
GAlgebraWindow associated_left_g_algebra(std::shared_ptr<const GradedAlgebra> a,
                                         const Window& index_window);

// Local-unit laws and associativity on all composable in-window triples.
ValidationReport validate_g_algebra(const GAlgebraWindow& r);

// The canonical principal map S: identity blocks under the identification
// R_{h,l} = A_{h^-1 l} = R_{gh,gl}.  Requires the associated identification.
PrincipalMap canonical_principal_map(std::shared_ptr<const GAlgebraWindow> r);

// Multiplicativity, unit transport 1_h -> 1_{gh}, blockwise invertibility
// and the composition law T_g T_h = T_{gh}, each on every in-window
// instance; the canonical first failure is the witness.
CheckResult verify_principal_map(const GAlgebraWindow& r, const PrincipalMap& t);

// Compression R^T: degree-g part R_{e,g}, product x o y = x . T_g(y).
// Verifies t and throws UnverifiedPrincipalMapError on failure.
GradedAlgebra compress(const GAlgebraWindow& r, const PrincipalMap& t);

// Blockwise invertible + multiplicative + unit-preserving check.
CheckResult check_g_algebra_iso(const GAlgebraWindow& r, const GAlgebraWindow& s,
                                const GAlgebraMorphism& phi);

// T_g = phi S_g phi^-1 transported along a (certified) morphism out of an
// associated G-algebra.  Throws UncertifiedIsoError if phi fails the iso
// check and NotAssociatedError if the source has no canonical map.
PrincipalMap conjugate_canonical_map(const GAlgebraMorphism& phi);

// For every shift g, the component pairs (h,l) vs (gh,gl) whose dimensions
// differ.  Entries at any g certify on-window that no principal map exists.
DimObstructionReport principal_dimension_obstruction(const GAlgebraWindow& r);

// Componentwise direct sum (cross products zero, units concatenated).
GAlgebraWindow g_algebra_direct_sum(const GAlgebraWindow& a, const GAlgebraWindow& b);

std::string format_component(const GradingGroup& g, ComponentKey key);

}  // namespace gtwist
