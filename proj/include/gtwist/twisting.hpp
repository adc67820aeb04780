#pragma once

#include "gtwist/g_algebra.hpp"
#include "gtwist/graded_algebra.hpp"

#include <map>
#include <memory>

namespace gtwist {

// Twisting system on a graded algebra: a family of degree-preserving
// k-linear bijections tau_g satisfying tau_g(y tau_h(z)) = tau_g(y)
// tau_{gh}(z).  The family is indexed by the carrier's degree window; the
// block of tau_g at degree h is stored iff g, h, gh all lie in the window
// and dim A_h > 0.
struct TwistingSystem {
    std::shared_ptr<const GradedAlgebra> carrier;
    std::map<GroupElement, std::map<GroupElement, Mat>> family;

    static TwistingSystem identity(std::shared_ptr<const GradedAlgebra> a);
    // tau_n = sigma^n for a degree-preserving map sigma; integer grading only.
    static TwistingSystem sigma_powers(std::shared_ptr<const GradedAlgebra> a,
                                       const GradedLinearMap& sigma);
    static TwistingSystem from_family(std::shared_ptr<const GradedAlgebra> a,
                                      std::map<GroupElement, std::map<GroupElement, Mat>> family);

    bool has_block(GroupElement g, GroupElement degree) const;
    const Mat& block(GroupElement g, GroupElement degree) const;
};

bool twisting_equal(const TwistingSystem& a, const TwistingSystem& b);
bool principal_equal(const PrincipalMap& a, const PrincipalMap& b);

// Blockwise invertibility plus the twisting relation on every in-window
// triple; skips (and counts) triples whose products or indices leave the
// window.  Throws MissingComponentError when a required family block is
// absent.
CheckResult verify_twisting_system(const GradedAlgebra& a, const TwistingSystem& tau);

// The twisted algebra A^tau: same graded k-module, product x * y = x tau_g(y)
// for x of degree g.  Verifies tau first.
GradedAlgebra zhang_twist(const GradedAlgebra& a, const TwistingSystem& tau);

// tau_g = S_g^-1 T_g restricted to the e-row.  The carrier of t must be the
// right associated G-algebra of its source algebra, on an index window equal
// to the degree window.
TwistingSystem delta(const PrincipalMap& t);

// Inverse construction: Gamma(tau)_g acts on R_{h,l} by S_{gh} (tau_{gh}
// tau_h^-1) S_h^-1.  Returns a principal map on a freshly built associated
// G-algebra of the carrier.
PrincipalMap gamma(const TwistingSystem& tau);

// The derived identity tau_h^-1(a b) = tau_h^-1(a) . tau_m tau_{hm}^-1(b)
// for a of degree m; independent of eq-twist1 for arbitrary families.
CheckResult check_inverse_twist_relation(const GradedAlgebra& a, const TwistingSystem& tau);

// Constructive direction of the equivalence theorem: from a certified
// G-algebra iso alpha: assoc(A) -> assoc(B), produce the transported
// principal map, the twisting system tau on B, the twisted algebra B^tau and
// a re-certified degree-preserving iso A -> B^tau.
struct TwistEquivalence {
    PrincipalMap transported;
    TwistingSystem tau;
    GradedAlgebra twisted;
    GradedLinearMap iso;
    CheckResult certificate;
};

TwistEquivalence twist_equivalence_from_iso(const GAlgebraMorphism& alpha);

}  // namespace gtwist
