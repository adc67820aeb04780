#pragma once

#include "gtwist/group.hpp"
#include "gtwist/matrix.hpp"
#include "gtwist/report.hpp"
#include "gtwist/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gtwist {

// Monomial presentation behind a builder algebra: which generator powers
// (and which direct summand) each basis vector stands for.  Lets callers
// construct generator-scaling automorphisms without re-parsing labels.
struct MonomialInfo {
    std::vector<std::string> generators;
    struct Entry {
        std::size_t summand = 0;
        std::vector<std::int64_t> exponents;  // one per generator
    };
    std::map<GroupElement, std::vector<Entry>> basis;

    bool operator==(const MonomialInfo& o) const {
        if (generators != o.generators || basis.size() != o.basis.size()) return false;
        auto it = o.basis.begin();
        for (const auto& [deg, entries] : basis) {
            if (it->first != deg || entries.size() != it->second.size()) return false;
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (entries[i].summand != it->second[i].summand ||
                    entries[i].exponents != it->second[i].exponents)
                    return false;
            ++it;
        }
        return true;
    }
};

// G-graded algebra presented by per-degree bases and structure-constant
// tensors on a degree window.  structure holds a tensor for every pair
// (g, h) with g, h, gh all in the window (zero-dimension tensors included).
struct GradedAlgebra {
    Field field;
    GradingGroup group;
    Window window;
    std::map<GroupElement, std::vector<std::string>> basis;  // degree -> labels; every window degree
    std::map<std::pair<GroupElement, GroupElement>, Tensor3> structure;
    std::vector<Scalar> unit;  // coordinates in A_e
    std::optional<MonomialInfo> monomials;

    std::size_t dim(GroupElement g) const;  // throws OutOfWindowError off-window
    const Tensor3& tensor(GroupElement g, GroupElement h) const;
    bool has_degree(GroupElement g) const;
};

bool algebra_equal(const GradedAlgebra& a, const GradedAlgebra& b);  // ignores monomial info

// Same structure maps, dims and labels; the acceptance notion of "equal
// structure tensors in canonical bases".
bool structure_equal(const GradedAlgebra& a, const GradedAlgebra& b);

struct HomogeneousElement {
    GroupElement degree;
    std::vector<Scalar> coords;
};

// k-linear map between graded algebras, graded of (left) degree `shift`:
// the block at degree g maps A_g into B_{shift*g}.
struct GradedLinearMap {
    std::shared_ptr<const GradedAlgebra> source;
    std::shared_ptr<const GradedAlgebra> target;
    GroupElement shift = 0;
    std::map<GroupElement, Mat> blocks;  // keyed by source degree; zero-size blocks omitted

    const Mat& block(GroupElement g) const;  // throws MissingComponentError
    bool has_block(GroupElement g) const { return blocks.count(g) != 0; }
};

GradedLinearMap identity_map(std::shared_ptr<const GradedAlgebra> a);

// Degree-preserving map scaling each monomial basis vector by the product of
// per-generator factors (requires the builder's monomial info).
GradedLinearMap generator_scaling_map(std::shared_ptr<const GradedAlgebra> a,
                                      const std::vector<Scalar>& factors);

// ---- operations ----

ValidationReport validate_algebra(const GradedAlgebra& a);

HomogeneousElement multiply(const GradedAlgebra& a, const HomogeneousElement& x,
                            const HomogeneousElement& y);

HomogeneousElement apply_graded_map(const GradedLinearMap& phi, const HomogeneousElement& x);

// Composition phi2 after phi1 (shifts compose on the left).
GradedLinearMap compose_maps(const GradedLinearMap& phi2, const GradedLinearMap& phi1);
GradedLinearMap inverse_map(const GradedLinearMap& phi);  // throws SingularBlockError

// True iff phi (degree shift e, source window == target window) is
// multiplicative, unit-preserving and blockwise invertible on-window.
CheckResult check_graded_iso(const GradedAlgebra& a, const GradedAlgebra& b,
                             const GradedLinearMap& phi);
CheckResult check_algebra_automorphism(const GradedAlgebra& a, const GradedLinearMap& phi);

// ---- builders ----

GradedAlgebra build_polynomial_ring(const Field& f,
                                    const std::vector<std::pair<std::string, std::int64_t>>& gens,
                                    const Window& w);
GradedAlgebra build_laurent_ring(const Field& f, const std::string& var,
                                 std::int64_t generator_degree, const Window& w);
GradedAlgebra build_direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);
// 2x2 pattern over k[x^2, x^-2]: diagonal matrix units at even degrees,
// antidiagonal at odd degrees; dimension 2 in every degree.
GradedAlgebra build_matrix_example(const Field& f, const Window& w);
GradedAlgebra build_group_algebra(const Field& f, const GradingGroup& g);

// Canonical element/pair strings used in witnesses: "(1,x)" etc.
std::string format_element_ref(const GradingGroup& g, GroupElement deg, const std::string& label);

}  // namespace gtwist
