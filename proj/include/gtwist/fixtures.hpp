#pragma once

#include "gtwist/endo.hpp"
#include "gtwist/g_algebra.hpp"
#include "gtwist/graded_algebra.hpp"
#include "gtwist/twisting.hpp"

#include <map>
#include <memory>
#include <string>

namespace gtwist {

// A named, fully re-verified collection of worked-example objects together
// with their expected reports.  Construction validates every contained
// object from scratch; goldens are produced by the independent oracles
// (hom-shift dimension sums, frozen dimension patterns), not by the
// operations under test.
struct FixtureBundle {
    std::string name;
    Field field;
    GradingGroup group;
    Window window;

    std::map<std::string, std::shared_ptr<const GradedAlgebra>> algebras;
    std::map<std::string, std::shared_ptr<const GAlgebraWindow>> g_algebras;
    std::map<std::string, TwistingSystem> twists;
    std::map<std::string, PrincipalMap> principal_maps;
    std::map<std::string, GAlgebraMorphism> morphisms;
    std::map<std::string, BigradedModule> modules;

    // goldens for the bundle's central G-algebra (when it has one)
    std::map<ComponentKey, std::size_t> expected_dims;
    DimObstructionReport expected_obstruction;
};

// Names: not-principal, eg2, zhang-matrix-pair, q-plane.
// The window is the governing index window (degree window for q-plane).
FixtureBundle fixture(const std::string& name, const Field& f, const Window& window);

// 2x2 exchange morphism between the associated G-algebras of the Laurent
// pair: identity blocks at even row index, swap blocks at odd.  Direction is
// assoc(B) -> assoc(A) for B the Laurent direct sum and A the matrix form.
GAlgebraMorphism matrix_pair_morphism(std::shared_ptr<const GAlgebraWindow> b_bar,
                                      std::shared_ptr<const GAlgebraWindow> a_bar);

}  // namespace gtwist
