#pragma once

#include "gtwist/endo.hpp"
#include "gtwist/fixtures.hpp"
#include "gtwist/g_algebra.hpp"
#include "gtwist/graded_algebra.hpp"
#include "gtwist/twisting.hpp"

#include <map>
#include <memory>
#include <string>

namespace gtwist {

// In-memory form of a fixture file: one field and group, then named objects.
// Cross references (assoc, on, from/to, base) are names of objects in the
// same file.
struct FixtureFile {
    Field field;
    GradingGroup group;
    std::map<std::string, std::shared_ptr<const GradedAlgebra>> algebras;
    std::map<std::string, std::shared_ptr<const GAlgebraWindow>> g_algebras;
    std::map<std::string, TwistingSystem> twists;
    std::map<std::string, PrincipalMap> principals;
    std::map<std::string, GAlgebraMorphism> morphisms;
    std::map<std::string, BigradedModule> modules;
};

bool file_equal(const FixtureFile& a, const FixtureFile& b);

// Total parse with line/column diagnostics (ParseError).  Accepts the
// sigma-power twist form and the generator principal form and expands them.
FixtureFile parse_fixture_file(const std::string& text);

// Canonical text: fixed section order, sorted keys, normalized scalars,
// sparse nonzero structure entries.  parse(serialize(parse(t))) == parse(t).
std::string serialize_fixture_file(const FixtureFile& f);

// Merge several parsed files (same field and group; distinct names).
FixtureFile merge_files(std::vector<FixtureFile> files);

FixtureFile bundle_to_file(const FixtureBundle& b);

}  // namespace gtwist
