#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "shiftpoly/compiler.hpp"
#include "shiftpoly/dimension_one.hpp"
#include "shiftpoly/geometry.hpp"
#include "shiftpoly/invariance.hpp"
#include "shiftpoly/patterns.hpp"
#include "shiftpoly/sft.hpp"
#include "shiftpoly/substitution.hpp"
#include "shiftpoly/tower.hpp"

// JSON forms for every artifact the command-line tool reads or writes.
// Rationals are always strings "p/q" (canonical sign on the numerator, "/q"
// omitted for integers); symbols appear as their alphabet strings.  Emission
// is deterministic: object keys are sorted and dump_json pins the layout, so
// identical data gives identical bytes.

namespace shiftpoly {

using Json = nlohmann::json;

/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

// {"d":…, "cells":[[ints]], "values":["sym",…]}
Json pattern_json(const Pattern& a, const Alphabet& alphabet);
Pattern parse_pattern(const Json& j, const Alphabet& alphabet);

// {"dim":…, "eq":[[dim coeffs…, rhs]], "ineq":[[…]]}, all strings
Json hpolytope_json(const HPolytope& H);
HPolytope parse_hpolytope(const Json& j);

// {"dim":…, "vertices":[["p/q",…]]}
Json vpolytope_json(const VPolytope& V);
VPolytope parse_vpolytope(const Json& j);

// Measure on the window patterns: {"d","n","values":["p/q",…]}
Json measure_json(const MeasureVector& mu);
MeasureVector parse_measure(const Json& j, const Alphabet& alphabet, const Caps& caps = {});

// Audit list [{"E":[[cells]], "a":pattern, "u":[ints], "lhs":[…], "rhs":[…]}]
Json constraints_json(const std::vector<InvarianceConstraint>& cs, const Alphabet& alphabet);

// {"states":[["sym",…]], "P":[["p/q",…]], "pi":["p/q",…]}
Json chain_json(const MarkovChain& chain);
MarkovChain parse_chain(const Json& j, const Alphabet& alphabet);

// Vertex/orbit pairing report; orbits as symbol-string words.
Json classify_json(const ClassifyReport& report, const Alphabet& alphabet);

// [{"k":…, "vertices":…, "equal_to_previous":bool}]
Json refinement_json(const std::vector<RefinementRow>& rows);

// {"d":…, "patterns":[pattern,…]}
Json forbidden_json(const ForbiddenSet& L, const Alphabet& alphabet);
ForbiddenSet parse_forbidden(const Json& j, const Alphabet& alphabet);

// {"symbols":…, "levels":[vpolytope,…]}
Json polytope_chain_json(const PolytopeChain& chain);
PolytopeChain parse_polytope_chain(const Json& j);

// {"N":…, "words":[[ints],…]} (symbols 1-based)
Json language_json(const WordLanguage& lang);
WordLanguage parse_language(const Json& j);

// {"types":["name",…], "M":[[ints]]}
Json substitution_json(const SubstitutionSystem& S);
SubstitutionSystem parse_substitution(const Json& j);

// {"exact":"(p+q*sqrt(D))/r", "decimal":"…"} to 15 digits
Json quadratic_json(const QuadraticNumber& x);

// Frequency data: exact mode lists per-type values, interval mode the bounds.
Json perron_json(const PerronResult& P, const SubstitutionSystem& S);

}  // namespace shiftpoly
