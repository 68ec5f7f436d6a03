// Machine verification of the algebraic identities, organized as suites that
// sweep every basis element (or tuple of them) up to a degree bound and
// report the first counterexample per axiom.
//
// Axiom names accepted by the filter:
//   coassoc, counit, assoc, bialg, unit, antipode   (algebra/coalgebra laws)
//   connection, module, coaction, compat            (connection laws)
//   diamond                                         (index-map square)
//
// An empty axiom filter runs everything applicable.  With sample > 0 each
// sweep draws that many tuples pseudo-randomly (seeded) instead of being
// exhaustive.

#pragma once

#include "coalg/instances.hpp"
#include "coalg/operad.hpp"

#include <string>
#include <vector>

namespace coalg {

struct CheckFailure {
    std::string axiom;
    int degree = 0;
    std::string witness;
};

struct VerifyOptions {
    int max_degree = 3;
    std::vector<std::string> axioms;  // empty = all
    unsigned long long seed = 0;
    int sample = 0;  // 0 = exhaustive
};

/// Dispatch on an algebra id: base names, composite names (which also check
/// every attached connection), connection names, "deltasym", or "diamond".
/// Throws std::invalid_argument for unknown ids or unknown axiom names.
std::vector<CheckFailure> verify_algebra(const std::string& id, const VerifyOptions& opts);

std::vector<CheckFailure> verify_base(Alg a, const VerifyOptions& opts);
std::vector<CheckFailure> verify_composite_coalgebra(CompId id, const VerifyOptions& opts);
std::vector<CheckFailure> verify_connection(const Connection& c, const VerifyOptions& opts);
std::vector<CheckFailure> verify_faces(const VerifyOptions& opts);

/// The twelve componentwise index maps between the nine composites are
/// coalgebra maps and the mixed squares commute.
std::vector<CheckFailure> verify_diamond(int max_degree);

/// Word realization: round trip, grading, and the coproduct intertwiner.
std::vector<CheckFailure> verify_cofree(CompId id, int max_degree);

/// Operad-induced product agrees with the direct product; operadic
/// composition is a coalgebra map.
std::vector<CheckFailure> verify_operad_alg(Alg a, int max_degree);

/// The boundary-point map is a coalgebra isomorphism and a product
/// anti-isomorphism onto the composition instance with its fr product.
std::vector<CheckFailure> verify_alpha(int max_degree);

}  // namespace coalg
