#pragma once

#include <nlohmann/json.hpp>

#include "abelscope/gamma.hpp"
#include "abelscope/homology.hpp"
#include "abelscope/liealg.hpp"
#include "abelscope/linalg.hpp"
#include "abelscope/marked.hpp"

// JSON forms of the core types. Rationals are "num/den" strings; keys are
// emitted in a fixed order so identical values serialize byte-identically.
// Parsers throw InputError on schema violations.

namespace abelscope {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& x);
/// Accepts "a/b", "a", or a JSON integer.
Rat rat_from_json(const Json& j);

Json matrix_to_json(const QMat& m);
QMat matrix_from_json(const Json& j);

Json weight_to_json(const Weight& w);

/// {"dim", "rank", "labels", "weights", "brackets": [[i, j, [["c", k], ...]], ...]}
Json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const Json& j);

/// Sparse degree-d vector keyed by wedge labels, e.g. {"e02^e24": "1/1"}.
Json wedge_vector_to_json(const LieAlgebra& L, std::size_t degree, const Vec& v);

/// {"sl2": [a,b,c,d], "n2", "n3", "u": {"02": "num/den", ...}}
Json gamma_to_json(const GammaElt& g);
/// Also validates the element against params.
GammaElt gamma_from_json(const GroupParams& params, const Json& j);

/// {"condition1": {"pass", "offending_pair"?}, "condition2": {"pass", "h2_weight0_dim"}, "finitely_presented"}
Json verdict_to_json(const AbelsVerdict& v);

/// {"radius", "vertices", "edges": [[src, gen, dst], ...], "depths"}
Json ball_to_json(const BallGraph& b);

}  // namespace abelscope
