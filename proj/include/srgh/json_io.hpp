#pragma once

#include <json.hpp>

#include "srgh/audit.hpp"
#include "srgh/classify.hpp"

namespace srgh {

using Json = nlohmann::ordered_json;

// Scalars are serialized as exact decimal strings ("p" or "p/q"), quadratic
// elements as {"a", "b", "d"} with d the squarefree discriminant.
Json to_json(const QuadExt& x);
QuadExt quadext_from_json(const Json& j);

Json to_json(const SrgParams& p);
Json to_json(const CoreWeights& w);
CoreWeights weights_from_json(const Json& j);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const GramOutcome& g);
Json to_json(const SpectralOutcome& s);
Json to_json(const FeasibilityResult& f);
Json to_json(const CandidateSolution& c);
Json to_json(const ClassificationReport& r);
Json to_json(const ScanResult& s);
Json to_json(const AuditResult& a);
Json to_json(const SturmChain& c);
Json to_json(const RatPoly& p);
RatPoly poly_from_json(const Json& j);

/**
 * Certificate envelope around a verification result. Everything except the
 * timestamp is a pure function of the inputs.
 */
Json certificate(const std::string& kind, const Json& inputs, const Json& result);

}  // namespace srgh
