#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hsalg/cdga.hpp"
#include "hsalg/jet.hpp"
#include "hsalg/mc.hpp"
#include "hsalg/poisson.hpp"

namespace hsalg {

using Json = nlohmann::ordered_json;

// Scalars serialize as "p/q" strings or {"a":"p/q","b":"p/q","d":5} records.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// Parse "(3+sqrt5)/2", "-1/3", "sqrt5", "9+4*sqrt5" and friends.
Scalar parse_scalar_string(const std::string& text);

Json model_to_json(const FiniteCdga& m);
ModelPtr model_from_json(const Json& j);

Json element_to_json(const GradedElement& e);
GradedElement element_from_json(ModelPtr model, const Json& j);

Json jet_to_json(const JetPoly& f);
JetPoly jet_from_json(const Json& j);
Json field_to_json(const JetVectorField& x);
JetVectorField field_from_json(const Json& j);

/// {"k": jet order, "connection": element or absent, "etas": [elements]}
Json splitting_to_json(const SplittingData& s);
SplittingData splitting_from_json(ModelPtr model, const Json& j);

/// Splitting keys plus {"beta": element, "alphas": [k+1 elements]}
Json symplectic_to_json(const SymplecticData& sd);
SymplecticData symplectic_from_json(ModelPtr model, const Json& j);

Json bivector_to_json(const LaurentBivector& b);
LaurentBivector bivector_from_json(const Json& j);

Json frame_to_json(const FrameData& fd);
FrameData frame_from_json(const Json& j);

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

}  // namespace hsalg
