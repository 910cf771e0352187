#pragma once

#include <json.hpp>
#include <variant>

#include "niep/classify.hpp"
#include "niep/conditions.hpp"
#include "niep/families.hpp"
#include "niep/matrix.hpp"
#include "niep/meehan.hpp"
#include "niep/numeric.hpp"
#include "niep/poly.hpp"
#include "niep/roots.hpp"
#include "niep/spectrum.hpp"
#include "niep/threshold.hpp"
#include "niep/verify.hpp"

namespace niep {

using json = nlohmann::json;
using MatrixAny = std::variant<MatrixQ, MatrixQuad>;

/// 17-significant-digit decimal string for numeric (double) fields.
std::string double_str(double v);

json to_json(const Rational& r);
json to_json(const QuadExt& q);
json to_json(const Poly& p);
json to_json(const Spectrum& sp);
json to_json(const MatrixQ& m);
json to_json(const MatrixQuad& m);
json to_json(const MatrixAny& m);
json to_json(const IsolatingInterval& iv);
json to_json(const ConditionReport& rep);
json to_json(const Bipartition& bp);
json to_json(const Certificate& cert);
json to_json(const Verdict& v);
json to_json(const Classification& cls);
json to_json(const VerificationReport& rep);
json to_json(const JordanReport& rep);
json to_json(const ThresholdResult& res);
json to_json(const FitResult& res);
json to_json(const SignPattern& sp);
json to_json(const ExtremeAuditRecord& rec);

Rational rational_from_json(const json& j);
QuadExt quadext_from_json(const json& j);
Poly poly_from_json(const json& j);
Spectrum spectrum_from_json(const json& j);
MatrixAny matrix_from_json(const json& j);

}  // namespace niep
