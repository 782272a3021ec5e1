#pragma once

#include "ellperim/bounds.hpp"
#include "ellperim/lemma.hpp"
#include "ellperim/series.hpp"

#include <string>
#include <vector>

namespace ellperim {

// JSON documents use stable field order; exact values are "p/q" strings and
// extended reals are 25-significant-digit decimal strings.

std::string coefficients_csv(const std::vector<CoefficientRow>& rows);
std::string coefficients_json(const std::vector<CoefficientRow>& rows, int indent = 2);

std::string to_json(const ErrorReport& report, int indent = 2);
std::string to_text(const ErrorReport& report);

std::string to_json(const BoundsQuery& query, int indent = 2);
std::string to_text(const BoundsQuery& query);

std::string to_json(const IvoryCheck& check, int indent = 2);
std::string to_text(const IvoryCheck& check);

std::string to_text(const LemmaCertificate& cert);

}  // namespace ellperim
