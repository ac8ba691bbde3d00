#pragma once

#include "json.hpp"

#include "fermat/classify.hpp"
#include "fermat/search.hpp"

namespace fermat {

// Machine-readable renderings. The JSON schema is documented in the README;
// verdicts are identical to the text renderings by construction (both read
// the same report objects).

nlohmann::json to_json(const SplittingType& t);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const DegreeVerdict& v);
nlohmann::json to_json(const RefutationTrace& t);
nlohmann::json to_json(const SearchSummary& s);

std::string to_text(const ClassificationReport& r);
std::string to_text(const DegreeVerdict& v);
std::string to_text(const RefutationTrace& t);
std::string to_text(const SearchSummary& s);

} // namespace fermat
