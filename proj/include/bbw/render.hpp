#pragma once

#include "bbw/bbw.hpp"
#include "bbw/resolution.hpp"
#include "bbw/tensor.hpp"
#include "bbw/verify.hpp"

#include <json.hpp>

#include <string>

namespace bbw {

/* JSON renderings; keys inside objects are emitted in sorted order.
 * Schemas:
 *   GradedRepList   [{"degree": int, "mult": int, "rep": str}, ...]
 *   SchurSum        {"<diagram>": mult, ...}
 *   Resolution      [{"summands": [{"shape": str, "sign": "+"|"-"|""}], "t": int}, ...]
 *   ExtTable        {"indeterminate": bool, "total": {"<degree>": mult, ...}}
 *   CriterionReport {"N", "cases", "genus", "indeterminate", "k", "pass", "verdict"}
 */
nlohmann::json to_json(const GradedRepList& list);
nlohmann::json to_json(const SchurSum& sum);
nlohmann::json to_json(const Resolution& resolution);
nlohmann::json to_json(const ExtTable& table);
nlohmann::json to_json(const CriterionReport& report);

/* ASCII renderings (no trailing newline).  An acyclic complex or empty list
 * renders as "0". */
std::string render_text(const GradedRepList& list);
std::string render_text(const SchurSum& sum);
std::string render_text(const Resolution& resolution);
std::string render_text(const ExtTable& table);
std::string render_text(const CriterionReport& report);

// "S+", "S-", "S"
std::string spinor_token(int sign);

// "O", "O(-c)" for the full-height rectangle (c^rank), else "Sigma^(...) Uperp"
std::string bundle_token(const YoungDiagram& shape, long long rank);

}  // namespace bbw
