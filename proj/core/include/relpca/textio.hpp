#pragma once

#include "relpca/doc.hpp"
#include "relpca/forms.hpp"
#include "relpca/ybe.hpp"

namespace relpca {

// Structure-kind dispatch for `check` and the construction recipes behind
// `construct`; shared between the CLI and the integration tests.

std::vector<std::string> known_kinds();
Conditions check_kind(const AlgebraDoc& doc, const std::string& kind);

std::vector<std::string> known_recipes();
// args: tensor name for "cobound", optional map name for "lift-o-operator".
AlgebraDoc run_recipe(const AlgebraDoc& doc, const std::string& recipe, const std::string& arg);

std::string format_value(const Vec& v, const std::vector<std::string>& basis);
std::string format_conditions_text(const std::string& structure, const Conditions& c,
                                   const std::vector<std::string>& basis);
// Stable machine-readable report:
// {structure, conditions: [{label, passed, witness?}], constructed?}.
std::string format_report_json(const std::string& structure, const Conditions& c,
                               const AlgebraDoc* constructed);

}  // namespace relpca
