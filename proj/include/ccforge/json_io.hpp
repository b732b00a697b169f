#pragma once

#include "ccforge/bc_theory.hpp"
#include "ccforge/bundle.hpp"
#include "ccforge/series.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace ccforge {

/// Wire format of a graded series:
/// {"generators":[{"name":"c1","weight":1},...],"truncation":8,
///  "terms":[{"exps":[1,0],"coeff":"3/2"},...]}
/// Coefficients are exact "p/q" strings; terms are sorted lexicographically
/// by exponent vector, so serialization is byte-stable.
nlohmann::json series_to_json(const GradedSeries& s);
GradedSeries series_from_json(const nlohmann::json& j);

/// Bundle wire format: {"rank":2,"chern":[<series>,<series>]}.
nlohmann::json bundle_to_json(const FormalBundle& b);
FormalBundle bundle_from_json(const nlohmann::json& j);

/// Dense coefficient list ["-1/4","1/8",...].
nlohmann::json one_var_to_json(const OneVarSeries& s);
OneVarSeries one_var_from_json(const nlohmann::json& j, bool is_polynomial = false);

/// Theory wire format: {"phi":[...],"s_genus":[...],"homogeneous":bool}.
nlohmann::json theory_to_json(const BCTheory& t);
BCTheory theory_from_json(const nlohmann::json& j);

GradedSeries series_from_file(const std::string& path);
FormalBundle bundle_from_file(const std::string& path);
nlohmann::json json_from_file(const std::string& path);

}  // namespace ccforge
