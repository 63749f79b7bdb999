#pragma once

#include "dbvp/problem.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace dbvp {

/// Problem document schema:
///   { "kind": "dirichlet" | "emden", "T": int, "p": [...], "q": [...],
///     "g": [...], "f": { "name": str, "params": {...} }, "M": real,
///     "alpha": real?, "r": real? }
/// Array lengths are exact: p has T+1 entries for both kinds (1..T+1 Dirichlet,
/// 0..T Emden); q (Emden only) and g have T entries. Violations throw
/// SchemaError naming the field.
Problem parse_problem(const nlohmann::json& doc);
Problem load_problem(const std::string& path);

/// Inverse of parse_problem for builtin-backed problems (round-trip safe).
nlohmann::json problem_to_json(const Problem& prob);

} // namespace dbvp
