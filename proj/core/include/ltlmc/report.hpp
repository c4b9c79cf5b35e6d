#pragma once

#include "ltlmc/checker.hpp"
#include "ltlmc/claimchain.hpp"
#include "ltlmc/trace.hpp"

#include <string>

#include <nlohmann/json.hpp>

// Machine-readable reports. Field names are stable:
//   {"model", "name", "spec", "mode", "verdict", "vacuous",
//    "counterexample": {"prefix": [...], "cycle": [...]} | null,
//    "stats": {"product_states", "elapsed_seconds"}}
// where each state is an object mapping variable names to values.
namespace ltlmc::report
{

nlohmann::json to_json( const state& s );
nlohmann::json to_json( const lasso& w );

nlohmann::json check_report( const std::string& model_name, const std::string& name, const ltl::formula& spec,
                             checker::check_mode mode, const checker::verdict& v );

// {"model", "mode", "pass", "expected": [...], "specs": [check reports]}
nlohmann::json suite_report( const claimchain::suite_report& report );

// Text rendering of a lasso, one indented state per line.
std::string render_lasso( const lasso& w, const std::string& indent );

// The verdict table: one row per spec with verdict symbol and seconds,
// followed by PASS or FAIL against the expected verdicts.
std::string render_suite( const claimchain::suite_report& report );

} // namespace ltlmc::report
