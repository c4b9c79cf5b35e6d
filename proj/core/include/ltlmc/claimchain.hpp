#pragma once

#include "ltlmc/checker.hpp"
#include "ltlmc/kripke.hpp"
#include "ltlmc/ltl.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

// Built-in model of the ClaimChain insurance-claim workflow: a claim is
// issued, signed by the client, endorsed by peers per the endorsement
// policy (or dropped when the policy is not met), evaluated by the fraud
// model, and finally either written to the world state or discarded.
namespace ltlmc::claimchain
{

enum class claim_stage
{
    issued,
    signed_,
    endorsed,
    evaluated,
    claim_asset_dropped,
    claim_updated_discarded,
    evaluated_world_state_updated,
};

enum class claim_status
{
    initial,
    approved,
    denied,
    flagged,
};

inline constexpr std::array all_stages = {
    claim_stage::issued,
    claim_stage::signed_,
    claim_stage::endorsed,
    claim_stage::evaluated,
    claim_stage::claim_asset_dropped,
    claim_stage::claim_updated_discarded,
    claim_stage::evaluated_world_state_updated,
};

inline constexpr std::array all_statuses = {
    claim_status::initial,
    claim_status::approved,
    claim_status::denied,
    claim_status::flagged,
};

std::string_view to_string( claim_stage s );
std::string_view to_string( claim_status s );

// Terminal stages self-loop.
[[nodiscard]] bool is_terminal( claim_stage s );

// Source text of the built-in model and specifications; byte-stable.
std::string_view model_text();
std::string_view specs_text();

// Parsed and totalized built-in model.
kripke::model builtin_model();

std::vector< ltl::named_formula > builtin_named_specs();
std::vector< ltl::formula > builtin_specs();

// Expected verdicts for phi1..phi5: holds, holds, fails, holds, fails.
inline constexpr std::array< bool, 5 > expected_verdicts = { true, true, false, true, false };

struct suite_entry
{
    std::string id;
    ltl::formula spec;
    checker::verdict verdict;
    bool expected_holds = true;
};

struct suite_report
{
    checker::check_mode mode = checker::check_mode::as_written;
    std::vector< suite_entry > entries;
    bool pass = false; // observed verdict vector equals the expected one
};

// Checks every built-in spec against the built-in model. Each Fails entry's
// counterexample is validated; an invalid witness throws ltlmc::error.
suite_report run_suite( checker::check_mode mode );

// Throws suite_mismatch unless report.pass.
void require_pass( const suite_report& report );

} // namespace ltlmc::claimchain
