#include "ltlmc/claimchain.hpp"
#include "ltlmc/errors.hpp"

#include <fmt/format.h>

namespace ltlmc::claimchain
{

namespace
{

constexpr std::string_view builtin_model_source = R"(# ClaimChain claim lifecycle.
#
# A claim is issued into the world state and signed by the client. Peers
# endorse it when the endorsement policy is met; otherwise the claim asset
# is dropped. An endorsed claim is evaluated by the fraud model, which
# decides its status, and the evaluation is either written to the world
# state or discarded. Terminal stages persist.

var stage : {issued, signed, endorsed, evaluated, claim_asset_dropped, claim_updated_discarded, evaluated_world_state_updated};
var claim_status : {initial, approved, denied, flagged};

init stage = issued & claim_status = initial;

trans stage = issued -> next(stage) = signed;
trans stage = signed -> next(stage) in {endorsed, claim_asset_dropped};
trans stage = endorsed -> next(stage) = evaluated, next(claim_status) in {approved, denied, flagged};
trans stage = evaluated -> next(stage) in {evaluated_world_state_updated, claim_updated_discarded};
trans stage = claim_asset_dropped -> next(stage) = claim_asset_dropped;
trans stage = claim_updated_discarded -> next(stage) = claim_updated_discarded;
trans stage = evaluated_world_state_updated -> next(stage) = evaluated_world_state_updated;
)";

constexpr std::string_view builtin_specs_source = R"(# ClaimChain workflow specifications, checked at the initial state.

# phi1
stage = endorsed -> F (claim_status = approved) | F (claim_status = denied) | F (claim_status = flagged)
# phi2
stage = issued -> F (stage = claim_asset_dropped) | F (stage = claim_updated_discarded) | F (stage = evaluated_world_state_updated)
# phi3
stage = issued -> F (stage = endorsed)
# phi4
stage = signed & stage != endorsed -> G (stage = claim_asset_dropped)
# phi5
stage = issued -> F (stage = evaluated)
)";

} // namespace

std::string_view to_string( claim_stage s )
{
    switch ( s )
    {
    case claim_stage::issued: return "issued";
    case claim_stage::signed_: return "signed";
    case claim_stage::endorsed: return "endorsed";
    case claim_stage::evaluated: return "evaluated";
    case claim_stage::claim_asset_dropped: return "claim_asset_dropped";
    case claim_stage::claim_updated_discarded: return "claim_updated_discarded";
    case claim_stage::evaluated_world_state_updated: return "evaluated_world_state_updated";
    }
    return "?";
}

std::string_view to_string( claim_status s )
{
    switch ( s )
    {
    case claim_status::initial: return "initial";
    case claim_status::approved: return "approved";
    case claim_status::denied: return "denied";
    case claim_status::flagged: return "flagged";
    }
    return "?";
}

bool is_terminal( claim_stage s )
{
    return s == claim_stage::claim_asset_dropped || s == claim_stage::claim_updated_discarded
        || s == claim_stage::evaluated_world_state_updated;
}

std::string_view model_text() { return builtin_model_source; }
std::string_view specs_text() { return builtin_specs_source; }

kripke::model builtin_model()
{
    return kripke::totalize( kripke::parse_model( builtin_model_source, "claimchain" ) ).totalized;
}

std::vector< ltl::named_formula > builtin_named_specs()
{
    return ltl::parse_spec_file( builtin_specs_source );
}

std::vector< ltl::formula > builtin_specs()
{
    std::vector< ltl::formula > out;
    for ( auto& spec : builtin_named_specs() )
        out.push_back( std::move( spec.spec ) );
    return out;
}

suite_report run_suite( checker::check_mode mode )
{
    const auto m = builtin_model();
    const auto specs = builtin_named_specs();

    suite_report report;
    report.mode = mode;
    report.pass = specs.size() == expected_verdicts.size();

    for ( std::size_t i = 0; i < specs.size(); ++i )
    {
        suite_entry entry{ specs[ i ].name, specs[ i ].spec, checker::check( m, specs[ i ].spec, mode ),
                           i < expected_verdicts.size() && expected_verdicts[ i ] };

        if ( entry.verdict.counterexample )
        {
            const auto valid = checker::verify_counterexample( m, entry.spec, mode, *entry.verdict.counterexample );
            if ( !valid )
                throw error( fmt::format( "counterexample for {} is invalid: {}", entry.id, valid.reason ) );
        }

        report.pass = report.pass && entry.verdict.holds == entry.expected_holds;
        report.entries.push_back( std::move( entry ) );
    }
    return report;
}

void require_pass( const suite_report& report )
{
    if ( report.pass )
        return;

    std::string observed;
    for ( const auto& e : report.entries )
        observed += e.verdict.holds ? "T" : "F";
    throw suite_mismatch( fmt::format( "verdicts {} under {} differ from the expected TTFTF", observed,
                                       checker::to_string( report.mode ) ) );
}

} // namespace ltlmc::claimchain
