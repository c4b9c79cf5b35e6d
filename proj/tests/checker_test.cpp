#include "ltlmc/checker.hpp"
#include "ltlmc/claimchain.hpp"
#include "ltlmc/errors.hpp"
#include "ltlmc/random.hpp"

#include "claimchain_specs.hpp"
#include "reference_semantics.hpp"

#include <functional>

#include <doctest.h>

using namespace ltlmc;
using checker::check_mode;
using ltl::formula;

namespace
{

state p( const char* value ) { return { { "p", value } }; }

// Every lasso of m whose states, read along the path, number at most
// max_length: a path from an initial state that closes back onto one of
// its own positions.
std::vector< lasso > short_lassos( const kripke::model& m, std::size_t max_length )
{
    std::vector< lasso > out;
    std::vector< kripke::state_code > path;
    std::function< void() > extend = [ & ] {
        for ( const auto& next : m.successors( path.back() ) )
        {
            for ( std::size_t j = 0; j < path.size(); ++j )
                if ( path[ j ] == next )
                {
                    lasso w;
                    for ( std::size_t i = 0; i < path.size(); ++i )
                        ( i < j ? w.prefix : w.cycle ).push_back( m.decode( path[ i ] ) );
                    out.push_back( std::move( w ) );
                }
            if ( path.size() < max_length )
            {
                path.push_back( next );
                extend();
                path.pop_back();
            }
        }
    };
    for ( const auto& s : m.initial() )
    {
        path = { s };
        extend();
    }
    return out;
}

bool satisfied( const formula& f, check_mode mode, const lasso& w )
{
    return reference::holds( checker::effective_formula( f, mode ), w );
}

} // namespace

TEST_CASE( "check: built-in model, response to endorsement fails" )
{
    const auto m = claimchain::builtin_model();
    const auto v = checker::check( m, fixtures::phi3(), check_mode::as_written );
    CHECK_FALSE( v.holds );
    REQUIRE( v.counterexample );
    CHECK( v.counterexample->prefix
           == std::vector< state >{ fixtures::claim( "issued" ), fixtures::claim( "signed" ) } );
    CHECK( v.counterexample->cycle == std::vector< state >{ fixtures::claim( "claim_asset_dropped" ) } );
    CHECK( checker::verify_counterexample( m, fixtures::phi3(), check_mode::as_written, *v.counterexample ) );
    CHECK( v.stats.product_states > 0 );
    REQUIRE( v.debug );
    CHECK( v.debug->prefix_nodes.size() + v.debug->cycle_nodes.size() > 0 );
}

TEST_CASE( "check: one-state model" )
{
    const auto m = kripke::parse_model( "var p : {a, b}; init p = a; trans true -> next(p) = a;" );
    const auto pa = formula::atom( "p", "a" );
    const auto pb = formula::atom( "p", "b" );

    CHECK( checker::check( m, formula::globally( pa ), check_mode::as_written ).holds );
    CHECK( checker::check( m, pa, check_mode::globally_wrapped ).holds );

    const auto v = checker::check( m, formula::eventually( pb ), check_mode::as_written );
    CHECK_FALSE( v.holds );
    REQUIRE( v.counterexample );
    CHECK( *v.counterexample == lasso{ {}, { p( "a" ) } } );

    CHECK_FALSE( checker::check( m, formula::falsity(), check_mode::as_written ).holds );
    CHECK( checker::check( m, formula::truth(), check_mode::as_written ).holds );
}

TEST_CASE( "check: vacuity" )
{
    const auto m = kripke::parse_model( "var p : {a, b}; init p = a; trans true -> next(p) = a;" );
    const auto never = formula::implication( formula::atom( "p", "b" ), formula::falsity() );
    const auto v = checker::check( m, never, check_mode::as_written );
    CHECK( v.holds );
    CHECK( v.vacuous );

    checker::check_options quiet;
    quiet.detect_vacuity = false;
    CHECK_FALSE( checker::check( m, never, check_mode::as_written, quiet ).vacuous );

    const auto fires = formula::implication( formula::atom( "p", "a" ), formula::atom( "p", "a" ) );
    CHECK( checker::check( m, fires, check_mode::as_written ).holds );
    CHECK_FALSE( checker::check( m, fires, check_mode::as_written ).vacuous );
}

TEST_CASE( "check: unknown atoms are rejected" )
{
    const auto m = claimchain::builtin_model();
    CHECK_THROWS_AS( checker::check( m, formula::atom( "stage", "approved" ), check_mode::as_written ), unknown_atom );
    CHECK_THROWS_AS( checker::check( m, formula::eventually( formula::atom( "owner", "x" ) ), check_mode::as_written ),
                     unknown_atom );
}

TEST_CASE( "check: the state cap" )
{
    const auto m = kripke::parse_model( "var p : {a, b, c}; init p = a; trans true -> next(p) in {a, b, c};" );
    checker::check_options tight;
    tight.state_cap = 1;
    CHECK_THROWS_AS( checker::check( m, formula::globally( formula::truth() ), check_mode::as_written, tight ),
                     state_space_limit );
}

TEST_CASE( "verify_counterexample: reasons" )
{
    const auto m = claimchain::builtin_model();
    const auto f = fixtures::phi3();
    const auto mode = check_mode::as_written;
    const lasso good{ { fixtures::claim( "issued" ), fixtures::claim( "signed" ) },
                      { fixtures::claim( "claim_asset_dropped" ) } };
    CHECK( checker::verify_counterexample( m, f, mode, good ) );

    CHECK( checker::verify_counterexample( m, f, mode, { good.prefix, {} } ).reason == "empty cycle" );
    CHECK( checker::verify_counterexample( m, f, mode, { { fixtures::claim( "signed" ) }, good.cycle } ).reason
           == "not initial" );
    CHECK( checker::verify_counterexample( m, f, mode, { { fixtures::claim( "issued" ) }, good.cycle } ).reason
           == "broken transition at position 0" );
    CHECK( checker::verify_counterexample( m, f, mode,
                                           { { fixtures::claim( "issued" ), { { "stage", "nowhere" } } }, good.cycle } )
                   .reason
           == "invalid state at position 1" );

    const lasso endorsed{ { fixtures::claim( "issued" ), fixtures::claim( "signed" ) },
                          { fixtures::claim( "endorsed" ) } };
    const auto broken = checker::verify_counterexample( m, f, mode, endorsed );
    CHECK_FALSE( broken );
    CHECK( broken.reason == "broken transition at position 2" );

    const lasso satisfying{ { fixtures::claim( "issued" ), fixtures::claim( "signed" ), fixtures::claim( "endorsed" ),
                              fixtures::claim( "evaluated", "approved" ) },
                            { fixtures::claim( "evaluated_world_state_updated", "approved" ) } };
    CHECK( checker::verify_counterexample( m, f, mode, satisfying ).reason == "not violating" );
}

TEST_CASE( "product_search: constant automata and a negated response" )
{
    const auto m = claimchain::builtin_model();

    const auto everything = checker::product_search( m, automata::translate( formula::truth() ) );
    REQUIRE( everything.witness );
    REQUIRE_FALSE( everything.witness->prefix.empty() );
    CHECK( everything.witness->prefix.front() == fixtures::claim( "issued" ) );
    CHECK( everything.witness->cycle.size() == 1 );

    const auto nothing = checker::product_search( m, automata::translate( formula::falsity() ) );
    CHECK_FALSE( nothing.witness );
    CHECK_FALSE( nothing.trace );

    const auto negated = automata::translate( formula::negation( fixtures::phi5() ) );
    const auto found = checker::product_search( m, negated );
    REQUIRE( found.witness );
    CHECK( automata::accepts_lasso( negated, *found.witness ) );
    CHECK( checker::verify_counterexample( m, fixtures::phi5(), check_mode::as_written, *found.witness ) );
}

TEST_CASE( "check is deterministic" )
{
    const auto m = claimchain::builtin_model();
    for ( const auto& f : fixtures::all() )
        for ( const auto mode : { check_mode::as_written, check_mode::globally_wrapped } )
        {
            const auto a = checker::check( m, f, mode );
            const auto b = checker::check( m, f, mode );
            CHECK( a.holds == b.holds );
            CHECK( a.vacuous == b.vacuous );
            CHECK( a.counterexample == b.counterexample );
            CHECK( a.stats.product_states == b.stats.product_states );
        }
}

TEST_CASE( "random models: verdicts agree with path semantics" )
{
    random::engine rng{ 17 };
    random::formula_options options;
    options.max_depth = 3;
    int failures = 0;
    int passes = 0;
    for ( int i = 0; i < 500; ++i )
    {
        const auto m = random::random_model( rng, options.letters, 6 );
        const auto f = random::random_formula( rng, options );
        const auto mode = i % 2 == 0 ? check_mode::as_written : check_mode::globally_wrapped;
        CAPTURE( ltl::pretty( f ) );
        CAPTURE( kripke::print_model( m ) );

        const auto v = checker::check( m, f, mode );
        REQUIRE( v.holds == !v.counterexample.has_value() );
        if ( v.holds )
            REQUIRE_FALSE( checker::check( m, formula::negation( f ), mode ).holds );
        if ( !v.holds )
        {
            ++failures;
            REQUIRE( checker::verify_counterexample( m, f, mode, *v.counterexample ) );
            REQUIRE_FALSE( satisfied( f, mode, *v.counterexample ) );
            REQUIRE( normalize( *v.counterexample ) == *v.counterexample );
            continue;
        }

        ++passes;
        for ( int k = 0; k < 200; ++k )
            REQUIRE( satisfied( f, mode, random::random_path( rng, m ) ) );
        if ( i < 200 )
            for ( const auto& w : short_lassos( m, 4 ) )
                REQUIRE( satisfied( f, mode, w ) );
    }
    CHECK( failures > 50 );
    CHECK( passes > 50 );
}
