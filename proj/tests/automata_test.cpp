#include "ltlmc/automata.hpp"
#include "ltlmc/errors.hpp"
#include "ltlmc/ltl.hpp"
#include "ltlmc/oracle.hpp"
#include "ltlmc/random.hpp"

#include "claimchain_specs.hpp"
#include "reference_semantics.hpp"

#include <cmath>

#include <doctest.h>

using namespace ltlmc;
using automata::accepts_lasso;
using automata::degeneralize;
using automata::translate_gba;
using ltl::formula;

namespace
{

state p( const char* value ) { return { { "p", value } }; }

const lasso dropped_claim{ { fixtures::claim( "issued" ), fixtures::claim( "signed" ) },
                           { fixtures::claim( "claim_asset_dropped" ) } };

automata::buchi nnf_automaton( const formula& f )
{
    return degeneralize( translate_gba( ltl::to_nnf( f ) ) );
}

void check_guards( const automata::generalized_buchi& g )
{
    for ( const auto& edges : g.transitions )
        for ( const auto& e : edges )
        {
            CHECK( automata::is_consistent( e.label ) );
            CHECK( std::is_sorted( e.label.begin(), e.label.end() ) );
            CHECK( e.target < g.node_count() );
            CHECK( e.target != g.start );
        }
    for ( const auto& set : g.acceptance )
        for ( const auto n : set )
            CHECK( n < g.node_count() );
}

} // namespace

TEST_CASE( "translate_gba: atom" )
{
    const auto a = degeneralize( translate_gba( formula::atom( "p", "a" ) ) );
    CHECK( accepts_lasso( a, { {}, { p( "a" ) } } ) );
    CHECK_FALSE( accepts_lasso( a, { {}, { p( "b" ) } } ) );
    CHECK( accepts_lasso( a, { { p( "a" ) }, { p( "b" ) } } ) );
}

TEST_CASE( "translate_gba: eventually" )
{
    const auto g = translate_gba( formula::eventually( formula::atom( "p", "a" ) ) );
    CHECK( g.acceptance.size() == 1 );
    const auto a = degeneralize( g );
    CHECK( accepts_lasso( a, { { p( "b" ) }, { p( "a" ) } } ) );
    CHECK_FALSE( accepts_lasso( a, { {}, { p( "b" ) } } ) );
}

TEST_CASE( "translate_gba: negated phi3 accepts the dropped-claim lasso" )
{
    const auto negated = ltl::to_nnf( formula::negation( fixtures::phi3() ) );
    REQUIRE( ltl::eval_lasso( negated, dropped_claim ) );
    CHECK( accepts_lasso( degeneralize( translate_gba( negated ) ), dropped_claim ) );
}

TEST_CASE( "translate_gba: rejects formulas outside NNF" )
{
    CHECK_THROWS_AS( translate_gba( fixtures::phi3() ), not_in_nnf );
    CHECK_THROWS_AS( translate_gba( formula::negation( formula::next( formula::truth() ) ) ), not_in_nnf );
    CHECK_THROWS_AS( translate_gba( formula::weak_until( formula::truth(), formula::truth() ) ), not_in_nnf );
}

TEST_CASE( "translate_gba: guards are consistent" )
{
    const auto contradiction = formula::conjunction( formula::atom( "p", "a" ), formula::atom( "p", "b" ) );
    const auto g = translate_gba( contradiction );
    CHECK( g.tableau_node_count() == 0 );
    CHECK_FALSE( accepts_lasso( degeneralize( g ), { {}, { p( "a" ) } } ) );

    for ( const auto& f : fixtures::all() )
        check_guards( translate_gba( ltl::to_nnf( formula::negation( f ) ) ) );
}

TEST_CASE( "degeneralize: no acceptance sets" )
{
    const auto g = translate_gba( formula::globally( formula::atom( "p", "a" ) ) );
    REQUIRE( g.acceptance.empty() );
    const auto b = degeneralize( g );
    CHECK( b.node_count() == g.node_count() );
    CHECK( b.accepting.size() == b.node_count() );
}

TEST_CASE( "degeneralize: one acceptance set is an isomorphism" )
{
    const auto g = translate_gba( formula::until( formula::atom( "p", "a" ), formula::atom( "p", "b" ) ) );
    REQUIRE( g.acceptance.size() == 1 );
    const auto b = degeneralize( g );
    CHECK( b.node_count() == g.node_count() );

    std::size_t edges = 0;
    for ( std::size_t n = 0; n < b.node_count(); ++n )
    {
        const auto [ origin, layer ] = b.origin[ n ];
        CHECK( layer == 0 );
        CHECK( b.accepting.contains( n ) == g.acceptance[ 0 ].contains( origin ) );
        CHECK( b.transitions[ n ].size() == g.transitions[ origin ].size() );
        edges += b.transitions[ n ].size();
    }
    std::size_t original_edges = 0;
    for ( const auto& e : g.transitions )
        original_edges += e.size();
    CHECK( edges == original_edges );
}

TEST_CASE( "degeneralize: negated phi2 agrees with eval_lasso on random claim lassos" )
{
    const auto negated = ltl::to_nnf( formula::negation( fixtures::phi2() ) );
    const auto g = translate_gba( negated );
    const auto b = degeneralize( g );
    CHECK( b.node_count() <= g.node_count() * std::max< std::size_t >( 1, g.acceptance.size() ) );

    const std::vector< const char* > stages = { "issued",
                                                "signed",
                                                "endorsed",
                                                "evaluated",
                                                "claim_asset_dropped",
                                                "claim_updated_discarded",
                                                "evaluated_world_state_updated" };
    random::engine rng{ 99 };
    const auto pick_stage = [ & ] { return stages[ std::uniform_int_distribution< std::size_t >{ 0, 6 }( rng ) ]; };

    int accepted = 0;
    for ( int i = 0; i < 200; ++i )
    {
        lasso w;
        const auto prefix = std::uniform_int_distribution< int >{ 0, 3 }( rng );
        const auto cycle = std::uniform_int_distribution< int >{ 1, 3 }( rng );
        // Biased towards issued first so both outcomes occur.
        for ( int k = 0; k < prefix; ++k )
            w.prefix.push_back( fixtures::claim( k == 0 ? "issued" : pick_stage() ) );
        for ( int k = 0; k < cycle; ++k )
            w.cycle.push_back( fixtures::claim( prefix == 0 && k == 0 ? "issued" : pick_stage() ) );

        const auto expected = ltl::eval_lasso( negated, w );
        accepted += expected;
        REQUIRE( accepts_lasso( b, w ) == expected );
    }
    CHECK( accepted > 0 );
    CHECK( accepted < 200 );
}

TEST_CASE( "accepts_lasso: constants and negated phi5" )
{
    const auto t = degeneralize( translate_gba( formula::truth() ) );
    const auto f = degeneralize( translate_gba( formula::falsity() ) );
    for ( const auto& w : { lasso{ {}, { p( "a" ) } }, lasso{ { p( "b" ), p( "a" ) }, { p( "a" ), p( "b" ) } } } )
    {
        CHECK( accepts_lasso( t, w ) );
        CHECK_FALSE( accepts_lasso( f, w ) );
    }

    const auto negated5 = nnf_automaton( formula::negation( fixtures::phi5() ) );
    CHECK( accepts_lasso( negated5, dropped_claim ) );
    CHECK( ltl::eval_lasso( formula::negation( fixtures::phi5() ), dropped_claim ) );
}

TEST_CASE( "translation keystone: automaton acceptance equals lasso semantics" )
{
    // Same generator as `ltlmc oracle`; checks the closure size bound and
    // complementation alongside.
    int accepted = 0;
    for ( std::uint64_t i = 0; i < 1500; ++i )
    {
        const auto c = oracle::make_case( 2024, i );
        CAPTURE( ltl::pretty( c.spec ) );
        REQUIRE( c.spec.depth() <= 4 );
        REQUIRE( c.word.prefix.size() <= 3 );
        REQUIRE( c.word.cycle.size() <= 3 );

        const auto g = translate_gba( c.spec );
        REQUIRE( static_cast< double >( g.tableau_node_count() )
                 <= std::pow( 2.0, static_cast< double >( ltl::closure( c.spec ).size() ) ) );
        check_guards( g );

        const auto expected = ltl::eval_lasso( c.spec, c.word );
        REQUIRE( expected == reference::holds( c.spec, c.word ) );
        REQUIRE( accepts_lasso( degeneralize( g ), c.word ) == expected );

        const auto complement = ltl::to_nnf( formula::negation( c.spec ) );
        REQUIRE( accepts_lasso( degeneralize( translate_gba( complement ) ), c.word ) == !expected );
        accepted += expected;
    }
    CHECK( accepted > 100 );
    CHECK( accepted < 1400 );
}

TEST_CASE( "export formats are stable" )
{
    const auto a = automata::translate( formula::eventually( formula::atom( "p", "a" ) ) );
    const auto text = automata::to_text( a );
    CHECK( text == automata::to_text( automata::translate( formula::eventually( formula::atom( "p", "a" ) ) ) ) );
    CHECK( text.rfind( "initial: 0\naccepting:", 0 ) == 0 );
    CHECK( text.find( "0 -- p = a --> " ) != std::string::npos );
    CHECK( text.find( " -- true --> " ) != std::string::npos );

    const auto dot = automata::to_dot( a, "phi" );
    CHECK( dot.rfind( "digraph \"phi\" {", 0 ) == 0 );
    CHECK( dot.find( "doublecircle" ) != std::string::npos );
}
