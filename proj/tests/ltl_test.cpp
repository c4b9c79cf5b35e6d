#include "ltlmc/errors.hpp"
#include "ltlmc/ltl.hpp"
#include "ltlmc/random.hpp"

#include "claimchain_specs.hpp"
#include "reference_semantics.hpp"

#include <algorithm>

#include <doctest.h>

using namespace ltlmc;
using ltl::formula;
using ltl::op;

namespace
{

formula atom( const char* v, const char* x ) { return formula::atom( v, x ); }

lasso word( std::vector< state > prefix, std::vector< state > cycle )
{
    return { std::move( prefix ), std::move( cycle ) };
}

state p( const char* value ) { return { { "p", value } }; }

bool nnf_shape( const formula& f )
{
    if ( f.is( op::implication ) || f.is( op::weak_until ) )
        return false;
    if ( f.is( op::negation ) )
        return f.operand().is( op::atom );
    if ( ltl::is_unary( f.kind() ) )
        return nnf_shape( f.operand() );
    if ( ltl::is_binary( f.kind() ) )
        return nnf_shape( f.lhs() ) && nnf_shape( f.rhs() );
    return true;
}

random::engine seeded( std::uint64_t seed ) { return random::engine{ seed }; }

} // namespace

TEST_CASE( "formula: atoms require identifiers" )
{
    CHECK_NOTHROW( atom( "stage", "claim_asset_dropped" ) );
    CHECK_NOTHROW( atom( "_x9", "A" ) );
    CHECK_THROWS_AS( atom( "", "a" ), ltlmc::error );
    CHECK_THROWS_AS( atom( "9x", "a" ), ltlmc::error );
    CHECK_THROWS_AS( atom( "x", "a-b" ), ltlmc::error );
}

TEST_CASE( "formula: structural equality and ordering" )
{
    const auto a = formula::until( atom( "p", "a" ), atom( "q", "b" ) );
    const auto b = formula::until( atom( "p", "a" ), atom( "q", "b" ) );
    CHECK( a == b );
    CHECK( a != formula::release( atom( "p", "a" ), atom( "q", "b" ) ) );
    CHECK( ( a < formula::release( atom( "p", "a" ), atom( "q", "b" ) ) ) );
    CHECK( a.node_count() == 3 );
    CHECK( a.depth() == 2 );
    CHECK( formula{} == formula::truth() );
}

TEST_CASE( "parse: examples" )
{
    CHECK( ltl::parse( "stage = issued -> F (stage = endorsed)" ) == fixtures::phi3() );
    CHECK( ltl::parse( "true" ) == formula::truth() );
    CHECK( ltl::parse( "false" ) == formula::falsity() );

    const auto chain = ltl::parse( "p = a U q = b U r = c" );
    CHECK( chain == formula::until( atom( "p", "a" ), formula::until( atom( "q", "b" ), atom( "r", "c" ) ) ) );
    CHECK( ltl::parse( ltl::pretty( chain ) ) == chain );
}

TEST_CASE( "parse: precedence and associativity" )
{
    const auto a = atom( "p", "a" );
    const auto b = atom( "q", "b" );
    const auto c = atom( "r", "c" );

    CHECK( ltl::parse( "p = a -> q = b -> r = c" ) == formula::implication( a, formula::implication( b, c ) ) );
    CHECK( ltl::parse( "p = a | q = b & r = c" ) == formula::disjunction( a, formula::conjunction( b, c ) ) );
    CHECK( ltl::parse( "p = a | q = b | r = c" ) == formula::disjunction( formula::disjunction( a, b ), c ) );
    CHECK( ltl::parse( "p = a & q = b U r = c" ) == formula::conjunction( a, formula::until( b, c ) ) );
    CHECK( ltl::parse( "F p = a U q = b" ) == formula::until( formula::eventually( a ), b ) );
    CHECK( ltl::parse( "!X G p = a" ) == formula::negation( formula::next( formula::globally( a ) ) ) );
    CHECK( ltl::parse( "p = a W q = b W r = c" ) == formula::weak_until( a, formula::weak_until( b, c ) ) );
    CHECK( ltl::parse( "p = a R (q = b U r = c)" ) == formula::release( a, formula::until( b, c ) ) );
}

TEST_CASE( "parse: sugar and whitespace" )
{
    CHECK( ltl::parse( "p != a" ) == formula::negation( atom( "p", "a" ) ) );
    CHECK( ltl::parse( "  G(p=a)\n" ) == formula::globally( atom( "p", "a" ) ) );
    CHECK( ltl::parse( "stage = signed & stage != endorsed -> G (stage = claim_asset_dropped)" ) == fixtures::phi4() );
}

TEST_CASE( "parse: errors carry location and expectations" )
{
    try
    {
        ltl::parse( "p = a U q = b R r = c" );
        FAIL( "mixed temporal operators must be rejected" );
    }
    catch ( const syntax_error& e )
    {
        CHECK( e.where().line == 1 );
        CHECK( e.where().column == 15 );
        CHECK( std::find( e.expected().begin(), e.expected().end(), "U" ) != e.expected().end() );
    }

    try
    {
        ltl::parse( "p = a &\n  ( q = )" );
        FAIL( "missing value must be rejected" );
    }
    catch ( const syntax_error& e )
    {
        CHECK( e.where().line == 2 );
        CHECK( e.where().column == 9 );
        CHECK( e.expected() == std::vector< std::string >{ "identifier" } );
    }

    CHECK_THROWS_AS( ltl::parse( "" ), syntax_error );
    CHECK_THROWS_AS( ltl::parse( "(p = a" ), syntax_error );
    CHECK_THROWS_AS( ltl::parse( "p = a q = b" ), syntax_error );
    CHECK_THROWS_AS( ltl::parse( "p" ), syntax_error );
    CHECK_THROWS_AS( ltl::parse( "p = a && q = b" ), syntax_error );
    CHECK_THROWS_AS( ltl::parse( "p = a <-> q = b" ), unknown_operator );
    CHECK_THROWS_AS( ltl::parse( "p = a @ q = b" ), unknown_operator );
    CHECK_THROWS_AS( ltl::parse( "p = a - q = b" ), unknown_operator );
}

TEST_CASE( "pretty: examples" )
{
    CHECK( ltl::pretty( formula::globally( atom( "p", "a" ) ) ) == "G (p = a)" );
    CHECK( ltl::pretty( formula::implication( formula::truth(), formula::falsity() ) ) == "(true -> false)" );
    CHECK( ltl::pretty( fixtures::phi3() ) == "(stage = issued -> F (stage = endorsed))" );
    CHECK( ltl::pretty( formula::negation( atom( "p", "a" ) ) ) == "!(p = a)" );
    CHECK( ltl::parse( ltl::pretty( fixtures::phi1() ) ) == fixtures::phi1() );
}

TEST_CASE( "pretty: round-trip on random formulas" )
{
    auto rng = seeded( 11 );
    random::formula_options options;
    options.max_depth = 6;
    for ( int i = 0; i < 500; ++i )
    {
        const auto f = random::random_formula( rng, options );
        CAPTURE( ltl::pretty( f ) );
        REQUIRE( ltl::parse( ltl::pretty( f ) ) == f );
    }
}

TEST_CASE( "to_nnf: examples" )
{
    const auto a = atom( "p", "a" );
    const auto b = atom( "q", "b" );

    CHECK( ltl::to_nnf( formula::negation( formula::until( a, b ) ) )
           == formula::release( formula::negation( a ), formula::negation( b ) ) );
    CHECK( ltl::to_nnf( formula::negation( formula::next( formula::globally( a ) ) ) )
           == formula::next( formula::eventually( formula::negation( a ) ) ) );
    CHECK( ltl::to_nnf( formula::weak_until( a, b ) ) == formula::release( b, formula::disjunction( a, b ) ) );
    CHECK( ltl::to_nnf( formula::negation( formula::negation( a ) ) ) == a );

    const auto nnf4 = ltl::to_nnf( fixtures::phi4() );
    CHECK( nnf_shape( nnf4 ) );
    CHECK( ltl::is_nnf( nnf4 ) );
    CHECK_FALSE( ltl::is_nnf( fixtures::phi4() ) );
}

TEST_CASE( "closure: examples" )
{
    const auto a = atom( "p", "a" );
    const auto b = atom( "q", "b" );
    CHECK( ltl::closure( a ) == std::vector< formula >{ a } );

    const auto u = formula::until( a, b );
    CHECK( ltl::closure( u ) == std::vector< formula >{ u, a, b } );

    // Shared subformulas appear once.
    CHECK( ltl::closure( formula::conjunction( a, formula::next( a ) ) ).size() == 3 );

    // Hand count: & (issued, & (& (G !d, G !c), G !w)) has 13 nodes, all distinct.
    const auto negated = ltl::to_nnf( formula::negation( fixtures::phi2() ) );
    CHECK( negated.node_count() == 13 );
    CHECK( ltl::closure( negated ).size() == 13 );
}

TEST_CASE( "eval_lasso: examples" )
{
    const auto a = atom( "p", "a" );
    CHECK( ltl::eval_lasso( formula::globally( a ), word( {}, { p( "a" ) } ) ) );
    CHECK( ltl::eval_lasso( formula::globally( formula::eventually( a ) ), word( {}, { p( "a" ), p( "b" ) } ) ) );
    CHECK_FALSE( ltl::eval_lasso( formula::eventually( formula::globally( a ) ), word( {}, { p( "a" ), p( "b" ) } ) ) );

    const auto dropped = word( { fixtures::claim( "issued" ), fixtures::claim( "signed" ) },
                               { fixtures::claim( "claim_asset_dropped" ) } );
    CHECK_FALSE( ltl::eval_lasso( fixtures::phi3(), dropped ) );
    CHECK_FALSE( reference::holds( fixtures::phi3(), dropped ) );
    CHECK( ltl::eval_lasso( fixtures::phi2(), dropped ) );
}

TEST_CASE( "eval_lasso: errors" )
{
    CHECK_THROWS_AS( ltl::eval_lasso( atom( "q", "a" ), word( {}, { p( "a" ) } ) ), unbound_variable );
    CHECK_THROWS_AS( ltl::eval_lasso( formula::truth(), word( { p( "a" ) }, {} ) ), ltlmc::error );
}

TEST_CASE( "wrap_globally: examples" )
{
    CHECK( ltl::wrap_globally( atom( "p", "a" ) ) == formula::globally( atom( "p", "a" ) ) );
    CHECK( ltl::wrap_globally( formula::truth() ) == formula::globally( formula::truth() ) );
    const auto wrapped = ltl::wrap_globally( fixtures::phi1() );
    CHECK( ltl::parse( ltl::pretty( wrapped ) ) == wrapped );
}

TEST_CASE( "eval_lasso: agrees with the reference semantics" )
{
    auto rng = seeded( 23 );
    random::formula_options options;
    options.max_depth = 5;
    for ( int i = 0; i < 1000; ++i )
    {
        const auto f = random::random_formula( rng, options );
        const auto w = random::random_lasso( rng, options.letters, 3, 4 );
        CAPTURE( ltl::pretty( f ) );
        REQUIRE( ltl::eval_lasso( f, w ) == reference::holds( f, w ) );
    }
}

TEST_CASE( "semantic laws on random lassos" )
{
    auto rng = seeded( 5 );
    random::formula_options options;
    options.max_depth = 4;
    for ( int i = 0; i < 600; ++i )
    {
        const auto f = random::random_formula( rng, options );
        const auto g = random::random_formula( rng, options );
        const auto w = random::random_lasso( rng, options.letters, 3, 4 );
        CAPTURE( ltl::pretty( f ) );
        CAPTURE( ltl::pretty( g ) );

        const auto value = ltl::eval_lasso( f, w );
        REQUIRE( ltl::eval_lasso( ltl::to_nnf( f ), w ) == value );
        REQUIRE( ltl::eval_lasso( formula::negation( f ), w ) == !value );

        const auto u = formula::until( f, g );
        REQUIRE( ltl::eval_lasso( u, w )
                 == ltl::eval_lasso( formula::disjunction( g, formula::conjunction( f, formula::next( u ) ) ), w ) );
        const auto r = formula::release( f, g );
        REQUIRE( ltl::eval_lasso( r, w )
                 == ltl::eval_lasso( formula::conjunction( g, formula::disjunction( f, formula::next( r ) ) ), w ) );

        REQUIRE( ltl::eval_lasso( formula::eventually( f ), w )
                 == ltl::eval_lasso( formula::until( formula::truth(), f ), w ) );
        REQUIRE( ltl::eval_lasso( formula::globally( f ), w )
                 == ltl::eval_lasso( formula::release( formula::falsity(), f ), w ) );
    }
}

TEST_CASE( "spec files: names, numbering and comments" )
{
    const auto specs = ltl::parse_spec_file( "# leading comment line\n"
                                             "\n"
                                             "p = a   # trailing comment\n"
                                             "# phi_named\n"
                                             "G (p = b)\n"
                                             "F (p = a)\n" );
    REQUIRE( specs.size() == 3 );
    CHECK( specs[ 0 ].name == "phi1" );
    CHECK( specs[ 0 ].spec == atom( "p", "a" ) );
    CHECK( specs[ 1 ].name == "phi_named" );
    CHECK( specs[ 2 ].name == "phi3" );

    CHECK( ltl::parse_spec_file( "" ).empty() );
    CHECK( ltl::parse_spec_file( "# only comments\n\n" ).empty() );

    const auto again = ltl::parse_spec_file( ltl::print_spec_file( specs ) );
    REQUIRE( again.size() == 3 );
    CHECK( again[ 2 ].name == "phi3" );
    CHECK( again[ 1 ].spec == specs[ 1 ].spec );

    try
    {
        ltl::parse_spec_file( "p = a\n\nq = \n" );
        FAIL( "expected a syntax error" );
    }
    catch ( const syntax_error& e )
    {
        CHECK( e.where().line == 3 );
    }
    CHECK_THROWS_AS( ltl::parse_spec_file( "p = a\np = a ~ q = b\n" ), unknown_operator );
}
