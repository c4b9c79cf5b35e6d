#include "ltlmc/automata.hpp"
#include "ltlmc/checker.hpp"
#include "ltlmc/claimchain.hpp"
#include "ltlmc/oracle.hpp"
#include "ltlmc/random.hpp"

#include <benchmark/benchmark.h>

using namespace ltlmc;

namespace
{

void translate_builtin_negations( benchmark::State& state )
{
    const auto specs = claimchain::builtin_specs();
    for ( auto _ : state )
        for ( const auto& f : specs )
            benchmark::DoNotOptimize( automata::translate( ltl::formula::negation( f ) ) );
}
BENCHMARK( translate_builtin_negations );

void translate_random( benchmark::State& state )
{
    std::vector< ltl::formula > formulas;
    for ( std::uint64_t i = 0; i < 64; ++i )
        formulas.push_back( oracle::make_case( 1, i ).spec );
    for ( auto _ : state )
        for ( const auto& f : formulas )
            benchmark::DoNotOptimize( automata::translate_gba( f ) );
}
BENCHMARK( translate_random );

void builtin_suite( benchmark::State& state )
{
    const auto mode = static_cast< checker::check_mode >( state.range( 0 ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( claimchain::run_suite( mode ) );
}
BENCHMARK( builtin_suite )->Arg( 0 )->Arg( 1 );

// Product search over n independent counters. The property holds, so the
// whole product of 4^n model states is explored.
void product_search_grid( benchmark::State& state )
{
    const auto n = static_cast< int >( state.range( 0 ) );
    std::string vars;
    std::string text;
    std::string init = "init ";
    for ( int i = 0; i < n; ++i )
    {
        vars += "var c" + std::to_string( i ) + " : {a, b, c, d};\n";
        init += ( i ? " & c" : "c" ) + std::to_string( i ) + " = a";
        text += "trans c" + std::to_string( i ) + " = a -> next(c" + std::to_string( i ) + ") in {a, b};\n";
        text += "trans c" + std::to_string( i ) + " = b -> next(c" + std::to_string( i ) + ") in {b, c};\n";
        text += "trans c" + std::to_string( i ) + " = c -> next(c" + std::to_string( i ) + ") in {c, d};\n";
        text += "trans c" + std::to_string( i ) + " = d -> next(c" + std::to_string( i ) + ") = d;\n";
    }
    const auto m = kripke::totalize( kripke::parse_model( vars + init + ";\n" + text ) ).totalized;
    const auto f = ltl::parse( "G (c0 = a -> X !(c0 = c))" );

    std::size_t explored = 0;
    for ( auto _ : state )
    {
        const auto v = checker::check( m, f, checker::check_mode::as_written );
        explored = v.stats.product_states;
        benchmark::DoNotOptimize( v );
    }
    state.counters[ "product_states" ] = static_cast< double >( explored );
}
BENCHMARK( product_search_grid )->DenseRange( 2, 6 );

} // namespace

BENCHMARK_MAIN();
