#include "ltlmc/oracle.hpp"

#include "ltlmc/automata.hpp"

namespace ltlmc::oracle
{

namespace
{

// Formulas obtained by replacing one node of f with a child or a constant.
std::vector< ltl::formula > smaller( const ltl::formula& f )
{
    using F = ltl::formula;
    std::vector< ltl::formula > out;
    if ( !f.is( ltl::op::constant_true ) && !f.is( ltl::op::constant_false ) )
    {
        out.push_back( F::truth() );
        out.push_back( F::falsity() );
    }

    if ( ltl::is_unary( f.kind() ) )
    {
        out.push_back( f.operand() );
        if ( !f.is( ltl::op::negation ) )
            for ( auto& g : smaller( f.operand() ) )
                out.push_back( F::unary( f.kind(), g ) );
    }
    else if ( ltl::is_binary( f.kind() ) )
    {
        out.push_back( f.lhs() );
        out.push_back( f.rhs() );
        for ( auto& g : smaller( f.lhs() ) )
            out.push_back( F::binary( f.kind(), g, f.rhs() ) );
        for ( auto& g : smaller( f.rhs() ) )
            out.push_back( F::binary( f.kind(), f.lhs(), g ) );
    }
    return out;
}

std::vector< lasso > shorter( const lasso& w )
{
    std::vector< lasso > out;
    for ( std::size_t i = 0; i < w.prefix.size(); ++i )
    {
        auto v = w;
        v.prefix.erase( v.prefix.begin() + static_cast< std::ptrdiff_t >( i ) );
        out.push_back( std::move( v ) );
    }
    for ( std::size_t i = 0; w.cycle.size() > 1 && i < w.cycle.size(); ++i )
    {
        auto v = w;
        v.cycle.erase( v.cycle.begin() + static_cast< std::ptrdiff_t >( i ) );
        out.push_back( std::move( v ) );
    }
    return out;
}

} // namespace

oracle_case make_case( std::uint64_t seed, std::uint64_t index )
{
    std::seed_seq sequence{ static_cast< std::uint32_t >( seed ), static_cast< std::uint32_t >( seed >> 32 ),
                            static_cast< std::uint32_t >( index ), static_cast< std::uint32_t >( index >> 32 ) };
    random::engine rng{ sequence };

    random::formula_options options;
    options.max_depth = 4;
    options.letters = { 2, 3 };
    options.nnf_only = true;

    oracle_case c;
    c.seed = seed;
    c.index = index;
    c.spec = random::random_formula( rng, options );
    c.word = random::random_lasso( rng, options.letters, 3, 3 );
    return c;
}

outcome run_case( const ltl::formula& f, const lasso& w )
{
    const auto automaton = automata::degeneralize( automata::translate_gba( f ) );
    return { automata::accepts_lasso( automaton, w ), ltl::eval_lasso( f, w ) };
}

oracle_case shrink( oracle_case c )
{
    bool progress = true;
    while ( progress )
    {
        progress = false;
        for ( auto& g : smaller( c.spec ) )
        {
            if ( ltl::is_nnf( g ) && !run_case( g, c.word ).agree() )
            {
                c.spec = std::move( g );
                progress = true;
                break;
            }
        }
        if ( progress )
            continue;
        for ( auto& v : shorter( c.word ) )
        {
            if ( !run_case( c.spec, v ).agree() )
            {
                c.word = std::move( v );
                progress = true;
                break;
            }
        }
    }
    return c;
}

} // namespace ltlmc::oracle
