#include "ltlmc/random.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include <fmt/format.h>

namespace ltlmc::random
{

namespace
{

std::size_t pick( engine& rng, std::size_t bound )
{
    return std::uniform_int_distribution< std::size_t >{ 0, bound - 1 }( rng );
}

bool coin( engine& rng, double p = 0.5 )
{
    return std::bernoulli_distribution{ p }( rng );
}

ltl::formula random_leaf( engine& rng, const formula_options& options )
{
    const auto variables = options.letters.variables();
    const auto values = options.letters.values();
    switch ( pick( rng, 8 ) )
    {
    case 0: return ltl::formula::truth();
    case 1: return ltl::formula::falsity();
    default:
    {
        auto a = ltl::formula::atom( variables[ pick( rng, variables.size() ) ], values[ pick( rng, values.size() ) ] );
        return coin( rng, 0.3 ) ? ltl::formula::negation( std::move( a ) ) : a;
    }
    }
}

} // namespace

std::vector< std::string > alphabet::variables() const
{
    std::vector< std::string > out;
    for ( std::size_t i = 0; i < variable_count; ++i )
        out.push_back( fmt::format( "v{}", i ) );
    return out;
}

std::vector< std::string > alphabet::values() const
{
    std::vector< std::string > out;
    for ( std::size_t i = 0; i < value_count; ++i )
        out.push_back( std::string( 1, static_cast< char >( 'a' + i ) ) );
    return out;
}

ltl::formula random_formula( engine& rng, const formula_options& options )
{
    using ltl::op;

    // Depth counts nodes on the longest root-to-leaf path; a leaf that is a
    // negated atom has depth 2.
    if ( options.max_depth <= 2 || coin( rng, 0.25 ) )
    {
        auto leaf = random_leaf( rng, options );
        if ( options.max_depth < 2 && leaf.is( op::negation ) )
            return leaf.operand();
        return leaf;
    }

    static constexpr std::array nnf_ops = { op::conjunction, op::disjunction, op::next, op::eventually,
                                            op::globally,    op::until,       op::release };
    static constexpr std::array all_ops = { op::negation,   op::conjunction, op::disjunction, op::implication,
                                            op::next,       op::eventually,  op::globally,    op::until,
                                            op::weak_until, op::release };

    const auto o = options.nnf_only ? nnf_ops[ pick( rng, nnf_ops.size() ) ] : all_ops[ pick( rng, all_ops.size() ) ];

    auto child_options = options;
    child_options.max_depth = options.max_depth - 1;

    if ( ltl::is_unary( o ) )
        return ltl::formula::unary( o, random_formula( rng, child_options ) );
    auto lhs = random_formula( rng, child_options );
    auto rhs = random_formula( rng, child_options );
    return ltl::formula::binary( o, std::move( lhs ), std::move( rhs ) );
}

lasso random_lasso( engine& rng, const alphabet& letters, std::size_t max_prefix, std::size_t max_cycle )
{
    const auto variables = letters.variables();
    const auto values = letters.values();

    const auto random_state = [ & ] {
        state s;
        for ( const auto& v : variables )
            s.emplace( v, values[ pick( rng, values.size() ) ] );
        return s;
    };

    lasso w;
    const auto prefix = pick( rng, max_prefix + 1 );
    const auto cycle = 1 + pick( rng, std::max< std::size_t >( 1, max_cycle ) );
    for ( std::size_t i = 0; i < prefix; ++i )
        w.prefix.push_back( random_state() );
    for ( std::size_t i = 0; i < cycle; ++i )
        w.cycle.push_back( random_state() );
    return w;
}

kripke::model random_model( engine& rng, const alphabet& letters, std::size_t max_states )
{
    std::vector< kripke::variable_decl > variables;
    for ( const auto& name : letters.variables() )
        variables.push_back( { name, letters.values() } );

    std::set< kripke::state_code > chosen;
    const auto target = 1 + pick( rng, max_states );
    while ( chosen.size() < target )
    {
        kripke::state_code s;
        for ( std::size_t v = 0; v < letters.variable_count; ++v )
            s.push_back( static_cast< std::uint16_t >( pick( rng, letters.value_count ) ) );
        chosen.insert( s );
    }
    const std::vector< kripke::state_code > states( chosen.begin(), chosen.end() );

    // Initial states must be a conjunctive set in the model language; here
    // the model is built directly, so any nonempty subset works.
    std::vector< kripke::state_code > initial{ states[ pick( rng, states.size() ) ] };
    for ( const auto& s : states )
        if ( coin( rng, 0.2 ) )
            initial.push_back( s );

    std::vector< kripke::transition_rule > rules;
    for ( const auto& from : states )
    {
        for ( const auto& to : states )
        {
            if ( !coin( rng, 0.35 ) )
                continue;
            kripke::transition_rule rule;
            for ( std::size_t v = 0; v < from.size(); ++v )
            {
                rule.guard.push_back( { v, from[ v ], true } );
                rule.updates.push_back( { v, { to[ v ] } } );
            }
            rules.push_back( std::move( rule ) );
        }
    }

    kripke::model m{ "random", std::move( variables ), std::move( initial ), std::move( rules ) };
    return kripke::totalize( m ).totalized;
}

lasso random_path( engine& rng, const kripke::model& m, std::size_t max_walk )
{
    const auto& initial = m.initial();
    std::vector< kripke::state_code > walk{ initial[ pick( rng, initial.size() ) ] };
    std::map< kripke::state_code, std::size_t > first_seen{ { walk.front(), 0 } };

    // Walk on until a state repeats; before max_walk steps a repeat may be
    // skipped by continuing past it.
    while ( true )
    {
        const auto next_states = m.successors( walk.back() );
        const auto& next = next_states[ pick( rng, next_states.size() ) ];
        const auto it = first_seen.find( next );
        if ( it != first_seen.end() && ( walk.size() >= max_walk || coin( rng, 0.5 ) ) )
        {
            lasso w;
            for ( std::size_t i = 0; i < walk.size(); ++i )
                ( i < it->second ? w.prefix : w.cycle ).push_back( m.decode( walk[ i ] ) );
            return w;
        }
        if ( it == first_seen.end() )
            first_seen.emplace( next, walk.size() );
        walk.push_back( next );
    }
}

} // namespace ltlmc::random
