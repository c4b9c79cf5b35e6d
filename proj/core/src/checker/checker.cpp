#include "ltlmc/checker.hpp"
#include "ltlmc/errors.hpp"

#include <chrono>
#include <cstdint>
#include <unordered_map>

#include <fmt/format.h>

namespace ltlmc::checker
{

namespace
{

std::vector< kripke::literal > compile( const kripke::model& m, const automata::guard& g )
{
    std::vector< kripke::literal > out;
    for ( const auto& l : g )
    {
        const auto var = m.variable_index( l.variable );
        if ( !var )
            throw unknown_atom( fmt::format( "variable '{}' is not declared by model '{}'", l.variable, m.name() ) );
        const auto value = m.variables()[ *var ].index_of( l.value );
        if ( !value )
            throw unknown_atom( fmt::format( "'{}' is not a value of '{}'", l.value, l.variable ) );
        out.push_back( { *var, *value, l.positive } );
    }
    return out;
}

// Synchronous product of a model and a Büchi automaton, built lazily.
// Product node (state, q) means: the run has just read `state` and sits in
// automaton node q.
class product
{
public:
    product( const kripke::model& m, const automata::buchi& a, std::size_t cap )
            : _model{ m }, _automaton{ a }, _cap{ cap }
    {
        _guards.resize( a.node_count() );
        for ( std::size_t q = 0; q < a.node_count(); ++q )
            for ( const auto& e : a.transitions[ q ] )
                _guards[ q ].push_back( compile( m, e.label ) );
    }

    [[nodiscard]] std::vector< std::size_t > roots()
    {
        std::vector< std::size_t > out;
        for ( const auto& s : _model.initial() )
            step_into( intern_state( s ), _automaton.start, out );
        return out;
    }

    [[nodiscard]] const std::vector< std::size_t >& successors( std::size_t node )
    {
        if ( !_successors[ node ] )
        {
            std::vector< std::size_t > out;
            const auto [ state, q ] = _nodes[ node ];
            for ( const auto next : model_successors( state ) )
                step_into( next, q, out );
            _successors[ node ] = std::move( out );
        }
        return *_successors[ node ];
    }

    [[nodiscard]] bool accepting( std::size_t node ) const
    {
        return _automaton.accepting.contains( _nodes[ node ].second );
    }

    [[nodiscard]] const kripke::state_code& model_state( std::size_t node ) const
    {
        return _states[ _nodes[ node ].first ];
    }
    [[nodiscard]] std::size_t automaton_node( std::size_t node ) const { return _nodes[ node ].second; }
    [[nodiscard]] std::size_t size() const { return _nodes.size(); }

private:
    std::size_t intern_state( const kripke::state_code& s )
    {
        auto [ it, fresh ] = _state_ids.emplace( s, _states.size() );
        if ( fresh )
        {
            _states.push_back( s );
            _state_successors.emplace_back();
        }
        return it->second;
    }

    const std::vector< std::size_t >& model_successors( std::size_t state )
    {
        if ( !_state_successors[ state ] )
        {
            std::vector< std::size_t > out;
            for ( const auto& next : _model.successors( _states[ state ] ) )
                out.push_back( intern_state( next ) );
            _state_successors[ state ] = std::move( out );
        }
        return *_state_successors[ state ];
    }

    // Appends the product nodes reached by reading `state` from automaton
    // node q.
    void step_into( std::size_t state, std::size_t q, std::vector< std::size_t >& out )
    {
        const auto& edges = _automaton.transitions[ q ];
        for ( std::size_t i = 0; i < edges.size(); ++i )
        {
            const auto& lits = _guards[ q ][ i ];
            const auto& code = _states[ state ];
            const bool enabled = std::all_of( lits.begin(), lits.end(),
                                              [ & ]( const kripke::literal& l ) { return l.holds( code ); } );
            if ( enabled )
                out.push_back( intern_node( state, edges[ i ].target ) );
        }
    }

    std::size_t intern_node( std::size_t state, std::size_t q )
    {
        const auto key = static_cast< std::uint64_t >( state ) * _automaton.node_count() + q;
        auto [ it, fresh ] = _node_ids.emplace( key, _nodes.size() );
        if ( fresh )
        {
            if ( _nodes.size() >= _cap )
                throw state_space_limit( _cap );
            _nodes.emplace_back( state, q );
            _successors.emplace_back();
        }
        return it->second;
    }

    const kripke::model& _model;
    const automata::buchi& _automaton;
    std::size_t _cap;
    std::vector< std::vector< std::vector< kripke::literal > > > _guards;

    std::vector< kripke::state_code > _states;
    std::unordered_map< kripke::state_code, std::size_t, kripke::state_code_hash > _state_ids;
    std::vector< std::optional< std::vector< std::size_t > > > _state_successors;

    std::vector< std::pair< std::size_t, std::size_t > > _nodes;
    std::unordered_map< std::uint64_t, std::size_t > _node_ids;
    std::vector< std::optional< std::vector< std::size_t > > > _successors;
};

struct frame
{
    std::size_t node;
    std::size_t next_child = 0;
};

// Inner search of the nested DFS: looks for a path from seed back to seed,
// skipping nodes flagged by earlier inner searches. Returns the path
// seed .. x where x -> seed, or empty.
std::vector< std::size_t > find_cycle( product& p, std::size_t seed, std::vector< char >& flagged )
{
    std::vector< frame > stack{ { seed } };
    while ( !stack.empty() )
    {
        auto& top = stack.back();
        const auto& next = p.successors( top.node );
        if ( top.next_child == next.size() )
        {
            stack.pop_back();
            continue;
        }

        const auto child = next[ top.next_child++ ];
        if ( child == seed )
        {
            std::vector< std::size_t > path;
            for ( const auto& f : stack )
                path.push_back( f.node );
            return path;
        }
        if ( flagged.size() <= child )
            flagged.resize( p.size(), 0 );
        if ( !flagged[ child ] )
        {
            flagged[ child ] = 1;
            stack.push_back( { child } );
        }
    }
    return {};
}

} // namespace

std::string_view to_string( check_mode mode )
{
    return mode == check_mode::as_written ? "as-written" : "globally-wrapped";
}

std::optional< check_mode > parse_mode( std::string_view text )
{
    if ( text == "as-written" )
        return check_mode::as_written;
    if ( text == "globally-wrapped" )
        return check_mode::globally_wrapped;
    return std::nullopt;
}

ltl::formula effective_formula( const ltl::formula& f, check_mode mode )
{
    return mode == check_mode::globally_wrapped ? ltl::wrap_globally( f ) : f;
}

void validate_atoms( const kripke::model& m, const ltl::formula& f )
{
    for ( const auto& [ variable, value ] : ltl::atoms( f ) )
    {
        const auto var = m.variable_index( variable );
        if ( !var )
            throw unknown_atom( fmt::format( "variable '{}' is not declared by model '{}'", variable, m.name() ) );
        if ( !m.variables()[ *var ].index_of( value ) )
            throw unknown_atom( fmt::format( "'{}' is not a value of '{}'", value, variable ) );
    }
}

search_result product_search( const kripke::model& m, const automata::buchi& a, std::size_t cap )
{
    product p{ m, a, cap };
    std::vector< char > visited;
    std::vector< char > flagged;

    const auto mark = [ & ]( std::size_t node ) {
        if ( visited.size() <= node )
            visited.resize( p.size(), 0 );
        if ( visited[ node ] )
            return false;
        visited[ node ] = 1;
        return true;
    };

    for ( const auto root : p.roots() )
    {
        if ( !mark( root ) )
            continue;

        std::vector< frame > stack{ { root } };
        while ( !stack.empty() )
        {
            auto& top = stack.back();
            const auto& next = p.successors( top.node );
            if ( top.next_child < next.size() )
            {
                const auto child = next[ top.next_child++ ];
                if ( mark( child ) )
                    stack.push_back( { child } );
                continue;
            }

            // Postorder: seed an inner search from accepting nodes.
            const auto seed = top.node;
            if ( p.accepting( seed ) )
            {
                auto cycle = find_cycle( p, seed, flagged );
                if ( !cycle.empty() )
                {
                    lasso raw;
                    product_trace trace;
                    for ( std::size_t i = 0; i + 1 < stack.size(); ++i )
                    {
                        raw.prefix.push_back( m.decode( p.model_state( stack[ i ].node ) ) );
                        trace.prefix_nodes.push_back( p.automaton_node( stack[ i ].node ) );
                    }
                    for ( const auto node : cycle )
                    {
                        raw.cycle.push_back( m.decode( p.model_state( node ) ) );
                        trace.cycle_nodes.push_back( p.automaton_node( node ) );
                    }
                    return { normalize( std::move( raw ) ), std::move( trace ), p.size() };
                }
            }
            stack.pop_back();
        }
    }
    return { std::nullopt, std::nullopt, p.size() };
}

verdict check( const kripke::model& m, const ltl::formula& f, check_mode mode, const check_options& options )
{
    const auto started = std::chrono::steady_clock::now();

    validate_atoms( m, f );
    const auto target = effective_formula( f, mode );
    const auto negated = automata::translate( ltl::formula::negation( target ) );
    auto found = product_search( m, negated, options.state_cap );

    verdict out;
    out.holds = !found.witness.has_value();
    out.counterexample = std::move( found.witness );
    out.debug = std::move( found.trace );
    out.stats.product_states = found.product_states;

    if ( out.holds && options.detect_vacuity && f.is( ltl::op::implication ) )
    {
        // The antecedent never fires iff its negation holds under the same mode.
        auto nested = options;
        nested.detect_vacuity = false;
        out.vacuous = check( m, ltl::formula::negation( f.lhs() ), mode, nested ).holds;
    }

    out.stats.elapsed_seconds = std::chrono::duration< double >( std::chrono::steady_clock::now() - started ).count();
    return out;
}

validation verify_counterexample( const kripke::model& m, const ltl::formula& f, check_mode mode, const lasso& w )
{
    if ( w.cycle.empty() )
        return { false, "empty cycle" };

    std::vector< kripke::state_code > codes;
    for ( std::size_t i = 0; i < w.size(); ++i )
    {
        auto code = m.encode( w.at( i ) );
        if ( !code )
            return { false, fmt::format( "invalid state at position {}", i ) };
        codes.push_back( std::move( *code ) );
    }

    if ( !m.is_initial( codes.front() ) )
        return { false, "not initial" };

    for ( std::size_t i = 0; i < codes.size(); ++i )
        if ( !m.has_edge( codes[ i ], codes[ w.successor( i ) ] ) )
            return { false, fmt::format( "broken transition at position {}", i ) };

    try
    {
        if ( ltl::eval_lasso( effective_formula( f, mode ), w ) )
            return { false, "not violating" };
    }
    catch ( const unbound_variable& e )
    {
        return { false, e.what() };
    }
    return { true, {} };
}

} // namespace ltlmc::checker
