#include "ltlmc/automata.hpp"

#include <deque>
#include <map>

#include <fmt/format.h>

namespace ltlmc::automata
{

buchi degeneralize( const generalized_buchi& g )
{
    const auto sets = g.acceptance.size();
    const auto layers = std::max< std::size_t >( 1, sets );

    const auto in_set = [ & ]( std::size_t node, std::size_t layer ) {
        return sets == 0 || g.acceptance[ layer ].contains( node );
    };

    buchi out;
    std::map< std::pair< std::size_t, std::size_t >, std::size_t > ids;
    std::deque< std::pair< std::size_t, std::size_t > > queue;

    const auto intern = [ & ]( std::pair< std::size_t, std::size_t > key ) {
        auto [ it, fresh ] = ids.emplace( key, out.origin.size() );
        if ( fresh )
        {
            out.origin.push_back( key );
            out.transitions.emplace_back();
            queue.push_back( key );
        }
        return it->second;
    };

    out.start = intern( { g.start, 0 } );
    while ( !queue.empty() )
    {
        const auto [ node, layer ] = queue.front();
        queue.pop_front();
        const auto id = ids.at( { node, layer } );

        // The counter advances when leaving a node of the set it waits for.
        const auto next_layer = in_set( node, layer ) ? ( layer + 1 ) % layers : layer;
        if ( layer == 0 && in_set( node, 0 ) )
            out.accepting.insert( id );

        for ( const auto& e : g.transitions[ node ] )
        {
            const auto target = intern( { e.target, next_layer } );
            out.transitions[ id ].push_back( { e.label, target } );
        }
    }
    return out;
}

bool accepts_lasso( const buchi& a, const lasso& w )
{
    // Product node (automaton node, position about to be read).
    using product = std::pair< std::size_t, std::size_t >;

    const auto successors = [ & ]( const product& p ) {
        std::vector< product > out;
        const auto& letter = w.at( p.second );
        for ( const auto& e : a.transitions[ p.first ] )
            if ( satisfies( letter, e.label ) )
                out.emplace_back( e.target, w.successor( p.second ) );
        return out;
    };

    const auto reach = [ & ]( const std::vector< product >& roots ) {
        std::set< product > seen( roots.begin(), roots.end() );
        std::vector< product > stack( roots.begin(), roots.end() );
        while ( !stack.empty() )
        {
            const auto p = stack.back();
            stack.pop_back();
            for ( const auto& q : successors( p ) )
                if ( seen.insert( q ).second )
                    stack.push_back( q );
        }
        return seen;
    };

    const auto reachable = reach( { { a.start, 0 } } );
    for ( const auto& p : reachable )
    {
        if ( !a.accepting.contains( p.first ) )
            continue;
        if ( reach( successors( p ) ).contains( p ) )
            return true;
    }
    return false;
}

std::string to_text( const buchi& a )
{
    std::string out = fmt::format( "initial: {}\naccepting:", a.start );
    for ( const auto n : a.accepting )
        out += fmt::format( " {}", n );
    out += "\n";
    for ( std::size_t n = 0; n < a.transitions.size(); ++n )
        for ( const auto& e : a.transitions[ n ] )
            out += fmt::format( "{} -- {} --> {}\n", n, to_string( e.label ), e.target );
    return out;
}

std::string to_dot( const buchi& a, const std::string& name )
{
    std::string out = fmt::format( "digraph \"{}\" {{\n  rankdir=LR;\n  init [shape=point];\n", name );
    for ( std::size_t n = 0; n < a.transitions.size(); ++n )
        out += fmt::format( "  {} [shape={}];\n", n, a.accepting.contains( n ) ? "doublecircle" : "circle" );
    out += fmt::format( "  init -> {};\n", a.start );
    for ( std::size_t n = 0; n < a.transitions.size(); ++n )
        for ( const auto& e : a.transitions[ n ] )
            out += fmt::format( "  {} -> {} [label=\"{}\"];\n", n, e.target, to_string( e.label ) );
    return out + "}\n";
}

} // namespace ltlmc::automata
