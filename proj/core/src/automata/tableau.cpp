#include "ltlmc/automata.hpp"
#include "ltlmc/errors.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace ltlmc::automata
{

namespace
{

using ltl::formula;
using ltl::op;
using index_set = std::set< std::size_t >;

// On-the-fly tableau over closure indices. A node carries the obligations
// still to expand (pending), those already satisfied at this position
// (now) and those deferred to the successor (next).
class tableau
{
public:
    explicit tableau( const formula& f ) : _closure{ ltl::closure( f ) }
    {
        for ( std::size_t i = 0; i < _closure.size(); ++i )
            _index.emplace( _closure[ i ], i );
    }

    generalized_buchi run()
    {
        expand( { { start_id }, { 0 }, {}, {} } );

        generalized_buchi g;
        g.transitions.resize( _nodes.size() + 1 );
        for ( std::size_t n = 0; n < _nodes.size(); ++n )
        {
            const auto id = n + 1;
            const auto label = label_of( _nodes[ n ].now );
            for ( const auto source : _nodes[ n ].incoming )
                g.transitions[ source ].push_back( { label, id } );
        }
        for ( auto& edges : g.transitions )
            std::sort( edges.begin(), edges.end(), []( const edge& a, const edge& b ) { return a.target < b.target; } );

        for ( std::size_t i = 0; i < _closure.size(); ++i )
        {
            const auto& u = _closure[ i ];
            if ( !u.is( op::until ) && !u.is( op::eventually ) )
                continue;
            const auto goal = _index.at( u.is( op::until ) ? u.rhs() : u.operand() );

            std::set< std::size_t > accepting;
            for ( std::size_t n = 0; n < _nodes.size(); ++n )
            {
                const auto& now = _nodes[ n ].now;
                if ( !now.contains( i ) || now.contains( goal ) )
                    accepting.insert( n + 1 );
            }
            g.acceptance.push_back( std::move( accepting ) );
            g.eventualities.push_back( u );
        }
        return g;
    }

private:
    static constexpr std::size_t start_id = 0;

    struct node
    {
        index_set incoming;
        index_set pending;
        index_set now;
        index_set next;
    };

    [[nodiscard]] const formula& at( std::size_t i ) const { return _closure[ i ]; }

    // Adds a formula to `pending` unless already discharged at this position.
    void schedule( node& n, const formula& f ) const
    {
        const auto i = _index.at( f );
        if ( !n.now.contains( i ) )
            n.pending.insert( i );
    }

    [[nodiscard]] bool contradicts( const node& n, const formula& lit ) const
    {
        if ( lit.is( op::constant_false ) )
            return true;
        if ( lit.is( op::constant_true ) )
            return false;

        for ( const auto i : n.now )
        {
            const auto& other = at( i );
            if ( lit.is( op::atom ) )
            {
                if ( other.is( op::atom ) && other.variable() == lit.variable() && other.value() != lit.value() )
                    return true;
                if ( other.is( op::negation ) && other.operand() == lit )
                    return true;
            }
            else if ( other == lit.operand() )
                return true;
        }
        return false;
    }

    void expand( node n )
    {
        if ( n.pending.empty() )
        {
            const auto it = std::find_if( _nodes.begin(), _nodes.end(), [ & ]( const node& existing ) {
                return existing.now == n.now && existing.next == n.next;
            } );
            if ( it != _nodes.end() )
            {
                it->incoming.insert( n.incoming.begin(), n.incoming.end() );
                return;
            }

            _nodes.push_back( n );
            const auto id = _nodes.size(); // start node occupies id 0
            expand( { { id }, n.next, {}, {} } );
            return;
        }

        const auto current = *n.pending.begin();
        n.pending.erase( n.pending.begin() );
        const auto& f = at( current );

        if ( f.is_literal() )
        {
            if ( contradicts( n, f ) )
                return;
            n.now.insert( current );
            expand( std::move( n ) );
            return;
        }

        n.now.insert( current );
        switch ( f.kind() )
        {
        case op::conjunction:
            schedule( n, f.lhs() );
            schedule( n, f.rhs() );
            expand( std::move( n ) );
            return;
        case op::next:
            n.next.insert( _index.at( f.operand() ) );
            expand( std::move( n ) );
            return;
        case op::globally:
            // G a == a & X G a
            schedule( n, f.operand() );
            n.next.insert( current );
            expand( std::move( n ) );
            return;
        case op::disjunction:
        {
            auto left = n;
            schedule( left, f.lhs() );
            schedule( n, f.rhs() );
            expand( std::move( left ) );
            expand( std::move( n ) );
            return;
        }
        case op::until:
        {
            // a U b == b | (a & X (a U b))
            auto waiting = n;
            schedule( waiting, f.lhs() );
            waiting.next.insert( current );
            schedule( n, f.rhs() );
            expand( std::move( waiting ) );
            expand( std::move( n ) );
            return;
        }
        case op::eventually:
        {
            // F a == a | X F a
            auto waiting = n;
            waiting.next.insert( current );
            schedule( n, f.operand() );
            expand( std::move( waiting ) );
            expand( std::move( n ) );
            return;
        }
        case op::release:
        {
            // a R b == (a & b) | (b & X (a R b))
            auto waiting = n;
            schedule( waiting, f.rhs() );
            waiting.next.insert( current );
            schedule( n, f.lhs() );
            schedule( n, f.rhs() );
            expand( std::move( waiting ) );
            expand( std::move( n ) );
            return;
        }
        default:
            throw not_in_nnf( fmt::format( "unexpected operator in {}", ltl::pretty( f ) ) );
        }
    }

    [[nodiscard]] guard label_of( const index_set& now ) const
    {
        guard out;
        for ( const auto i : now )
        {
            const auto& f = at( i );
            if ( f.is( op::atom ) )
                out.push_back( { f.variable(), f.value(), true } );
            else if ( f.is( op::negation ) )
                out.push_back( { f.operand().variable(), f.operand().value(), false } );
        }
        std::sort( out.begin(), out.end() );
        return out;
    }

    std::vector< formula > _closure;
    std::map< formula, std::size_t > _index;
    std::vector< node > _nodes;
};

} // namespace

bool guard_literal::holds( const state& s ) const
{
    const auto it = s.find( variable );
    if ( it == s.end() )
        throw unbound_variable( variable );
    return ( it->second == value ) == positive;
}

bool satisfies( const state& s, const guard& g )
{
    return std::all_of( g.begin(), g.end(), [ & ]( const guard_literal& l ) { return l.holds( s ); } );
}

bool is_consistent( const guard& g )
{
    for ( const auto& a : g )
        for ( const auto& b : g )
        {
            if ( a.variable != b.variable )
                continue;
            if ( a.positive && b.positive && a.value != b.value )
                return false;
            if ( a.positive != b.positive && a.value == b.value )
                return false;
        }
    return true;
}

std::string to_string( const guard& g )
{
    if ( g.empty() )
        return "true";
    std::string out;
    for ( const auto& l : g )
        out += fmt::format( "{}{} {} {}", out.empty() ? "" : " & ", l.variable, l.positive ? "=" : "!=", l.value );
    return out;
}

generalized_buchi translate_gba( const ltl::formula& f )
{
    if ( !ltl::is_nnf( f ) )
        throw not_in_nnf( fmt::format( "formula is not in negation normal form: {}", ltl::pretty( f ) ) );
    return tableau{ f }.run();
}

buchi translate( const ltl::formula& f )
{
    return degeneralize( translate_gba( ltl::to_nnf( f ) ) );
}

} // namespace ltlmc::automata
