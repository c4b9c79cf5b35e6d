#include "ltlmc/errors.hpp"
#include "ltlmc/ltl.hpp"

#include <algorithm>
#include <cassert>

#include <fmt/format.h>

namespace ltlmc::ltl
{

struct formula::node
{
    op kind;
    std::string variable;
    std::string value;
    formula lhs;
    formula rhs;
    std::size_t size;
    std::size_t height;
};

namespace
{

const std::string empty_name;

} // namespace

bool is_unary( op o )
{
    return o == op::negation || o == op::next || o == op::eventually || o == op::globally;
}

bool is_binary( op o )
{
    switch ( o )
    {
    case op::conjunction:
    case op::disjunction:
    case op::implication:
    case op::until:
    case op::weak_until:
    case op::release:
        return true;
    default:
        return false;
    }
}

bool is_identifier( std::string_view text )
{
    if ( text.empty() )
        return false;
    const auto alpha = []( char c ) { return ( c >= 'a' && c <= 'z' ) || ( c >= 'A' && c <= 'Z' ) || c == '_'; };
    const auto digit = []( char c ) { return c >= '0' && c <= '9'; };
    if ( !alpha( text.front() ) )
        return false;
    return std::all_of( text.begin() + 1, text.end(), [ & ]( char c ) { return alpha( c ) || digit( c ); } );
}

formula::formula( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}

formula::formula() : formula( truth() ) {}

formula formula::truth()
{
    static const formula instance{ std::make_shared< const node >(
            node{ op::constant_true, {}, {}, formula{ nullptr }, formula{ nullptr }, 1, 1 } ) };
    return instance;
}

formula formula::falsity()
{
    static const formula instance{ std::make_shared< const node >(
            node{ op::constant_false, {}, {}, formula{ nullptr }, formula{ nullptr }, 1, 1 } ) };
    return instance;
}

formula formula::atom( std::string variable, std::string value )
{
    if ( !is_identifier( variable ) || !is_identifier( value ) )
        throw error( fmt::format( "atom '{} = {}' does not name identifiers", variable, value ) );
    return formula{ std::make_shared< const node >( node{ op::atom, std::move( variable ), std::move( value ),
                                                          formula{ nullptr }, formula{ nullptr }, 1, 1 } ) };
}

formula formula::unary( op o, formula f )
{
    assert( is_unary( o ) );
    const auto size = f.node_count() + 1;
    const auto height = f.depth() + 1;
    return formula{ std::make_shared< const node >(
            node{ o, {}, {}, std::move( f ), formula{ nullptr }, size, height } ) };
}

formula formula::binary( op o, formula lhs, formula rhs )
{
    assert( is_binary( o ) );
    const auto size = lhs.node_count() + rhs.node_count() + 1;
    const auto height = std::max( lhs.depth(), rhs.depth() ) + 1;
    return formula{ std::make_shared< const node >(
            node{ o, {}, {}, std::move( lhs ), std::move( rhs ), size, height } ) };
}

formula formula::negation( formula f ) { return unary( op::negation, std::move( f ) ); }
formula formula::next( formula f ) { return unary( op::next, std::move( f ) ); }
formula formula::eventually( formula f ) { return unary( op::eventually, std::move( f ) ); }
formula formula::globally( formula f ) { return unary( op::globally, std::move( f ) ); }

formula formula::conjunction( formula l, formula r ) { return binary( op::conjunction, std::move( l ), std::move( r ) ); }
formula formula::disjunction( formula l, formula r ) { return binary( op::disjunction, std::move( l ), std::move( r ) ); }
formula formula::implication( formula l, formula r ) { return binary( op::implication, std::move( l ), std::move( r ) ); }
formula formula::until( formula l, formula r ) { return binary( op::until, std::move( l ), std::move( r ) ); }
formula formula::weak_until( formula l, formula r ) { return binary( op::weak_until, std::move( l ), std::move( r ) ); }
formula formula::release( formula l, formula r ) { return binary( op::release, std::move( l ), std::move( r ) ); }

op formula::kind() const { return _node->kind; }

bool formula::is_literal() const
{
    switch ( kind() )
    {
    case op::constant_true:
    case op::constant_false:
    case op::atom:
        return true;
    case op::negation:
        return operand().is( op::atom );
    default:
        return false;
    }
}

const std::string& formula::variable() const { return is( op::atom ) ? _node->variable : empty_name; }
const std::string& formula::value() const { return is( op::atom ) ? _node->value : empty_name; }

const formula& formula::operand() const
{
    assert( is_unary( kind() ) );
    return _node->lhs;
}

const formula& formula::lhs() const
{
    assert( is_binary( kind() ) );
    return _node->lhs;
}

const formula& formula::rhs() const
{
    assert( is_binary( kind() ) );
    return _node->rhs;
}

std::size_t formula::node_count() const { return _node->size; }
std::size_t formula::depth() const { return _node->height; }

std::strong_ordering operator<=>( const formula& a, const formula& b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;
    if ( auto c = a.kind() <=> b.kind(); c != 0 )
        return c;

    switch ( a.kind() )
    {
    case op::constant_true:
    case op::constant_false:
        return std::strong_ordering::equal;
    case op::atom:
        if ( auto c = a.variable() <=> b.variable(); c != 0 )
            return c;
        return a.value() <=> b.value();
    default:
        break;
    }

    if ( is_unary( a.kind() ) )
        return a.operand() <=> b.operand();
    if ( auto c = a.lhs() <=> b.lhs(); c != 0 )
        return c;
    return a.rhs() <=> b.rhs();
}

bool operator==( const formula& a, const formula& b ) { return ( a <=> b ) == 0; }

formula wrap_globally( const formula& f ) { return formula::globally( f ); }

std::vector< formula > closure( const formula& f )
{
    std::vector< formula > out;
    std::set< formula > seen;

    std::vector< formula > stack{ f };
    while ( !stack.empty() )
    {
        auto g = stack.back();
        stack.pop_back();
        if ( !seen.insert( g ).second )
            continue;
        out.push_back( g );

        if ( is_unary( g.kind() ) )
            stack.push_back( g.operand() );
        else if ( is_binary( g.kind() ) )
        {
            stack.push_back( g.rhs() );
            stack.push_back( g.lhs() );
        }
    }
    return out;
}

atom_set atoms( const formula& f )
{
    atom_set out;
    for ( const auto& g : closure( f ) )
        if ( g.is( op::atom ) )
            out.emplace( g.variable(), g.value() );
    return out;
}

} // namespace ltlmc::ltl
