#include "ltlmc/kripke.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include <fmt/format.h>

namespace ltlmc::kripke
{

std::optional< std::size_t > variable_decl::index_of( std::string_view value ) const
{
    const auto it = std::find( domain.begin(), domain.end(), value );
    if ( it == domain.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - domain.begin() );
}

std::size_t state_code_hash::operator()( const state_code& code ) const noexcept
{
    // FNV-1a over the index values.
    std::size_t h = 14695981039346656037ull;
    for ( const auto v : code )
    {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

bool transition_rule::enabled( const state_code& s ) const
{
    return std::all_of( guard.begin(), guard.end(), [ & ]( const literal& l ) { return l.holds( s ); } );
}

model::model( std::string name, std::vector< variable_decl > variables, std::vector< state_code > initial,
              std::vector< transition_rule > rules )
        : _name{ std::move( name ) }, _variables{ std::move( variables ) }, _initial{ std::move( initial ) },
          _rules{ std::move( rules ) }
{
    std::sort( _initial.begin(), _initial.end() );
    _initial.erase( std::unique( _initial.begin(), _initial.end() ), _initial.end() );
}

std::optional< std::size_t > model::variable_index( std::string_view name ) const
{
    for ( std::size_t i = 0; i < _variables.size(); ++i )
        if ( _variables[ i ].name == name )
            return i;
    return std::nullopt;
}

std::vector< state_code > model::successors( const state_code& s ) const
{
    std::set< state_code > out;

    for ( const auto& rule : _rules )
    {
        if ( !rule.enabled( s ) )
            continue;

        // Cartesian product of the update value sets, frame rule elsewhere.
        std::vector< state_code > frontier{ s };
        for ( const auto& u : rule.updates )
        {
            std::vector< state_code > expanded;
            expanded.reserve( frontier.size() * u.values.size() );
            for ( const auto& partial : frontier )
                for ( const auto v : u.values )
                {
                    auto next = partial;
                    next[ u.variable ] = static_cast< std::uint16_t >( v );
                    expanded.push_back( std::move( next ) );
                }
            frontier = std::move( expanded );
        }
        out.insert( frontier.begin(), frontier.end() );
    }

    if ( out.empty() && _stutter.contains( s ) )
        out.insert( s );

    return { out.begin(), out.end() };
}

bool model::has_edge( const state_code& from, const state_code& to ) const
{
    const auto next = successors( from );
    return std::binary_search( next.begin(), next.end(), to );
}

bool model::is_initial( const state_code& s ) const
{
    return std::binary_search( _initial.begin(), _initial.end(), s );
}

ltlmc::state model::decode( const state_code& s ) const
{
    ltlmc::state out;
    for ( std::size_t i = 0; i < _variables.size(); ++i )
        out.emplace( _variables[ i ].name, _variables[ i ].domain.at( s.at( i ) ) );
    return out;
}

std::optional< state_code > model::encode( const ltlmc::state& s ) const
{
    if ( s.size() != _variables.size() )
        return std::nullopt;

    state_code out( _variables.size() );
    for ( std::size_t i = 0; i < _variables.size(); ++i )
    {
        const auto it = s.find( _variables[ i ].name );
        if ( it == s.end() )
            return std::nullopt;
        const auto index = _variables[ i ].index_of( it->second );
        if ( !index )
            return std::nullopt;
        out[ i ] = static_cast< std::uint16_t >( *index );
    }
    return out;
}

model model::with_stutter( std::set< state_code > extra ) const
{
    auto copy = *this;
    copy._stutter.merge( extra );
    return copy;
}

std::vector< ltlmc::state > successors( const model& m, const ltlmc::state& s )
{
    const auto code = m.encode( s );
    if ( !code )
        throw error( fmt::format( "{} is not a state of model '{}'", to_string( s ), m.name() ) );

    std::vector< ltlmc::state > out;
    for ( const auto& next : m.successors( *code ) )
        out.push_back( m.decode( next ) );
    return out;
}

std::vector< state_code > reachable_codes( const model& m, std::size_t cap )
{
    std::vector< state_code > order;
    std::unordered_set< state_code, state_code_hash > seen;
    std::deque< state_code > queue;

    const auto visit = [ & ]( const state_code& s ) {
        if ( !seen.insert( s ).second )
            return;
        if ( seen.size() > cap )
            throw state_space_limit( cap );
        order.push_back( s );
        queue.push_back( s );
    };

    for ( const auto& s : m.initial() )
        visit( s );

    while ( !queue.empty() )
    {
        const auto s = std::move( queue.front() );
        queue.pop_front();
        for ( const auto& next : m.successors( s ) )
            visit( next );
    }
    return order;
}

std::vector< ltlmc::state > reachable_states( const model& m, std::size_t cap )
{
    std::vector< ltlmc::state > out;
    for ( const auto& code : reachable_codes( m, cap ) )
        out.push_back( m.decode( code ) );
    return out;
}

totalize_result totalize( const model& m, std::size_t cap )
{
    std::set< state_code > deadlocks;
    for ( const auto& s : reachable_codes( m, cap ) )
        if ( m.successors( s ).empty() )
            deadlocks.insert( s );

    totalize_result result{ m.with_stutter( deadlocks ), {} };
    for ( const auto& s : deadlocks )
        result.self_looped.push_back( m.decode( s ) );
    return result;
}

} // namespace ltlmc::kripke
