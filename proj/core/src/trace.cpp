#include "ltlmc/trace.hpp"

#include <algorithm>
#include <cassert>

#include <fmt/format.h>

namespace ltlmc
{

lasso normalize( lasso w )
{
    assert( !w.cycle.empty() );

    while ( !w.prefix.empty() && w.prefix.back() == w.cycle.back() )
    {
        std::rotate( w.cycle.rbegin(), w.cycle.rbegin() + 1, w.cycle.rend() );
        w.prefix.pop_back();
    }

    const auto length = w.cycle.size();
    for ( std::size_t period = 1; period < length; ++period )
    {
        if ( length % period != 0 )
            continue;

        bool repeats = true;
        for ( std::size_t i = period; i < length && repeats; ++i )
            repeats = w.cycle[ i ] == w.cycle[ i - period ];

        if ( repeats )
        {
            w.cycle.resize( period );
            break;
        }
    }

    return w;
}

std::string to_string( const state& s )
{
    std::string out = "{";
    bool first = true;
    for ( const auto& [ name, value ] : s )
    {
        out += fmt::format( "{}{}={}", first ? "" : ", ", name, value );
        first = false;
    }
    return out + "}";
}

} // namespace ltlmc
