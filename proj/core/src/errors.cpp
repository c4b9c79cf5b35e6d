#include "ltlmc/errors.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace ltlmc
{

namespace
{

std::string describe_syntax( source_location where, const std::string& found,
                             const std::vector< std::string >& expected )
{
    if ( expected.empty() )
        return fmt::format( "{}:{}: unexpected {}", where.line, where.column, found );
    return fmt::format( "{}:{}: unexpected {}, expected one of: {}", where.line, where.column, found,
                        fmt::join( expected, " " ) );
}

} // namespace

syntax_error::syntax_error( source_location where, std::string found, std::vector< std::string > expected )
        : error( describe_syntax( where, found, expected ) ), _where{ where }, _found{ std::move( found ) },
          _expected{ std::move( expected ) }
{
}

unknown_operator::unknown_operator( source_location where, std::string text )
        : syntax_error( where, fmt::format( "unknown operator '{}'", text ), {} ), _text{ std::move( text ) }
{
}

semantic_error::semantic_error( source_location where, const std::string& message )
        : error( fmt::format( "{}:{}: {}", where.line, where.column, message ) ), _where{ where }
{
}

unbound_variable::unbound_variable( const std::string& variable )
        : error( fmt::format( "variable '{}' is not assigned in the state", variable ) )
{
}

state_space_limit::state_space_limit( std::size_t cap )
        : error( fmt::format( "state space exceeds the cap of {} states", cap ) ), _cap{ cap }
{
}

} // namespace ltlmc
