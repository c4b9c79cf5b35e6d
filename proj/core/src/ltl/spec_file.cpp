#include "ltlmc/errors.hpp"
#include "ltlmc/ltl.hpp"

#include <optional>

namespace ltlmc::ltl
{

namespace
{

std::string_view trim( std::string_view text )
{
    const auto first = text.find_first_not_of( " \t\r" );
    if ( first == std::string_view::npos )
        return {};
    const auto last = text.find_last_not_of( " \t\r" );
    return text.substr( first, last - first + 1 );
}

} // namespace

std::vector< named_formula > parse_spec_file( std::string_view text )
{
    std::vector< named_formula > out;
    std::optional< std::string > pending_name;
    std::size_t line_number = 0;

    while ( !text.empty() )
    {
        ++line_number;
        const auto newline = text.find( '\n' );
        auto line = text.substr( 0, newline );
        text = newline == std::string_view::npos ? std::string_view{} : text.substr( newline + 1 );

        auto code = line;
        if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
        {
            code = line.substr( 0, hash );
            const auto comment = trim( line.substr( hash + 1 ) );
            if ( trim( code ).empty() && is_identifier( comment ) )
                pending_name = std::string{ comment };
        }
        if ( trim( code ).empty() )
            continue;

        try
        {
            auto f = parse( code );
            auto name = pending_name.value_or( "phi" + std::to_string( out.size() + 1 ) );
            out.push_back( { std::move( name ), std::move( f ) } );
            pending_name.reset();
        }
        catch ( const unknown_operator& e )
        {
            throw unknown_operator( { line_number, e.where().column }, e.text() );
        }
        catch ( const syntax_error& e )
        {
            throw syntax_error( { line_number, e.where().column }, e.found(), e.expected() );
        }
    }
    return out;
}

std::string print_spec_file( const std::vector< named_formula >& specs )
{
    std::string out;
    for ( const auto& [ name, spec ] : specs )
        out += "# " + name + "\n" + pretty( spec ) + "\n";
    return out;
}

} // namespace ltlmc::ltl
