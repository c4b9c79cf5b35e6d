#include "ltlmc/kripke.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include <fmt/format.h>

namespace ltlmc::kripke
{

namespace
{

enum class tok
{
    identifier,
    kw_var,
    kw_init,
    kw_trans,
    kw_next,
    kw_in,
    kw_true,
    colon,
    semicolon,
    comma,
    lbrace,
    rbrace,
    lparen,
    rparen,
    equal,
    not_equal,
    amp,
    arrow,
    end,
};

struct token
{
    tok kind;
    std::string text;
    source_location where;
};

std::vector< token > lex( std::string_view text )
{
    std::vector< token > out;
    source_location loc;
    std::size_t pos = 0;

    const auto advance = [ & ] {
        if ( text[ pos ] == '\n' )
        {
            ++loc.line;
            loc.column = 1;
        }
        else
            ++loc.column;
        ++pos;
    };
    const auto peek = [ & ]( std::size_t ahead = 0 ) {
        return pos + ahead < text.size() ? text[ pos + ahead ] : '\0';
    };

    while ( true )
    {
        while ( pos < text.size() )
        {
            if ( std::isspace( static_cast< unsigned char >( text[ pos ] ) ) )
                advance();
            else if ( text[ pos ] == '#' )
                while ( pos < text.size() && text[ pos ] != '\n' )
                    advance();
            else
                break;
        }

        const auto where = loc;
        if ( pos >= text.size() )
        {
            out.push_back( { tok::end, "", where } );
            return out;
        }

        const char c = text[ pos ];
        if ( std::isalpha( static_cast< unsigned char >( c ) ) || c == '_' )
        {
            const auto start = pos;
            while ( pos < text.size()
                    && ( std::isalnum( static_cast< unsigned char >( text[ pos ] ) ) || text[ pos ] == '_' ) )
                advance();
            std::string word{ text.substr( start, pos - start ) };
            auto kind = tok::identifier;
            if ( word == "var" ) kind = tok::kw_var;
            else if ( word == "init" ) kind = tok::kw_init;
            else if ( word == "trans" ) kind = tok::kw_trans;
            else if ( word == "next" ) kind = tok::kw_next;
            else if ( word == "in" ) kind = tok::kw_in;
            else if ( word == "true" ) kind = tok::kw_true;
            out.push_back( { kind, std::move( word ), where } );
            continue;
        }

        auto single = [ & ]( tok kind, const char* spelling ) {
            advance();
            out.push_back( { kind, spelling, where } );
        };

        switch ( c )
        {
        case ':': single( tok::colon, ":" ); break;
        case ';': single( tok::semicolon, ";" ); break;
        case ',': single( tok::comma, "," ); break;
        case '{': single( tok::lbrace, "{" ); break;
        case '}': single( tok::rbrace, "}" ); break;
        case '(': single( tok::lparen, "(" ); break;
        case ')': single( tok::rparen, ")" ); break;
        case '=': single( tok::equal, "=" ); break;
        case '&': single( tok::amp, "&" ); break;
        case '!':
            if ( peek( 1 ) != '=' )
                throw syntax_error( where, "'!'", { "!=" } );
            advance();
            single( tok::not_equal, "!=" );
            break;
        case '-':
            if ( peek( 1 ) != '>' )
                throw syntax_error( where, "'-'", { "->" } );
            advance();
            single( tok::arrow, "->" );
            break;
        default:
            throw syntax_error( where, fmt::format( "character '{}'", c ), {} );
        }
    }
}

std::string describe( const token& t )
{
    return t.kind == tok::end ? "end of input" : "'" + t.text + "'";
}

class parser
{
public:
    parser( std::vector< token > tokens, std::string name )
            : _tokens{ std::move( tokens ) }, _name{ std::move( name ) }
    {
    }

    model run()
    {
        while ( current().kind == tok::kw_var )
            declaration();

        expect( tok::kw_init, current().kind == tok::kw_var ? "var" : "var | init" );
        auto initial = initial_states();

        std::vector< transition_rule > rules;
        do
        {
            expect( tok::kw_trans, "trans" );
            rules.push_back( rule() );
        } while ( current().kind == tok::kw_trans );

        if ( current().kind != tok::end )
            fail( { "trans", "end of input" } );

        return model{ _name, std::move( _variables ), std::move( initial ), std::move( rules ) };
    }

private:
    [[nodiscard]] const token& current() const { return _tokens[ _index ]; }
    const token& take() { return _tokens[ _index++ ]; }

    [[noreturn]] void fail( std::vector< std::string > expected ) const
    {
        throw syntax_error( current().where, describe( current() ), std::move( expected ) );
    }

    const token& expect( tok kind, const std::string& spelling )
    {
        if ( current().kind != kind )
            fail( { spelling } );
        return take();
    }

    const token& identifier() { return expect( tok::identifier, "identifier" ); }

    void declaration()
    {
        take();
        const auto& name = identifier();
        if ( std::any_of( _variables.begin(), _variables.end(), [ & ]( auto& v ) { return v.name == name.text; } ) )
            throw semantic_error( name.where, fmt::format( "duplicate variable '{}'", name.text ) );

        expect( tok::colon, ":" );
        const auto& open = expect( tok::lbrace, "{" );

        variable_decl decl{ name.text, {} };
        if ( current().kind == tok::rbrace )
            throw semantic_error( open.where, fmt::format( "variable '{}' has an empty domain", name.text ) );

        while ( true )
        {
            const auto& value = identifier();
            if ( decl.index_of( value.text ) )
                throw semantic_error( value.where,
                                      fmt::format( "duplicate value '{}' in domain of '{}'", value.text, name.text ) );
            decl.domain.push_back( value.text );
            if ( current().kind == tok::rbrace )
                break;
            expect( tok::comma, ", | }" );
        }
        take();
        expect( tok::semicolon, ";" );

        if ( decl.domain.size() > std::numeric_limits< std::uint16_t >::max() )
            throw semantic_error( name.where, fmt::format( "domain of '{}' is too large", name.text ) );
        _variables.push_back( std::move( decl ) );
    }

    std::size_t variable( const token& t ) const
    {
        for ( std::size_t i = 0; i < _variables.size(); ++i )
            if ( _variables[ i ].name == t.text )
                return i;
        throw semantic_error( t.where, fmt::format( "undeclared variable '{}'", t.text ) );
    }

    std::size_t value( std::size_t var, const token& t ) const
    {
        if ( auto index = _variables[ var ].index_of( t.text ) )
            return *index;
        throw semantic_error( t.where, fmt::format( "'{}' is not in the domain of '{}'", t.text,
                                                    _variables[ var ].name ) );
    }

    literal lit()
    {
        const auto& name = identifier();
        const auto var = variable( name );
        bool positive = true;
        if ( current().kind == tok::not_equal )
            positive = false;
        else if ( current().kind != tok::equal )
            fail( { "=", "!=" } );
        take();
        return { var, value( var, identifier() ), positive };
    }

    // `true` or `lit (& lit)*`
    std::vector< literal > conjunction()
    {
        if ( current().kind == tok::kw_true )
        {
            take();
            return {};
        }
        std::vector< literal > out{ lit() };
        while ( current().kind == tok::amp )
        {
            take();
            out.push_back( lit() );
        }
        return out;
    }

    std::vector< state_code > initial_states()
    {
        const auto where = current().where;
        const auto constraint = conjunction();
        expect( tok::semicolon, "; | &" );

        std::vector< std::vector< std::uint16_t > > allowed( _variables.size() );
        std::size_t count = 1;
        for ( std::size_t v = 0; v < _variables.size(); ++v )
        {
            for ( std::size_t x = 0; x < _variables[ v ].domain.size(); ++x )
            {
                const bool ok = std::all_of( constraint.begin(), constraint.end(), [ & ]( const literal& l ) {
                    return l.variable != v || ( ( l.value == x ) == l.positive );
                } );
                if ( ok )
                    allowed[ v ].push_back( static_cast< std::uint16_t >( x ) );
            }
            if ( allowed[ v ].empty() )
                throw semantic_error( where, "init denotes the empty set of states" );
            count *= allowed[ v ].size();
            if ( count > default_state_cap )
                throw state_space_limit( default_state_cap );
        }

        std::vector< state_code > states{ state_code{} };
        for ( const auto& values : allowed )
        {
            std::vector< state_code > expanded;
            for ( const auto& partial : states )
                for ( const auto x : values )
                {
                    auto next = partial;
                    next.push_back( x );
                    expanded.push_back( std::move( next ) );
                }
            states = std::move( expanded );
        }
        return states;
    }

    transition_rule rule()
    {
        transition_rule out;
        out.guard = conjunction();
        expect( tok::arrow, "-> | &" );

        while ( true )
        {
            expect( tok::kw_next, "next" );
            expect( tok::lparen, "(" );
            const auto& name = identifier();
            const auto var = variable( name );
            expect( tok::rparen, ")" );

            if ( std::any_of( out.updates.begin(), out.updates.end(), [ & ]( auto& u ) { return u.variable == var; } ) )
                throw semantic_error( name.where, fmt::format( "'{}' is updated twice in one rule", name.text ) );

            update u{ var, {} };
            if ( current().kind == tok::equal )
            {
                take();
                u.values.push_back( value( var, identifier() ) );
            }
            else if ( current().kind == tok::kw_in )
            {
                take();
                expect( tok::lbrace, "{" );
                while ( true )
                {
                    u.values.push_back( value( var, identifier() ) );
                    if ( current().kind == tok::rbrace )
                        break;
                    expect( tok::comma, ", | }" );
                }
                take();
                std::sort( u.values.begin(), u.values.end() );
                u.values.erase( std::unique( u.values.begin(), u.values.end() ), u.values.end() );
            }
            else
                fail( { "=", "in" } );
            out.updates.push_back( std::move( u ) );

            if ( current().kind != tok::comma )
                break;
            take();
        }
        expect( tok::semicolon, "; | ," );
        return out;
    }

    std::vector< token > _tokens;
    std::size_t _index = 0;
    std::string _name;
    std::vector< variable_decl > _variables;
};

std::string print_literal( const model& m, const literal& l )
{
    const auto& var = m.variables()[ l.variable ];
    return fmt::format( "{} {} {}", var.name, l.positive ? "=" : "!=", var.domain[ l.value ] );
}

std::string print_guard( const model& m, const std::vector< literal >& guard )
{
    if ( guard.empty() )
        return "true";
    std::string out;
    for ( const auto& l : guard )
        out += ( out.empty() ? "" : " & " ) + print_literal( m, l );
    return out;
}

} // namespace

model parse_model( std::string_view text, std::string name )
{
    return parser{ lex( text ), std::move( name ) }.run();
}

std::string print_model( const model& m )
{
    std::string out;
    for ( const auto& v : m.variables() )
    {
        out += fmt::format( "var {} : {{", v.name );
        for ( std::size_t i = 0; i < v.domain.size(); ++i )
            out += ( i ? ", " : "" ) + v.domain[ i ];
        out += "};\n";
    }

    // A conjunctive init always denotes a product of per-variable value
    // sets, so the projections reconstruct it exactly.
    std::vector< literal > constraint;
    for ( std::size_t v = 0; v < m.variables().size(); ++v )
    {
        std::set< std::size_t > present;
        for ( const auto& s : m.initial() )
            present.insert( s[ v ] );

        const auto domain_size = m.variables()[ v ].domain.size();
        if ( present.size() == 1 && domain_size > 1 )
            constraint.push_back( { v, *present.begin(), true } );
        else if ( present.size() < domain_size )
            for ( std::size_t x = 0; x < domain_size; ++x )
                if ( !present.contains( x ) )
                    constraint.push_back( { v, x, false } );
    }
    out += "init " + print_guard( m, constraint ) + ";\n";

    for ( const auto& rule : m.rules() )
    {
        out += "trans " + print_guard( m, rule.guard ) + " -> ";
        for ( std::size_t i = 0; i < rule.updates.size(); ++i )
        {
            const auto& u = rule.updates[ i ];
            const auto& var = m.variables()[ u.variable ];
            out += i ? ", " : "";
            if ( u.values.size() == 1 )
                out += fmt::format( "next({}) = {}", var.name, var.domain[ u.values.front() ] );
            else
            {
                out += fmt::format( "next({}) in {{", var.name );
                for ( std::size_t j = 0; j < u.values.size(); ++j )
                    out += ( j ? ", " : "" ) + var.domain[ u.values[ j ] ];
                out += "}";
            }
        }
        out += ";\n";
    }
    return out;
}

} // namespace ltlmc::kripke
