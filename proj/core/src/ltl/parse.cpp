#include "ltlmc/errors.hpp"
#include "ltlmc/ltl.hpp"

#include <cctype>
#include <optional>

namespace ltlmc::ltl
{

namespace
{

enum class tok
{
    identifier,
    kw_true,
    kw_false,
    kw_next,
    kw_eventually,
    kw_globally,
    kw_until,
    kw_weak_until,
    kw_release,
    bang,
    not_equal,
    equal,
    amp,
    bar,
    arrow,
    lparen,
    rparen,
    end,
};

struct token
{
    tok kind;
    std::string text;
    source_location where;
};

std::string describe( const token& t )
{
    if ( t.kind == tok::end )
        return "end of input";
    return "'" + t.text + "'";
}

class lexer
{
public:
    explicit lexer( std::string_view text ) : _text{ text } {}

    std::vector< token > run()
    {
        std::vector< token > out;
        for ( ;; )
        {
            skip_space();
            const auto where = _loc;
            if ( _pos >= _text.size() )
            {
                out.push_back( { tok::end, "", where } );
                return out;
            }

            const char c = _text[ _pos ];
            if ( std::isalpha( static_cast< unsigned char >( c ) ) || c == '_' )
            {
                const auto start = _pos;
                while ( _pos < _text.size()
                        && ( std::isalnum( static_cast< unsigned char >( _text[ _pos ] ) ) || _text[ _pos ] == '_' ) )
                    advance();
                std::string word{ _text.substr( start, _pos - start ) };
                out.push_back( { keyword( word ), std::move( word ), where } );
                continue;
            }

            switch ( c )
            {
            case '!':
                advance();
                if ( peek() == '=' )
                {
                    advance();
                    out.push_back( { tok::not_equal, "!=", where } );
                }
                else
                    out.push_back( { tok::bang, "!", where } );
                break;
            case '-':
                advance();
                if ( peek() != '>' )
                    throw unknown_operator( where, "-" );
                advance();
                out.push_back( { tok::arrow, "->", where } );
                break;
            case '=': advance(); out.push_back( { tok::equal, "=", where } ); break;
            case '&': advance(); out.push_back( { tok::amp, "&", where } ); break;
            case '|': advance(); out.push_back( { tok::bar, "|", where } ); break;
            case '(': advance(); out.push_back( { tok::lparen, "(", where } ); break;
            case ')': advance(); out.push_back( { tok::rparen, ")", where } ); break;
            default:
            {
                // Swallow the whole run of punctuation so `<->` or `&&`-like
                // typos are reported as one operator.
                const auto start = _pos;
                while ( _pos < _text.size() && std::ispunct( static_cast< unsigned char >( _text[ _pos ] ) )
                        && _text[ _pos ] != '(' && _text[ _pos ] != ')' && _text[ _pos ] != '_' )
                    advance();
                if ( _pos == start )
                    advance();
                throw unknown_operator( where, std::string{ _text.substr( start, _pos - start ) } );
            }
            }
        }
    }

private:
    static tok keyword( const std::string& word )
    {
        if ( word == "true" ) return tok::kw_true;
        if ( word == "false" ) return tok::kw_false;
        if ( word == "X" ) return tok::kw_next;
        if ( word == "F" ) return tok::kw_eventually;
        if ( word == "G" ) return tok::kw_globally;
        if ( word == "U" ) return tok::kw_until;
        if ( word == "W" ) return tok::kw_weak_until;
        if ( word == "R" ) return tok::kw_release;
        return tok::identifier;
    }

    [[nodiscard]] char peek() const { return _pos < _text.size() ? _text[ _pos ] : '\0'; }

    void advance()
    {
        if ( _text[ _pos ] == '\n' )
        {
            ++_loc.line;
            _loc.column = 1;
        }
        else
            ++_loc.column;
        ++_pos;
    }

    void skip_space()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            advance();
    }

    std::string_view _text;
    std::size_t _pos = 0;
    source_location _loc;
};

const std::vector< std::string > operand_start = { "!", "X", "F", "G", "true", "false", "identifier", "(" };

class parser
{
public:
    explicit parser( std::vector< token > tokens ) : _tokens{ std::move( tokens ) } {}

    formula run()
    {
        auto f = implies();
        if ( current().kind != tok::end )
            fail( { "->", "|", "&", "U", "W", "R", "end of input" } );
        return f;
    }

private:
    [[nodiscard]] const token& current() const { return _tokens[ _index ]; }

    const token& take() { return _tokens[ _index++ ]; }

    bool accept( tok kind )
    {
        if ( current().kind != kind )
            return false;
        ++_index;
        return true;
    }

    [[noreturn]] void fail( std::vector< std::string > expected ) const
    {
        throw syntax_error( current().where, describe( current() ), std::move( expected ) );
    }

    formula implies()
    {
        auto lhs = disjunction();
        if ( accept( tok::arrow ) )
            return formula::implication( std::move( lhs ), implies() );
        return lhs;
    }

    formula disjunction()
    {
        auto f = conjunction();
        while ( accept( tok::bar ) )
            f = formula::disjunction( std::move( f ), conjunction() );
        return f;
    }

    formula conjunction()
    {
        auto f = temporal();
        while ( accept( tok::amp ) )
            f = formula::conjunction( std::move( f ), temporal() );
        return f;
    }

    static std::optional< op > temporal_op( tok kind )
    {
        switch ( kind )
        {
        case tok::kw_until: return op::until;
        case tok::kw_weak_until: return op::weak_until;
        case tok::kw_release: return op::release;
        default: return std::nullopt;
        }
    }

    formula temporal()
    {
        std::vector< formula > operands{ unary() };
        std::optional< op > chain;
        std::string chain_text;

        while ( auto o = temporal_op( current().kind ) )
        {
            if ( chain && *chain != *o )
                fail( { chain_text, "&", "|", "->", ")", "end of input" } );
            chain = o;
            chain_text = take().text;
            operands.push_back( unary() );
        }

        auto f = operands.back();
        for ( auto it = operands.rbegin() + 1; it != operands.rend(); ++it )
            f = formula::binary( *chain, *it, std::move( f ) );
        return f;
    }

    formula unary()
    {
        switch ( current().kind )
        {
        case tok::bang: take(); return formula::negation( unary() );
        case tok::kw_next: take(); return formula::next( unary() );
        case tok::kw_eventually: take(); return formula::eventually( unary() );
        case tok::kw_globally: take(); return formula::globally( unary() );
        default: return atom();
        }
    }

    formula atom()
    {
        switch ( current().kind )
        {
        case tok::kw_true: take(); return formula::truth();
        case tok::kw_false: take(); return formula::falsity();
        case tok::lparen:
        {
            take();
            auto f = implies();
            if ( !accept( tok::rparen ) )
                fail( { ")", "->", "|", "&", "U", "W", "R" } );
            return f;
        }
        case tok::identifier:
        {
            auto variable = take().text;
            const bool negated = current().kind == tok::not_equal;
            if ( !accept( tok::equal ) && !accept( tok::not_equal ) )
                fail( { "=", "!=" } );
            if ( current().kind != tok::identifier )
                fail( { "identifier" } );
            auto a = formula::atom( std::move( variable ), take().text );
            return negated ? formula::negation( std::move( a ) ) : a;
        }
        default:
            fail( operand_start );
        }
    }

    std::vector< token > _tokens;
    std::size_t _index = 0;
};

std::string pretty_operand( const formula& f )
{
    // Atoms get parentheses under unary operators only.
    if ( f.is( op::atom ) )
        return "(" + pretty( f ) + ")";
    return pretty( f );
}

const char* symbol( op o )
{
    switch ( o )
    {
    case op::negation: return "!";
    case op::next: return "X ";
    case op::eventually: return "F ";
    case op::globally: return "G ";
    case op::conjunction: return "&";
    case op::disjunction: return "|";
    case op::implication: return "->";
    case op::until: return "U";
    case op::weak_until: return "W";
    case op::release: return "R";
    default: return "?";
    }
}

} // namespace

formula parse( std::string_view text )
{
    return parser{ lexer{ text }.run() }.run();
}

std::string pretty( const formula& f )
{
    switch ( f.kind() )
    {
    case op::constant_true: return "true";
    case op::constant_false: return "false";
    case op::atom: return f.variable() + " = " + f.value();
    default: break;
    }

    if ( is_unary( f.kind() ) )
        return symbol( f.kind() ) + pretty_operand( f.operand() );
    return "(" + pretty( f.lhs() ) + " " + symbol( f.kind() ) + " " + pretty( f.rhs() ) + ")";
}

} // namespace ltlmc::ltl
