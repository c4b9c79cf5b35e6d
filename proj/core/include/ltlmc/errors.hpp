#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltlmc
{

// Base of every error thrown by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct source_location
{
    std::size_t line = 1;
    std::size_t column = 1;
};

// Malformed input text. `expected` lists the tokens that would have been
// accepted at `where`.
class syntax_error : public error
{
public:
    syntax_error( source_location where, std::string found, std::vector< std::string > expected );

    [[nodiscard]] source_location where() const { return _where; }
    [[nodiscard]] const std::string& found() const { return _found; }
    [[nodiscard]] const std::vector< std::string >& expected() const { return _expected; }

private:
    source_location _where;
    std::string _found;
    std::vector< std::string > _expected;
};

// A character sequence that is not a token of the formula language.
class unknown_operator : public syntax_error
{
public:
    unknown_operator( source_location where, std::string text );

    [[nodiscard]] const std::string& text() const { return _text; }

private:
    std::string _text;
};

// Well-formed model text that denotes no valid model.
class semantic_error : public error
{
public:
    semantic_error( source_location where, const std::string& message );

    [[nodiscard]] source_location where() const { return _where; }

private:
    source_location _where;
};

class unbound_variable : public error
{
public:
    explicit unbound_variable( const std::string& variable );
};

class unknown_atom : public error
{
public:
    using error::error;
};

class not_in_nnf : public error
{
public:
    using error::error;
};

class state_space_limit : public error
{
public:
    explicit state_space_limit( std::size_t cap );

    [[nodiscard]] std::size_t cap() const { return _cap; }

private:
    std::size_t _cap;
};

class suite_mismatch : public error
{
public:
    using error::error;
};

} // namespace ltlmc
