#pragma once

#include "ltlmc/errors.hpp"
#include "ltlmc/trace.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ltlmc::kripke
{

inline constexpr std::size_t default_state_cap = 1'000'000;

struct variable_decl
{
    std::string name;
    std::vector< std::string > domain; // order is significant

    [[nodiscard]] std::optional< std::size_t > index_of( std::string_view value ) const;

    friend bool operator==( const variable_decl&, const variable_decl& ) = default;
};

// Compact state: the domain index of each variable, in declaration order.
// Lexicographic order on codes is the canonical state order.
using state_code = std::vector< std::uint16_t >;

struct state_code_hash
{
    std::size_t operator()( const state_code& code ) const noexcept;
};

// `variable (=|!=) value`, by index.
struct literal
{
    std::size_t variable = 0;
    std::size_t value = 0;
    bool positive = true;

    [[nodiscard]] bool holds( const state_code& s ) const
    {
        return ( s[ variable ] == value ) == positive;
    }

    friend bool operator==( const literal&, const literal& ) = default;
};

// next(variable) takes any of `values` (domain indices, ascending).
struct update
{
    std::size_t variable = 0;
    std::vector< std::size_t > values;

    friend bool operator==( const update&, const update& ) = default;
};

// Guarded command. Variables without an update keep their value.
struct transition_rule
{
    std::vector< literal > guard; // empty guard is `true`
    std::vector< update > updates;

    [[nodiscard]] bool enabled( const state_code& s ) const;

    friend bool operator==( const transition_rule&, const transition_rule& ) = default;
};

class model
{
public:
    model( std::string name, std::vector< variable_decl > variables, std::vector< state_code > initial,
           std::vector< transition_rule > rules );

    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] const std::vector< variable_decl >& variables() const { return _variables; }
    [[nodiscard]] const std::vector< state_code >& initial() const { return _initial; }
    [[nodiscard]] const std::vector< transition_rule >& rules() const { return _rules; }
    // Deadlock states closed with a self-loop by totalize().
    [[nodiscard]] const std::set< state_code >& stutter_states() const { return _stutter; }

    [[nodiscard]] std::optional< std::size_t > variable_index( std::string_view name ) const;

    // Union of the images of all enabled rules, in canonical order.
    [[nodiscard]] std::vector< state_code > successors( const state_code& s ) const;
    [[nodiscard]] bool has_edge( const state_code& from, const state_code& to ) const;
    [[nodiscard]] bool is_initial( const state_code& s ) const;

    [[nodiscard]] ltlmc::state decode( const state_code& s ) const;
    // nullopt unless s assigns exactly the declared variables, each within
    // its domain.
    [[nodiscard]] std::optional< state_code > encode( const ltlmc::state& s ) const;

    [[nodiscard]] model with_stutter( std::set< state_code > extra ) const;

    friend bool operator==( const model&, const model& ) = default;

private:
    std::string _name;
    std::vector< variable_decl > _variables;
    std::vector< state_code > _initial;
    std::vector< transition_rule > _rules;
    std::set< state_code > _stutter;
};

// Parses the guarded-command model language. Throws syntax_error or
// semantic_error.
model parse_model( std::string_view text, std::string name = "model" );

// Renders m back into the model language. Stutter loops added by
// totalize() are not part of the text.
std::string print_model( const model& m );

std::vector< ltlmc::state > successors( const model& m, const ltlmc::state& s );

struct totalize_result
{
    model totalized;
    std::vector< ltlmc::state > self_looped; // deadlocks that gained a self-loop
};

totalize_result totalize( const model& m, std::size_t cap = default_state_cap );

// Breadth-first from the initial states, deduplicated. Throws
// state_space_limit when more than `cap` states are reachable.
std::vector< state_code > reachable_codes( const model& m, std::size_t cap = default_state_cap );
std::vector< ltlmc::state > reachable_states( const model& m, std::size_t cap = default_state_cap );

} // namespace ltlmc::kripke
