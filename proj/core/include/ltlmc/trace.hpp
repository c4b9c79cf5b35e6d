#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ltlmc
{

// A full assignment of model variables to values, keyed by variable name.
using state = std::map< std::string, std::string, std::less<> >;

// The ultimately periodic word prefix · cycle^ω. Positions 0 .. size()-1
// index prefix then cycle; the position after the last one wraps back to
// loop_start().
struct lasso
{
    std::vector< state > prefix;
    std::vector< state > cycle;

    [[nodiscard]] std::size_t size() const { return prefix.size() + cycle.size(); }
    [[nodiscard]] std::size_t loop_start() const { return prefix.size(); }
    [[nodiscard]] std::size_t successor( std::size_t position ) const
    {
        return position + 1 < size() ? position + 1 : loop_start();
    }
    [[nodiscard]] const state& at( std::size_t position ) const
    {
        return position < prefix.size() ? prefix[ position ] : cycle[ position - prefix.size() ];
    }

    friend bool operator==( const lasso&, const lasso& ) = default;
};

// Rewrites w into the shortest equivalent representation: folds prefix
// states into the cycle while the prefix ends with the cycle's last state,
// then reduces the cycle to its primitive period. Requires a nonempty cycle.
lasso normalize( lasso w );

std::string to_string( const state& s );

} // namespace ltlmc
