#pragma once

// Textbook LTL semantics on lassos, used as an independent oracle in tests.
// Evaluates each subformula directly at a position by quantifying over the
// next w.size() positions: after that many steps every position of the
// lasso has been visited, so longer horizons add nothing.

#include "ltlmc/ltl.hpp"
#include "ltlmc/trace.hpp"

#include <cstddef>
#include <stdexcept>

namespace reference
{

using ltlmc::lasso;
using ltlmc::ltl::formula;
using ltlmc::ltl::op;

inline bool holds_at( const formula& f, const lasso& w, std::size_t i );

// Positions i, succ(i), succ(succ(i)), ... for `steps` + 1 entries.
inline std::vector< std::size_t > horizon( const lasso& w, std::size_t i )
{
    std::vector< std::size_t > out{ i };
    for ( std::size_t k = 0; k < w.size() + 1; ++k )
        out.push_back( w.successor( out.back() ) );
    return out;
}

inline bool until_at( const formula& a, const formula& b, const lasso& w, std::size_t i )
{
    for ( const auto j : horizon( w, i ) )
    {
        if ( holds_at( b, w, j ) )
            return true;
        if ( !holds_at( a, w, j ) )
            return false;
    }
    return false;
}

inline bool always_at( const formula& a, const lasso& w, std::size_t i )
{
    for ( const auto j : horizon( w, i ) )
        if ( !holds_at( a, w, j ) )
            return false;
    return true;
}

inline bool holds_at( const formula& f, const lasso& w, std::size_t i )
{
    switch ( f.kind() )
    {
    case op::constant_true: return true;
    case op::constant_false: return false;
    case op::atom:
    {
        const auto& s = w.at( i );
        const auto it = s.find( f.variable() );
        if ( it == s.end() )
            throw std::out_of_range( f.variable() );
        return it->second == f.value();
    }
    case op::negation: return !holds_at( f.operand(), w, i );
    case op::conjunction: return holds_at( f.lhs(), w, i ) && holds_at( f.rhs(), w, i );
    case op::disjunction: return holds_at( f.lhs(), w, i ) || holds_at( f.rhs(), w, i );
    case op::implication: return !holds_at( f.lhs(), w, i ) || holds_at( f.rhs(), w, i );
    case op::next: return holds_at( f.operand(), w, w.successor( i ) );
    case op::eventually: return until_at( formula::truth(), f.operand(), w, i );
    case op::globally: return always_at( f.operand(), w, i );
    case op::until: return until_at( f.lhs(), f.rhs(), w, i );
    case op::weak_until: return until_at( f.lhs(), f.rhs(), w, i ) || always_at( f.lhs(), w, i );
    case op::release:
        // b holds up to and including the first position where a holds, or forever.
        for ( const auto j : horizon( w, i ) )
        {
            if ( !holds_at( f.rhs(), w, j ) )
                return false;
            if ( holds_at( f.lhs(), w, j ) )
                return true;
        }
        return true;
    }
    return false;
}

inline bool holds( const formula& f, const lasso& w )
{
    return holds_at( f, w, 0 );
}

} // namespace reference
