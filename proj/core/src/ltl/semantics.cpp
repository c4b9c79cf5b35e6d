#include "ltlmc/errors.hpp"
#include "ltlmc/ltl.hpp"

#include <cassert>

namespace ltlmc::ltl
{

namespace
{

formula positive( const formula& f );

// NNF of !f.
formula negative( const formula& f )
{
    using F = formula;
    switch ( f.kind() )
    {
    case op::constant_true: return F::falsity();
    case op::constant_false: return F::truth();
    case op::atom: return F::negation( f );
    case op::negation: return positive( f.operand() );
    case op::conjunction: return F::disjunction( negative( f.lhs() ), negative( f.rhs() ) );
    case op::disjunction: return F::conjunction( negative( f.lhs() ), negative( f.rhs() ) );
    case op::implication: return F::conjunction( positive( f.lhs() ), negative( f.rhs() ) );
    case op::next: return F::next( negative( f.operand() ) );
    case op::eventually: return F::globally( negative( f.operand() ) );
    case op::globally: return F::eventually( negative( f.operand() ) );
    case op::until: return F::release( negative( f.lhs() ), negative( f.rhs() ) );
    case op::release: return F::until( negative( f.lhs() ), negative( f.rhs() ) );
    case op::weak_until:
    {
        // !(b R (a | b)) == !b U (!a & !b)
        auto not_b = negative( f.rhs() );
        return F::until( not_b, F::conjunction( negative( f.lhs() ), not_b ) );
    }
    }
    assert( false );
    return f;
}

formula positive( const formula& f )
{
    using F = formula;
    switch ( f.kind() )
    {
    case op::constant_true:
    case op::constant_false:
    case op::atom:
        return f;
    case op::negation: return negative( f.operand() );
    case op::conjunction: return F::conjunction( positive( f.lhs() ), positive( f.rhs() ) );
    case op::disjunction: return F::disjunction( positive( f.lhs() ), positive( f.rhs() ) );
    case op::implication: return F::disjunction( negative( f.lhs() ), positive( f.rhs() ) );
    case op::next: return F::next( positive( f.operand() ) );
    case op::eventually: return F::eventually( positive( f.operand() ) );
    case op::globally: return F::globally( positive( f.operand() ) );
    case op::until: return F::until( positive( f.lhs() ), positive( f.rhs() ) );
    case op::release: return F::release( positive( f.lhs() ), positive( f.rhs() ) );
    case op::weak_until:
    {
        auto b = positive( f.rhs() );
        return F::release( b, F::disjunction( positive( f.lhs() ), b ) );
    }
    }
    assert( false );
    return f;
}

using truth_row = std::vector< bool >;

// Solves v[i] = step( i, v[succ(i)] ) over the lasso positions, starting
// every position at `seed` (false: least fixpoint, true: greatest).
template < typename Step >
truth_row solve_fixpoint( const lasso& w, bool seed, Step step )
{
    const auto n = w.size();
    truth_row v( n, seed );

    // Each backward sweep settles at least one more cycle position; one
    // extra sweep confirms stability.
    const auto max_sweeps = w.cycle.size() + 2;
    for ( std::size_t sweep = 0;; ++sweep )
    {
        assert( sweep < max_sweeps );
        (void) max_sweeps;
        bool changed = false;
        for ( std::size_t i = n; i-- > 0; )
        {
            const bool value = step( i, v[ w.successor( i ) ] );
            if ( value != v[ i ] )
            {
                v[ i ] = value;
                changed = true;
            }
        }
        if ( !changed )
            return v;
    }
}

truth_row evaluate( const formula& f, const lasso& w )
{
    const auto n = w.size();

    switch ( f.kind() )
    {
    case op::constant_true: return truth_row( n, true );
    case op::constant_false: return truth_row( n, false );
    case op::atom:
    {
        truth_row v( n );
        for ( std::size_t i = 0; i < n; ++i )
        {
            const auto& s = w.at( i );
            const auto it = s.find( f.variable() );
            if ( it == s.end() )
                throw unbound_variable( f.variable() );
            v[ i ] = it->second == f.value();
        }
        return v;
    }
    case op::negation:
    {
        auto v = evaluate( f.operand(), w );
        v.flip();
        return v;
    }
    case op::next:
    {
        const auto a = evaluate( f.operand(), w );
        truth_row v( n );
        for ( std::size_t i = 0; i < n; ++i )
            v[ i ] = a[ w.successor( i ) ];
        return v;
    }
    case op::eventually:
    {
        const auto a = evaluate( f.operand(), w );
        return solve_fixpoint( w, false, [ & ]( std::size_t i, bool later ) { return a[ i ] || later; } );
    }
    case op::globally:
    {
        const auto a = evaluate( f.operand(), w );
        return solve_fixpoint( w, true, [ & ]( std::size_t i, bool later ) { return a[ i ] && later; } );
    }
    default:
        break;
    }

    const auto a = evaluate( f.lhs(), w );
    const auto b = evaluate( f.rhs(), w );
    truth_row v( n );
    switch ( f.kind() )
    {
    case op::conjunction:
        for ( std::size_t i = 0; i < n; ++i )
            v[ i ] = a[ i ] && b[ i ];
        return v;
    case op::disjunction:
        for ( std::size_t i = 0; i < n; ++i )
            v[ i ] = a[ i ] || b[ i ];
        return v;
    case op::implication:
        for ( std::size_t i = 0; i < n; ++i )
            v[ i ] = !a[ i ] || b[ i ];
        return v;
    case op::until:
        return solve_fixpoint( w, false, [ & ]( std::size_t i, bool later ) { return b[ i ] || ( a[ i ] && later ); } );
    case op::weak_until:
        return solve_fixpoint( w, true, [ & ]( std::size_t i, bool later ) { return b[ i ] || ( a[ i ] && later ); } );
    case op::release:
        return solve_fixpoint( w, true, [ & ]( std::size_t i, bool later ) { return b[ i ] && ( a[ i ] || later ); } );
    default:
        assert( false );
        return v;
    }
}

} // namespace

formula to_nnf( const formula& f ) { return positive( f ); }

bool is_nnf( const formula& f )
{
    switch ( f.kind() )
    {
    case op::implication:
    case op::weak_until:
        return false;
    case op::negation:
        return f.operand().is( op::atom );
    default:
        break;
    }
    if ( is_unary( f.kind() ) )
        return is_nnf( f.operand() );
    if ( is_binary( f.kind() ) )
        return is_nnf( f.lhs() ) && is_nnf( f.rhs() );
    return true;
}

bool eval_lasso( const formula& f, const lasso& w )
{
    if ( w.cycle.empty() )
        throw error( "lasso cycle must be nonempty" );
    return evaluate( f, w ).front();
}

} // namespace ltlmc::ltl
