#pragma once

#include "ltlmc/ltl.hpp"
#include "ltlmc/random.hpp"
#include "ltlmc/trace.hpp"

#include <cstdint>
#include <optional>

// Cross-validation of the automaton translation against the direct lasso
// semantics: accepts_lasso( translate( f ), w ) must equal eval_lasso( f, w ).
namespace ltlmc::oracle
{

struct oracle_case
{
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
    ltl::formula spec; // NNF
    lasso word;
};

struct outcome
{
    bool by_automaton = false;
    bool by_semantics = false;

    [[nodiscard]] bool agree() const { return by_automaton == by_semantics; }
};

// Case `index` of the sequence fixed by `seed`; each case depends only on
// (seed, index), so any case can be replayed alone. Formulas have depth
// <= 4 over 2 variables x 3 values; lassos have prefix <= 3, cycle <= 3.
oracle_case make_case( std::uint64_t seed, std::uint64_t index );

outcome run_case( const ltl::formula& f, const lasso& w );

// Greedily shrinks a disagreeing case (subformula replacement, dropping
// lasso states) while the disagreement persists.
oracle_case shrink( oracle_case c );

} // namespace ltlmc::oracle
