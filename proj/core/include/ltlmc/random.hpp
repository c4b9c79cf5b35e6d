#pragma once

#include "ltlmc/kripke.hpp"
#include "ltlmc/ltl.hpp"
#include "ltlmc/trace.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

// Random generators for property tests and the oracle cross-check.
namespace ltlmc::random
{

using engine = std::mt19937_64;

// Variables v0..v{n-1}, each with values a, b, c, ... (value_count of them).
struct alphabet
{
    std::size_t variable_count = 2;
    std::size_t value_count = 3;

    [[nodiscard]] std::vector< std::string > variables() const;
    [[nodiscard]] std::vector< std::string > values() const;
};

struct formula_options
{
    std::size_t max_depth = 4;
    alphabet letters;
    bool nnf_only = false; // restrict to ! over atoms, & | X F G U R
};

ltl::formula random_formula( engine& rng, const formula_options& options );

lasso random_lasso( engine& rng, const alphabet& letters, std::size_t max_prefix, std::size_t max_cycle );

// Explicit model over `letters` with at most `max_states` distinct states,
// one guarded command per edge; totalized.
kripke::model random_model( engine& rng, const alphabet& letters, std::size_t max_states );

// Random walk from a random initial state, closed at the first repeated
// state. Requires a totalized model.
lasso random_path( engine& rng, const kripke::model& m, std::size_t max_walk = 8 );

} // namespace ltlmc::random
