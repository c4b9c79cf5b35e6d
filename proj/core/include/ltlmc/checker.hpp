#pragma once

#include "ltlmc/automata.hpp"
#include "ltlmc/kripke.hpp"
#include "ltlmc/ltl.hpp"
#include "ltlmc/trace.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ltlmc::checker
{

// AsWritten evaluates a formula at the initial states only (the LTLSPEC
// reading); GloballyWrapped checks G f instead.
enum class check_mode
{
    as_written,
    globally_wrapped,
};

std::string_view to_string( check_mode mode );
std::optional< check_mode > parse_mode( std::string_view text );

// The formula actually checked under `mode`.
ltl::formula effective_formula( const ltl::formula& f, check_mode mode );

// Throws unknown_atom if f mentions a variable or value m does not declare.
void validate_atoms( const kripke::model& m, const ltl::formula& f );

struct statistics
{
    std::size_t product_states = 0;
    double elapsed_seconds = 0.0;
};

// Accepting product lasso before projection: automaton nodes visited
// alongside each model state of the raw prefix and cycle.
struct product_trace
{
    std::vector< std::size_t > prefix_nodes;
    std::vector< std::size_t > cycle_nodes;
};

struct search_result
{
    std::optional< lasso > witness; // projected and normalized
    std::optional< product_trace > trace;
    std::size_t product_states = 0;
};

// Nested depth-first search for an accepting cycle in the synchronous
// product of m and a. Model successors are explored in canonical order,
// automaton edges in construction order. Throws state_space_limit when
// more than `cap` product states are visited.
search_result product_search( const kripke::model& m, const automata::buchi& a,
                              std::size_t cap = kripke::default_state_cap );

struct verdict
{
    bool holds = true;
    std::optional< lasso > counterexample; // set iff !holds
    // Holds only because a top-level implication's antecedent never fires.
    bool vacuous = false;
    statistics stats;
    std::optional< product_trace > debug;
};

struct check_options
{
    std::size_t state_cap = kripke::default_state_cap;
    bool detect_vacuity = true;
};

// Decides whether every infinite path of m (totalized) satisfies f under
// `mode`. Throws unknown_atom and state_space_limit.
verdict check( const kripke::model& m, const ltl::formula& f, check_mode mode, const check_options& options = {} );

struct validation
{
    bool valid = false;
    std::string reason; // empty when valid

    explicit operator bool() const { return valid; }
};

// Independent witness check: w starts in an initial state, follows model
// edges including the wrap-around, and violates f under `mode` per
// ltl::eval_lasso.
validation verify_counterexample( const kripke::model& m, const ltl::formula& f, check_mode mode, const lasso& w );

} // namespace ltlmc::checker
