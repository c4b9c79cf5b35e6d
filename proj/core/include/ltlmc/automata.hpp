#pragma once

#include "ltlmc/ltl.hpp"
#include "ltlmc/trace.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace ltlmc::automata
{

// `variable = value`, or `variable != value` when !positive.
struct guard_literal
{
    std::string variable;
    std::string value;
    bool positive = true;

    [[nodiscard]] bool holds( const state& s ) const; // throws unbound_variable

    friend auto operator<=>( const guard_literal&, const guard_literal& ) = default;
};

// Conjunction of literals, sorted and free of duplicates; empty is `true`.
using guard = std::vector< guard_literal >;

[[nodiscard]] bool satisfies( const state& s, const guard& g );
[[nodiscard]] bool is_consistent( const guard& g );
std::string to_string( const guard& g );

struct edge
{
    guard label;
    std::size_t target = 0;

    friend bool operator==( const edge&, const edge& ) = default;
};

// Runs start in `start` before reading the first letter; every edge reads
// one letter. Node 0 is always the start node and has no incoming edges.
struct generalized_buchi
{
    std::size_t start = 0;
    std::vector< std::vector< edge > > transitions; // indexed by node
    // One set per Until / Eventually subformula, in closure discovery order.
    std::vector< std::set< std::size_t > > acceptance;
    std::vector< ltl::formula > eventualities;

    [[nodiscard]] std::size_t node_count() const { return transitions.size(); }
    // Nodes produced by the tableau, i.e. excluding the start node.
    [[nodiscard]] std::size_t tableau_node_count() const { return node_count() - 1; }
};

struct buchi
{
    std::size_t start = 0;
    std::vector< std::vector< edge > > transitions;
    std::set< std::size_t > accepting;
    // Generalized node and counter behind each node.
    std::vector< std::pair< std::size_t, std::size_t > > origin;

    [[nodiscard]] std::size_t node_count() const { return transitions.size(); }
};

// Tableau translation of an NNF formula. Throws not_in_nnf.
generalized_buchi translate_gba( const ltl::formula& f );

// Counter construction; an empty acceptance list means every node accepts.
buchi degeneralize( const generalized_buchi& g );

// Convenience: degeneralize( translate_gba( to_nnf( f ) ) ).
buchi translate( const ltl::formula& f );

// Whether some run over prefix · cycle^ω visits an accepting node
// infinitely often.
bool accepts_lasso( const buchi& a, const lasso& w );

// Plain-text dump: `initial: N`, `accepting: N ...`, then one
// `src -- guard --> dst` line per edge.
std::string to_text( const buchi& a );
std::string to_dot( const buchi& a, const std::string& name );

} // namespace ltlmc::automata
