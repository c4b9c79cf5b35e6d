#pragma once

#include "ltlmc/trace.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ltlmc::ltl
{

enum class op : std::uint8_t
{
    constant_true,
    constant_false,
    atom,
    negation,
    conjunction,
    disjunction,
    implication,
    next,
    eventually,
    globally,
    until,
    weak_until,
    release,
};

[[nodiscard]] bool is_unary( op o );
[[nodiscard]] bool is_binary( op o );

// Immutable LTL syntax tree. Copies share structure; comparison is
// structural and defines a total order, so formulas can key ordered
// containers.
class formula
{
public:
    formula(); // true

    static formula truth();
    static formula falsity();
    // Throws ltlmc::error unless both names are identifiers.
    static formula atom( std::string variable, std::string value );
    static formula negation( formula f );
    static formula conjunction( formula lhs, formula rhs );
    static formula disjunction( formula lhs, formula rhs );
    static formula implication( formula lhs, formula rhs );
    static formula next( formula f );
    static formula eventually( formula f );
    static formula globally( formula f );
    static formula until( formula lhs, formula rhs );
    static formula weak_until( formula lhs, formula rhs );
    static formula release( formula lhs, formula rhs );

    static formula unary( op o, formula f );
    static formula binary( op o, formula lhs, formula rhs );

    [[nodiscard]] op kind() const;
    [[nodiscard]] bool is( op o ) const { return kind() == o; }
    [[nodiscard]] bool is_literal() const;

    // Atom fields; empty for other kinds.
    [[nodiscard]] const std::string& variable() const;
    [[nodiscard]] const std::string& value() const;

    // Operand of a unary node, resp. the sides of a binary node.
    [[nodiscard]] const formula& operand() const;
    [[nodiscard]] const formula& lhs() const;
    [[nodiscard]] const formula& rhs() const;

    // Number of nodes in the tree (shared subtrees counted per occurrence).
    [[nodiscard]] std::size_t node_count() const;
    [[nodiscard]] std::size_t depth() const;

    friend bool operator==( const formula& a, const formula& b );
    friend std::strong_ordering operator<=>( const formula& a, const formula& b );

private:
    struct node;
    explicit formula( std::shared_ptr< const node > n );

    std::shared_ptr< const node > _node;
};

[[nodiscard]] bool is_identifier( std::string_view text );

// Parses one formula. Throws syntax_error / unknown_operator.
formula parse( std::string_view text );

// Fully parenthesized concrete syntax; parse( pretty( f ) ) == f.
std::string pretty( const formula& f );

// Negation normal form: negations only directly above atoms, no
// implications, weak until rewritten as `a W b == b R (a | b)`.
formula to_nnf( const formula& f );
[[nodiscard]] bool is_nnf( const formula& f );

// Distinct subformulas in pre-order discovery order, f itself first.
std::vector< formula > closure( const formula& f );

using atom_set = std::set< std::pair< std::string, std::string > >;
atom_set atoms( const formula& f );

// Truth of f at position 0 of the word prefix · cycle^ω.
// Throws unbound_variable when an atom's variable is missing from a state.
bool eval_lasso( const formula& f, const lasso& w );

formula wrap_globally( const formula& f );

struct named_formula
{
    std::string name;
    formula spec;
};

// Spec files hold one formula per line; `#` starts a comment. A comment
// consisting of a single identifier (`# phi3`) names the next formula;
// unnamed formulas are called phi<k>, k being their 1-based position.
// Syntax errors report file line and column.
std::vector< named_formula > parse_spec_file( std::string_view text );

// Inverse of parse_spec_file: a `# name` line before each pretty-printed
// formula.
std::string print_spec_file( const std::vector< named_formula >& specs );

} // namespace ltlmc::ltl
