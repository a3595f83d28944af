#pragma once

// Propositional logic extended with one box modality per action, and the
// model checker for it over value-based transition systems.

#include "planarg/model.hpp"

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace planarg
{

// Immutable formula tree. Conjunction and implication are kept as nodes so
// they print back as written, but their meaning is the usual abbreviation
// over negation and disjunction.
class formula
{
public:
    enum class kind
    {
        proposition,
        negation,
        disjunction,
        conjunction,
        implication,
        box
    };

    [[nodiscard]] static formula prop( proposition name );
    [[nodiscard]] static formula negation( formula operand );
    [[nodiscard]] static formula disjunction( formula lhs, formula rhs );
    [[nodiscard]] static formula conjunction( formula lhs, formula rhs );
    [[nodiscard]] static formula implication( formula lhs, formula rhs );
    [[nodiscard]] static formula box( action_id action, formula operand );

    // [a1][a2]...[an] goal
    [[nodiscard]] static formula boxes( std::span< const action_id > seq, formula goal );

    [[nodiscard]] kind type() const;
    [[nodiscard]] const proposition& name() const;  // proposition only
    [[nodiscard]] const action_id& action() const;  // box only
    [[nodiscard]] const formula& operand() const;   // negation and box
    [[nodiscard]] const formula& lhs() const;       // binary connectives
    [[nodiscard]] const formula& rhs() const;

    [[nodiscard]] bool is_propositional() const;
    [[nodiscard]] std::size_t depth() const;

    // Concrete syntax with the minimum parentheses needed to parse back.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==( const formula& lhs, const formula& rhs );

private:
    struct node;
    explicit formula( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}
    std::shared_ptr< const node > _node;
};

[[nodiscard]] std::set< proposition > propositions( const formula& f );
[[nodiscard]] std::set< action_id > actions( const formula& f );

enum class undefined_box
{
    falsity, // [a] f fails where a is not enabled
    vacuous  // [a] f holds where a is not enabled
};

struct check_options
{
    undefined_box on_undefined = undefined_box::falsity;
};

// T, s |= f. Unknown propositions are false; undeclared states or actions
// raise input_error.
[[nodiscard]] bool check( const transition_system& ts, const state_id& s, const formula& f,
                          const check_options& options = {} );
[[nodiscard]] bool check( const value_based_system& system, const state_id& s, const formula& f,
                          const check_options& options = {} );

// T |= f: f holds at every state.
[[nodiscard]] bool check_everywhere( const value_based_system& system, const formula& f,
                                     const check_options& options = {} );

// "+v : [a1]...[an] goal" or "-v : [a1]...[an] goal".
struct annotated_query
{
    sign status;
    value_id value;
    std::vector< action_id > seq;
    formula goal;
};

// True iff seq runs from s to a goal state and some step along the way
// carries (status, value). Throws input_error for an empty sequence, a goal
// containing a box, or undeclared identifiers.
[[nodiscard]] bool check_annotated( const value_based_system& system, const state_id& s,
                                    const annotated_query& query );

[[nodiscard]] std::string to_string( const annotated_query& query );

} // namespace planarg
