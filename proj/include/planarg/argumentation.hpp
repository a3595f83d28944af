#pragma once

// Plan-based argumentation: arguments for and against plans, the attack and
// value-filtered defeat relations between them, and Dung-style extension
// semantics over the resulting framework.

#include "planarg/model.hpp"
#include "planarg/planner.hpp"

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace planarg
{

enum class argument_kind
{
    ordinary, // <+v, plan>: follow the plan because it promotes v
    blocking  // <-v, !plan>: do not follow the plan because it demotes v
};

// Ordered by kind, then value token, then plan.
struct argument
{
    argument_kind kind;
    value_id value;
    plan subject;

    [[nodiscard]] bool is_ordinary() const { return kind == argument_kind::ordinary; }

    // The supported plan; blocking arguments conclude nothing positively.
    [[nodiscard]] std::optional< plan > conclusion() const;

    friend auto operator<=>( const argument&, const argument& ) = default;
    friend bool operator==( const argument&, const argument& ) = default;
};

// "+v:(a1,a2)" for ordinary, "-v:!(a1,a2)" for blocking arguments.
[[nodiscard]] std::string label( const argument& a );

using argument_index = std::size_t;
using relation = std::set< std::pair< argument_index, argument_index > >;

// One ordinary argument per (value, plan) the plan promotes and one blocking
// argument per (value, plan) it demotes, in canonical order. Throws
// precondition_error if any entry of plans is not a plan for goal.
[[nodiscard]] std::vector< argument > build_arguments( const value_based_system& system, const state_id& s0,
                                                       const formula& goal, std::span< const plan > plans );

[[nodiscard]] relation build_attacks( std::span< const argument > arguments );

// Keeps (a, b) unless a's value is strictly less important than b's.
[[nodiscard]] relation build_defeats( std::span< const argument > arguments, const relation& attacks,
                                      const value_system& vs );

class paf
{
    std::vector< argument > _arguments;
    relation _attacks;
    relation _defeats;
    std::vector< std::vector< argument_index > > _defeaters;
    std::vector< std::vector< argument_index > > _targets;

public:
    paf() = default;

    // Throws precondition_error if a pair refers past the argument list.
    paf( std::vector< argument > arguments, relation attacks, relation defeats );

    [[nodiscard]] const std::vector< argument >& arguments() const { return _arguments; }
    [[nodiscard]] const argument& at( argument_index i ) const { return _arguments.at( i ); }
    [[nodiscard]] std::size_t size() const { return _arguments.size(); }
    [[nodiscard]] bool empty() const { return _arguments.empty(); }

    [[nodiscard]] const relation& attacks() const { return _attacks; }
    [[nodiscard]] const relation& defeats() const { return _defeats; }
    [[nodiscard]] bool defeats( argument_index a, argument_index b ) const { return _defeats.contains( { a, b } ); }

    [[nodiscard]] const std::vector< argument_index >& defeaters( argument_index a ) const { return _defeaters.at( a ); }
    [[nodiscard]] const std::vector< argument_index >& targets( argument_index a ) const { return _targets.at( a ); }

    [[nodiscard]] std::optional< argument_index > find( const argument& a ) const;
};

// Arguments, attacks and defeats for the given plans in one step.
[[nodiscard]] paf build_paf( const value_based_system& system, const state_id& s0, const formula& goal,
                             std::span< const plan > plans );

// True iff a reaches itself through one or more defeats.
[[nodiscard]] bool on_defeat_cycle( const paf& framework, argument_index a );

enum class semantics
{
    complete,
    grounded,
    preferred,
    stable
};

[[nodiscard]] const char* to_string( semantics s );
[[nodiscard]] std::optional< semantics > parse_semantics( std::string_view name );

struct extension
{
    std::vector< argument_index > members; // ascending
    semantics kind;

    [[nodiscard]] bool contains( argument_index a ) const;

    friend bool operator==( const extension&, const extension& ) = default;
};

// Least fixpoint of the characteristic function.
[[nodiscard]] extension grounded( const paf& framework );

// Families are sorted by member list.
[[nodiscard]] std::vector< extension > complete( const paf& framework );
[[nodiscard]] std::vector< extension > preferred( const paf& framework );
[[nodiscard]] std::vector< extension > stable( const paf& framework );

[[nodiscard]] std::vector< extension > extensions( const paf& framework, semantics s );

// Union of the ordinary conclusions over the family, sorted.
[[nodiscard]] std::vector< plan > optimal_plans( const paf& framework, std::span< const extension > family );
[[nodiscard]] std::vector< plan > optimal_plans( const paf& framework, semantics s );

enum class acceptance
{
    skeptical, // in every extension
    credulous, // in some but not all extensions
    rejected   // in no extension
};

[[nodiscard]] const char* to_string( acceptance a );

// Why `defeater` defeats `target`: the comparison of the defeater's value
// against the target's value (never less).
struct defeat_reason
{
    argument_index defeater;
    argument_index target;
    std::weak_ordering comparison;
};

struct argument_verdict
{
    argument_index subject;
    acceptance status;
    std::vector< argument_index > defeaters;
    // Defeaters accepted in at least one extension; filled for rejected
    // ordinary arguments only.
    std::vector< argument_index > responsible;
};

enum class plan_status
{
    selected,
    rejected,
    unrepresented // promotes no value, so no ordinary argument supports it
};

[[nodiscard]] const char* to_string( plan_status s );

struct plan_verdict
{
    plan subject;
    plan_status status;
    std::vector< defeat_reason > reasons;
};

struct explanation
{
    semantics kind;
    std::vector< argument_verdict > arguments;
    std::vector< plan_verdict > plans;
};

// Plans default to those mentioned by the framework's arguments; pass the
// full enumeration to also report unrepresented plans.
[[nodiscard]] explanation explain( const paf& framework, const value_system& vs, semantics s,
                                   std::span< const extension > family, std::span< const plan > plans = {} );
[[nodiscard]] explanation explain( const paf& framework, const value_system& vs, semantics s,
                                   std::span< const plan > plans = {} );

// "<", "=" or ">"
[[nodiscard]] const char* relation_symbol( std::weak_ordering o );

// Graphviz rendering: ordinary arguments solid, blocking dashed, attacks as
// dotted undirected edges, defeats as solid arrows.
[[nodiscard]] std::string to_dot( const paf& framework );

} // namespace planarg
