#pragma once

// Value-based transition systems: deterministic labelled transition systems
// whose transitions may promote or demote values drawn from a ranked value
// system.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarg
{

// Raised when an operation receives an identifier the system does not declare.
class input_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an operation's documented precondition does not hold.
class precondition_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Strongly typed identifier; the tag keeps states, actions and values apart.
template < typename Tag >
class token
{
    std::string _name;

public:
    token() = default;
    explicit token( std::string name ) : _name{ std::move( name ) } {}

    [[nodiscard]] const std::string& name() const { return _name; }

    friend auto operator<=>( const token&, const token& ) = default;
    friend bool operator==( const token&, const token& ) = default;
};

using state_id = token< struct state_tag >;
using action_id = token< struct action_tag >;
using value_id = token< struct value_tag >;
using proposition = std::string;

struct transition
{
    state_id from;
    action_id action;
    state_id to;

    friend auto operator<=>( const transition&, const transition& ) = default;
    friend bool operator==( const transition&, const transition& ) = default;
};

[[nodiscard]] std::string to_string( const transition& t );

class transition_system
{
    std::set< state_id > _states;
    std::set< action_id > _actions;
    std::set< transition > _transitions;
    std::map< state_id, std::set< proposition > > _labels;

    // First declared target per (from, action); nondeterministic systems are
    // reported by validate() rather than rejected here.
    std::map< std::pair< state_id, action_id >, state_id > _step;

public:
    transition_system() = default;
    transition_system( std::set< state_id > states, std::set< action_id > actions,
                       std::set< transition > transitions,
                       std::map< state_id, std::set< proposition > > prop_labels = {} );

    [[nodiscard]] const std::set< state_id >& states() const { return _states; }
    [[nodiscard]] const std::set< action_id >& actions() const { return _actions; }
    [[nodiscard]] const std::set< transition >& transitions() const { return _transitions; }
    [[nodiscard]] const std::map< state_id, std::set< proposition > >& prop_labels() const { return _labels; }

    [[nodiscard]] bool has_state( const state_id& s ) const { return _states.contains( s ); }
    [[nodiscard]] bool has_action( const action_id& a ) const { return _actions.contains( a ); }
    [[nodiscard]] bool has_transition( const transition& t ) const { return _transitions.contains( t ); }

    // Propositions true at s; empty for unlabelled states.
    [[nodiscard]] const std::set< proposition >& props_at( const state_id& s ) const;

    // s[a]: the unique successor of s under a, if a is enabled at s.
    // Throws input_error for undeclared states or actions.
    [[nodiscard]] std::optional< state_id > successor( const state_id& s, const action_id& a ) const;

    // s[a1, ..., an]; the empty sequence yields s.
    [[nodiscard]] std::optional< state_id > run( const state_id& s, std::span< const action_id > seq ) const;

    [[nodiscard]] std::vector< transition > outgoing( const state_id& s ) const;

    friend bool operator==( const transition_system& lhs, const transition_system& rhs )
    {
        return lhs._states == rhs._states && lhs._actions == rhs._actions &&
               lhs._transitions == rhs._transitions && lhs._labels == rhs._labels;
    }
};

// Total preorder over values, encoded by ranks. A lower rank is less
// important; equal ranks are equivalent.
class value_system
{
    std::vector< value_id > _values;
    std::map< value_id, unsigned > _rank;

public:
    value_system() = default;

    // Tiers are listed from least to most important; values within a tier are
    // equivalent. Throws input_error on duplicate values or empty tiers.
    explicit value_system( const std::vector< std::vector< value_id > >& tiers );

    [[nodiscard]] const std::vector< value_id >& values() const { return _values; }
    [[nodiscard]] bool contains( const value_id& v ) const { return _rank.contains( v ); }
    [[nodiscard]] bool empty() const { return _values.empty(); }
    [[nodiscard]] unsigned rank( const value_id& v ) const;

    // less iff v is strictly less important than w.
    [[nodiscard]] std::weak_ordering compare( const value_id& v, const value_id& w ) const;

    // Equivalence classes in increasing importance, each sorted by name.
    [[nodiscard]] std::vector< std::vector< value_id > > tiers() const;

    friend bool operator==( const value_system& lhs, const value_system& rhs ) { return lhs._rank == rhs._rank; }
};

enum class sign
{
    promote,
    demote
};

[[nodiscard]] const char* to_string( sign s );

class sign_set
{
    bool _promote = false;
    bool _demote = false;

public:
    sign_set() = default;
    sign_set( std::initializer_list< sign > signs );

    void insert( sign s ) { ( s == sign::promote ? _promote : _demote ) = true; }
    [[nodiscard]] bool contains( sign s ) const { return s == sign::promote ? _promote : _demote; }
    [[nodiscard]] bool empty() const { return !_promote && !_demote; }

    friend bool operator==( const sign_set&, const sign_set& ) = default;
};

struct value_label
{
    sign status;
    value_id value;
    transition edge;

    friend auto operator<=>( const value_label&, const value_label& ) = default;
    friend bool operator==( const value_label&, const value_label& ) = default;
};

class value_based_system
{
    transition_system _ts;
    value_system _vs;
    std::set< value_label > _delta;

public:
    value_based_system() = default;
    value_based_system( transition_system ts, value_system vs, std::set< value_label > delta = {} )
        : _ts{ std::move( ts ) }, _vs{ std::move( vs ) }, _delta{ std::move( delta ) } {}

    [[nodiscard]] const transition_system& ts() const { return _ts; }
    [[nodiscard]] const value_system& vs() const { return _vs; }
    [[nodiscard]] const std::set< value_label >& delta() const { return _delta; }

    // Signs s with t in delta(s, v). Throws input_error if t or v is undeclared.
    [[nodiscard]] sign_set label_status( const transition& t, const value_id& v ) const;

    friend bool operator==( const value_based_system&, const value_based_system& ) = default;
};

enum class rule
{
    no_states,
    no_actions,
    undeclared_state,
    undeclared_action,
    undeclared_value,
    undeclared_transition,
    nondeterminism,
    seriality,
    conflicting_labels
};

enum class severity
{
    error,
    warning
};

[[nodiscard]] const char* to_string( rule r );

struct violation
{
    rule broken;
    severity level;
    std::string element; // offending state, action, value or transition
    std::string message;
};

struct validation_options
{
    // Report states without successors as warnings instead of errors.
    bool allow_terminal = false;
};

[[nodiscard]] std::vector< violation > validate( const value_based_system& system,
                                                 const validation_options& options = {} );

[[nodiscard]] bool has_errors( std::span< const violation > violations );

} // namespace planarg
