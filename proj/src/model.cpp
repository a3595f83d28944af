#include "planarg/model.hpp"

#include <algorithm>

namespace planarg
{

std::string to_string( const transition& t )
{
    return t.from.name() + " -" + t.action.name() + "-> " + t.to.name();
}

transition_system::transition_system( std::set< state_id > states, std::set< action_id > actions,
                                      std::set< transition > transitions,
                                      std::map< state_id, std::set< proposition > > prop_labels )
    : _states{ std::move( states ) }, _actions{ std::move( actions ) }, _transitions{ std::move( transitions ) },
      _labels{ std::move( prop_labels ) }
{
    std::erase_if( _labels, []( const auto& entry ) { return entry.second.empty(); } );
    for ( const auto& t : _transitions )
        _step.try_emplace( { t.from, t.action }, t.to );
}

const std::set< proposition >& transition_system::props_at( const state_id& s ) const
{
    static const std::set< proposition > none;
    auto it = _labels.find( s );
    return it == _labels.end() ? none : it->second;
}

std::optional< state_id > transition_system::successor( const state_id& s, const action_id& a ) const
{
    if ( !has_state( s ) )
        throw input_error( "unknown state '" + s.name() + "'" );
    if ( !has_action( a ) )
        throw input_error( "unknown action '" + a.name() + "'" );

    auto it = _step.find( { s, a } );
    if ( it == _step.end() )
        return std::nullopt;
    return it->second;
}

std::optional< state_id > transition_system::run( const state_id& s, std::span< const action_id > seq ) const
{
    if ( !has_state( s ) )
        throw input_error( "unknown state '" + s.name() + "'" );

    std::optional< state_id > current = s;
    for ( const auto& a : seq )
    {
        current = successor( *current, a );
        if ( !current )
            return std::nullopt;
    }
    return current;
}

std::vector< transition > transition_system::outgoing( const state_id& s ) const
{
    std::vector< transition > out;
    auto first = _transitions.lower_bound( transition{ s, action_id{}, state_id{} } );
    for ( auto it = first; it != _transitions.end() && it->from == s; ++it )
        out.push_back( *it );
    return out;
}

value_system::value_system( const std::vector< std::vector< value_id > >& tiers )
{
    unsigned rank = 0;
    for ( const auto& tier : tiers )
    {
        if ( tier.empty() )
            throw input_error( "empty value tier" );
        auto sorted = tier;
        std::sort( sorted.begin(), sorted.end() );
        for ( const auto& v : sorted )
        {
            if ( !_rank.emplace( v, rank ).second )
                throw input_error( "value '" + v.name() + "' declared twice" );
            _values.push_back( v );
        }
        ++rank;
    }
}

unsigned value_system::rank( const value_id& v ) const
{
    auto it = _rank.find( v );
    if ( it == _rank.end() )
        throw input_error( "unknown value '" + v.name() + "'" );
    return it->second;
}

std::weak_ordering value_system::compare( const value_id& v, const value_id& w ) const
{
    return rank( v ) <=> rank( w );
}

std::vector< std::vector< value_id > > value_system::tiers() const
{
    std::vector< std::vector< value_id > > out;
    for ( const auto& v : _values )
    {
        auto r = _rank.at( v );
        if ( out.size() <= r )
            out.resize( r + 1 );
        out[ r ].push_back( v );
    }
    return out;
}

const char* to_string( sign s )
{
    return s == sign::promote ? "promote" : "demote";
}

sign_set::sign_set( std::initializer_list< sign > signs )
{
    for ( auto s : signs )
        insert( s );
}

sign_set value_based_system::label_status( const transition& t, const value_id& v ) const
{
    if ( !_ts.has_transition( t ) )
        throw input_error( "unknown transition " + to_string( t ) );
    if ( !_vs.contains( v ) )
        throw input_error( "unknown value '" + v.name() + "'" );

    sign_set out;
    for ( auto s : { sign::promote, sign::demote } )
        if ( _delta.contains( value_label{ s, v, t } ) )
            out.insert( s );
    return out;
}

const char* to_string( rule r )
{
    switch ( r )
    {
    case rule::no_states: return "no-states";
    case rule::no_actions: return "no-actions";
    case rule::undeclared_state: return "undeclared-state";
    case rule::undeclared_action: return "undeclared-action";
    case rule::undeclared_value: return "undeclared-value";
    case rule::undeclared_transition: return "undeclared-transition";
    case rule::nondeterminism: return "nondeterminism";
    case rule::seriality: return "seriality";
    case rule::conflicting_labels: return "conflicting-labels";
    }
    return "unknown";
}

std::vector< violation > validate( const value_based_system& system, const validation_options& options )
{
    std::vector< violation > out;
    const auto& ts = system.ts();

    auto report = [ & ]( rule r, severity level, std::string element, std::string message ) {
        out.push_back( violation{ r, level, std::move( element ), std::move( message ) } );
    };

    if ( ts.states().empty() )
        report( rule::no_states, severity::error, "", "the system declares no states" );
    if ( ts.actions().empty() )
        report( rule::no_actions, severity::error, "", "the system declares no actions" );

    for ( const auto& t : ts.transitions() )
    {
        for ( const auto* s : { &t.from, &t.to } )
            if ( !ts.has_state( *s ) )
                report( rule::undeclared_state, severity::error, s->name(),
                        "transition " + to_string( t ) + " uses undeclared state '" + s->name() + "'" );
        if ( !ts.has_action( t.action ) )
            report( rule::undeclared_action, severity::error, t.action.name(),
                    "transition " + to_string( t ) + " uses undeclared action '" + t.action.name() + "'" );
    }

    for ( const auto& [ s, props ] : ts.prop_labels() )
        if ( !ts.has_state( s ) )
            report( rule::undeclared_state, severity::error, s.name(),
                    "propositions attached to undeclared state '" + s.name() + "'" );

    // Transitions are ordered by (from, action, to), so clashes are adjacent.
    const transition* previous = nullptr;
    for ( const auto& t : ts.transitions() )
    {
        if ( previous && previous->from == t.from && previous->action == t.action )
            report( rule::nondeterminism, severity::error, "(" + t.from.name() + "," + t.action.name() + ")",
                    "action '" + t.action.name() + "' leads from '" + t.from.name() + "' to both '" +
                        previous->to.name() + "' and '" + t.to.name() + "'" );
        previous = &t;
    }

    for ( const auto& s : ts.states() )
    {
        bool has_successor = std::any_of( ts.transitions().begin(), ts.transitions().end(),
                                          [ & ]( const transition& t ) { return t.from == s; } );
        if ( !has_successor )
            report( rule::seriality, options.allow_terminal ? severity::warning : severity::error, s.name(),
                    "state '" + s.name() + "' has no outgoing transition" );
    }

    for ( const auto& label : system.delta() )
    {
        if ( !system.vs().contains( label.value ) )
            report( rule::undeclared_value, severity::error, label.value.name(),
                    "label on " + to_string( label.edge ) + " uses undeclared value '" + label.value.name() + "'" );
        if ( !ts.has_transition( label.edge ) )
            report( rule::undeclared_transition, severity::error, to_string( label.edge ),
                    "value label on undeclared transition " + to_string( label.edge ) );
        if ( label.status == sign::promote &&
             system.delta().contains( value_label{ sign::demote, label.value, label.edge } ) )
            report( rule::conflicting_labels, severity::warning, to_string( label.edge ),
                    "transition " + to_string( label.edge ) + " both promotes and demotes '" +
                        label.value.name() + "'" );
    }

    return out;
}

bool has_errors( std::span< const violation > violations )
{
    return std::any_of( violations.begin(), violations.end(),
                        []( const violation& v ) { return v.level == severity::error; } );
}

} // namespace planarg
