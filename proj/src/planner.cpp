#include "planarg/planner.hpp"

#include <algorithm>
#include <functional>

namespace planarg
{

std::string to_string( const plan& p )
{
    std::string out = "(";
    for ( std::size_t i = 0; i < p.actions.size(); ++i )
    {
        if ( i )
            out += ',';
        out += p.actions[ i ].name();
    }
    return out + ")";
}

std::size_t default_max_len( const value_based_system& system )
{
    return system.ts().states().size();
}

std::vector< plan > enumerate_plans( const value_based_system& system, const state_id& s0, const formula& goal,
                                     std::size_t max_len, revisit policy )
{
    const auto& ts = system.ts();
    if ( !ts.has_state( s0 ) )
        throw input_error( "unknown initial state '" + s0.name() + "'" );
    if ( !goal.is_propositional() )
        throw precondition_error( "plan goals must not contain a box" );
    if ( max_len == 0 )
        throw precondition_error( "maximum plan length must be positive" );

    std::vector< plan > out;
    std::vector< action_id > prefix;
    std::vector< state_id > visited{ s0 };

    std::function< void( const state_id& ) > extend = [ & ]( const state_id& s ) {
        if ( prefix.size() == max_len )
            return;
        for ( const auto& t : ts.outgoing( s ) )
        {
            if ( policy == revisit::forbid && std::find( visited.begin(), visited.end(), t.to ) != visited.end() )
                continue;
            prefix.push_back( t.action );
            visited.push_back( t.to );
            if ( check( ts, t.to, goal ) )
                out.push_back( plan{ prefix } );
            extend( t.to );
            visited.pop_back();
            prefix.pop_back();
        }
    };
    extend( s0 );

    std::sort( out.begin(), out.end() );
    return out;
}

bool is_plan( const value_based_system& system, const state_id& s0, std::span< const action_id > seq,
              const formula& goal )
{
    if ( seq.empty() )
        throw precondition_error( "a plan has at least one action" );
    return check( system, s0, formula::boxes( seq, goal ) );
}

value_profile::value_profile( std::map< value_id, sign_set > signs )
{
    for ( auto& [ v, s ] : signs )
        if ( !s.empty() )
            _signs.emplace( v, s );
}

sign_set value_profile::signs( const value_id& v ) const
{
    auto it = _signs.find( v );
    return it == _signs.end() ? sign_set{} : it->second;
}

value_profile compute_value_profile( const value_based_system& system, const state_id& s0, const plan& p,
                                     const formula& goal )
{
    if ( p.actions.empty() || !is_plan( system, s0, p.actions, goal ) )
        throw precondition_error( to_string( p ) + " is not a plan for goal " + goal.to_string() );

    std::map< value_id, sign_set > signs;
    state_id current = s0;
    for ( const auto& a : p.actions )
    {
        state_id next = *system.ts().successor( current, a );
        transition t{ current, a, next };
        for ( const auto& label : system.delta() )
            if ( label.edge == t )
                signs[ label.value ].insert( label.status );
        current = next;
    }
    return value_profile{ std::move( signs ) };
}

} // namespace planarg
