#include "planarg/argumentation.hpp"

#include <algorithm>

namespace planarg
{

std::optional< plan > argument::conclusion() const
{
    if ( is_ordinary() )
        return subject;
    return std::nullopt;
}

std::string label( const argument& a )
{
    if ( a.is_ordinary() )
        return "+" + a.value.name() + ":" + to_string( a.subject );
    return "-" + a.value.name() + ":!" + to_string( a.subject );
}

std::vector< argument > build_arguments( const value_based_system& system, const state_id& s0, const formula& goal,
                                         std::span< const plan > plans )
{
    std::set< argument > out;
    for ( const auto& p : plans )
    {
        auto profile = compute_value_profile( system, s0, p, goal );
        for ( const auto& [ v, signs ] : profile.entries() )
        {
            if ( signs.contains( sign::promote ) )
                out.insert( argument{ argument_kind::ordinary, v, p } );
            if ( signs.contains( sign::demote ) )
                out.insert( argument{ argument_kind::blocking, v, p } );
        }
    }
    return { out.begin(), out.end() };
}

relation build_attacks( std::span< const argument > arguments )
{
    relation out;
    for ( argument_index a = 0; a < arguments.size(); ++a )
    {
        for ( argument_index b = 0; b < arguments.size(); ++b )
        {
            const auto& x = arguments[ a ];
            const auto& y = arguments[ b ];
            bool conflict = false;
            if ( x.is_ordinary() && y.is_ordinary() )
                conflict = x.subject != y.subject;
            else if ( x.is_ordinary() != y.is_ordinary() )
                conflict = x.subject == y.subject;
            if ( conflict )
                out.emplace( a, b );
        }
    }
    return out;
}

relation build_defeats( std::span< const argument > arguments, const relation& attacks, const value_system& vs )
{
    relation out;
    for ( const auto& [ a, b ] : attacks )
    {
        if ( a >= arguments.size() || b >= arguments.size() )
            throw precondition_error( "attack refers to an unknown argument" );
        if ( vs.compare( arguments[ a ].value, arguments[ b ].value ) != std::weak_ordering::less )
            out.emplace( a, b );
    }
    return out;
}

paf::paf( std::vector< argument > arguments, relation attacks, relation defeats )
    : _arguments{ std::move( arguments ) }, _attacks{ std::move( attacks ) }, _defeats{ std::move( defeats ) },
      _defeaters( _arguments.size() ), _targets( _arguments.size() )
{
    auto in_range = [ & ]( const auto& edge ) {
        return edge.first < _arguments.size() && edge.second < _arguments.size();
    };
    if ( !std::all_of( _attacks.begin(), _attacks.end(), in_range ) ||
         !std::all_of( _defeats.begin(), _defeats.end(), in_range ) )
        throw precondition_error( "relation refers to an unknown argument" );

    for ( const auto& [ a, b ] : _defeats )
    {
        _targets[ a ].push_back( b );
        _defeaters[ b ].push_back( a );
    }
}

std::optional< argument_index > paf::find( const argument& a ) const
{
    auto it = std::find( _arguments.begin(), _arguments.end(), a );
    if ( it == _arguments.end() )
        return std::nullopt;
    return static_cast< argument_index >( it - _arguments.begin() );
}

paf build_paf( const value_based_system& system, const state_id& s0, const formula& goal,
               std::span< const plan > plans )
{
    auto arguments = build_arguments( system, s0, goal, plans );
    auto attacks = build_attacks( arguments );
    auto defeats = build_defeats( arguments, attacks, system.vs() );
    return paf{ std::move( arguments ), std::move( attacks ), std::move( defeats ) };
}

bool on_defeat_cycle( const paf& framework, argument_index a )
{
    std::vector< bool > seen( framework.size(), false );
    std::vector< argument_index > stack( framework.targets( a ).begin(), framework.targets( a ).end() );
    while ( !stack.empty() )
    {
        auto x = stack.back();
        stack.pop_back();
        if ( x == a )
            return true;
        if ( seen[ x ] )
            continue;
        seen[ x ] = true;
        for ( auto y : framework.targets( x ) )
            stack.push_back( y );
    }
    return false;
}

} // namespace planarg
