#include "planarg/logic.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace planarg
{

struct formula::node
{
    formula::kind type;
    proposition name;
    action_id action;
    std::optional< formula > first;
    std::optional< formula > second;
    std::size_t depth = 1;
};

formula formula::prop( proposition name )
{
    return formula{ std::make_shared< const node >( node{ kind::proposition, std::move( name ), {}, {}, {}, 1 } ) };
}

formula formula::negation( formula operand )
{
    auto d = operand.depth() + 1;
    return formula{ std::make_shared< const node >( node{ kind::negation, {}, {}, std::move( operand ), {}, d } ) };
}

formula formula::box( action_id action, formula operand )
{
    auto d = operand.depth() + 1;
    return formula{
        std::make_shared< const node >( node{ kind::box, {}, std::move( action ), std::move( operand ), {}, d } ) };
}

formula formula::disjunction( formula lhs, formula rhs )
{
    auto d = std::max( lhs.depth(), rhs.depth() ) + 1;
    return formula{ std::make_shared< const node >(
        node{ kind::disjunction, {}, {}, std::move( lhs ), std::move( rhs ), d } ) };
}

formula formula::conjunction( formula lhs, formula rhs )
{
    auto d = std::max( lhs.depth(), rhs.depth() ) + 1;
    return formula{ std::make_shared< const node >(
        node{ kind::conjunction, {}, {}, std::move( lhs ), std::move( rhs ), d } ) };
}

formula formula::implication( formula lhs, formula rhs )
{
    auto d = std::max( lhs.depth(), rhs.depth() ) + 1;
    return formula{ std::make_shared< const node >(
        node{ kind::implication, {}, {}, std::move( lhs ), std::move( rhs ), d } ) };
}

formula formula::boxes( std::span< const action_id > seq, formula goal )
{
    formula out = std::move( goal );
    for ( auto it = seq.rbegin(); it != seq.rend(); ++it )
        out = box( *it, std::move( out ) );
    return out;
}

formula::kind formula::type() const
{
    return _node->type;
}

const proposition& formula::name() const
{
    assert( type() == kind::proposition );
    return _node->name;
}

const action_id& formula::action() const
{
    assert( type() == kind::box );
    return _node->action;
}

const formula& formula::operand() const
{
    assert( type() == kind::negation || type() == kind::box );
    return *_node->first;
}

const formula& formula::lhs() const
{
    return *_node->first;
}

const formula& formula::rhs() const
{
    return *_node->second;
}

std::size_t formula::depth() const
{
    return _node->depth;
}

bool formula::is_propositional() const
{
    switch ( type() )
    {
    case kind::proposition: return true;
    case kind::box: return false;
    case kind::negation: return operand().is_propositional();
    default: return lhs().is_propositional() && rhs().is_propositional();
    }
}

bool operator==( const formula& lhs, const formula& rhs )
{
    if ( lhs._node == rhs._node )
        return true;
    if ( lhs.type() != rhs.type() )
        return false;
    switch ( lhs.type() )
    {
    case formula::kind::proposition: return lhs.name() == rhs.name();
    case formula::kind::negation: return lhs.operand() == rhs.operand();
    case formula::kind::box: return lhs.action() == rhs.action() && lhs.operand() == rhs.operand();
    default: return lhs.lhs() == rhs.lhs() && lhs.rhs() == rhs.rhs();
    }
}

namespace
{

int precedence( formula::kind k )
{
    switch ( k )
    {
    case formula::kind::implication: return 1;
    case formula::kind::disjunction: return 2;
    case formula::kind::conjunction: return 3;
    case formula::kind::negation:
    case formula::kind::box: return 4;
    case formula::kind::proposition: return 5;
    }
    return 0;
}

void print( const formula& f, int min_precedence, std::string& out )
{
    const int p = precedence( f.type() );
    const bool parens = p < min_precedence;
    if ( parens )
        out += '(';

    switch ( f.type() )
    {
    case formula::kind::proposition: out += f.name(); break;
    case formula::kind::negation:
        out += '!';
        print( f.operand(), 4, out );
        break;
    case formula::kind::box:
        out += '[' + f.action().name() + ']';
        if ( f.operand().type() != formula::kind::box )
            out += ' ';
        print( f.operand(), 4, out );
        break;
    case formula::kind::conjunction:
        print( f.lhs(), 3, out );
        out += " & ";
        print( f.rhs(), 4, out );
        break;
    case formula::kind::disjunction:
        print( f.lhs(), 2, out );
        out += " | ";
        print( f.rhs(), 3, out );
        break;
    case formula::kind::implication:
        print( f.lhs(), 2, out );
        out += " -> ";
        print( f.rhs(), 1, out );
        break;
    }

    if ( parens )
        out += ')';
}

void collect( const formula& f, std::set< proposition >* props, std::set< action_id >* acts )
{
    switch ( f.type() )
    {
    case formula::kind::proposition:
        if ( props )
            props->insert( f.name() );
        break;
    case formula::kind::box:
        if ( acts )
            acts->insert( f.action() );
        collect( f.operand(), props, acts );
        break;
    case formula::kind::negation: collect( f.operand(), props, acts ); break;
    default:
        collect( f.lhs(), props, acts );
        collect( f.rhs(), props, acts );
    }
}

} // namespace

std::string formula::to_string() const
{
    std::string out;
    print( *this, 0, out );
    return out;
}

std::set< proposition > propositions( const formula& f )
{
    std::set< proposition > out;
    collect( f, &out, nullptr );
    return out;
}

std::set< action_id > actions( const formula& f )
{
    std::set< action_id > out;
    collect( f, nullptr, &out );
    return out;
}

namespace
{

bool holds( const transition_system& ts, const state_id& s, const formula& f, const check_options& options )
{
    switch ( f.type() )
    {
    case formula::kind::proposition: return ts.props_at( s ).contains( f.name() );
    case formula::kind::negation: return !holds( ts, s, f.operand(), options );
    case formula::kind::disjunction: return holds( ts, s, f.lhs(), options ) || holds( ts, s, f.rhs(), options );
    // Abbreviations: f & g := !(!f | !g), f -> g := !f | g.
    case formula::kind::conjunction: return holds( ts, s, f.lhs(), options ) && holds( ts, s, f.rhs(), options );
    case formula::kind::implication: return !holds( ts, s, f.lhs(), options ) || holds( ts, s, f.rhs(), options );
    case formula::kind::box:
    {
        auto next = ts.successor( s, f.action() );
        if ( !next )
            return options.on_undefined == undefined_box::vacuous;
        return holds( ts, *next, f.operand(), options );
    }
    }
    return false;
}

} // namespace

bool check( const transition_system& ts, const state_id& s, const formula& f, const check_options& options )
{
    if ( !ts.has_state( s ) )
        throw input_error( "unknown state '" + s.name() + "'" );
    return holds( ts, s, f, options );
}

bool check( const value_based_system& system, const state_id& s, const formula& f, const check_options& options )
{
    return check( system.ts(), s, f, options );
}

bool check_everywhere( const value_based_system& system, const formula& f, const check_options& options )
{
    const auto& ts = system.ts();
    return std::all_of( ts.states().begin(), ts.states().end(),
                        [ & ]( const state_id& s ) { return holds( ts, s, f, options ); } );
}

bool check_annotated( const value_based_system& system, const state_id& s, const annotated_query& query )
{
    const auto& ts = system.ts();
    if ( query.seq.empty() )
        throw input_error( "annotated query needs at least one action" );
    if ( !query.goal.is_propositional() )
        throw input_error( "annotated query goal must not contain a box" );
    if ( !system.vs().contains( query.value ) )
        throw input_error( "unknown value '" + query.value.name() + "'" );
    if ( !ts.has_state( s ) )
        throw input_error( "unknown state '" + s.name() + "'" );

    bool labelled = false;
    state_id current = s;
    for ( const auto& a : query.seq )
    {
        auto next = ts.successor( current, a );
        if ( !next )
            return false;
        labelled = labelled || system.delta().contains( value_label{ query.status, query.value, { current, a, *next } } );
        current = *next;
    }
    return labelled && holds( ts, current, query.goal, {} );
}

std::string to_string( const annotated_query& query )
{
    std::string out = query.status == sign::promote ? "+" : "-";
    out += query.value.name() + " : " + formula::boxes( query.seq, query.goal ).to_string();
    return out;
}

} // namespace planarg
