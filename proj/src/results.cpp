#include "planarg/textio.hpp"

#include "json.hpp"

#include <algorithm>

namespace planarg
{

const char* to_string( outcome o )
{
    switch ( o )
    {
    case outcome::selected: return "selected";
    case outcome::no_plan: return "no_plan_found";
    case outcome::all_plans_blocked: return "all_plans_blocked";
    }
    return "unknown";
}

outcome results::status() const
{
    if ( plans.empty() )
        return outcome::no_plan;
    if ( optimal.empty() )
        return outcome::all_plans_blocked;
    return outcome::selected;
}

namespace
{

using json = nlohmann::ordered_json;

std::string reason_text( const paf& af, const defeat_reason& r )
{
    const auto& d = af.at( r.defeater );
    const auto& t = af.at( r.target );
    return label( d ) + " defeats " + label( t ) + " (" + d.value.name() + " " + relation_symbol( r.comparison ) +
           " " + t.value.name() + ")";
}

std::vector< std::string > labels_of( const paf& af, const std::vector< argument_index >& members )
{
    std::vector< std::string > out;
    for ( auto a : members )
        out.push_back( label( af.at( a ) ) );
    return out;
}

acceptance status_in( const results& r, argument_index a )
{
    std::size_t hits = 0;
    for ( const auto& e : r.family )
        hits += e.contains( a ) ? 1 : 0;
    if ( hits == 0 )
        return acceptance::rejected;
    return hits == r.family.size() ? acceptance::skeptical : acceptance::credulous;
}

std::string structured( const results& r )
{
    const auto& af = r.framework;
    json doc;
    doc[ "semantics" ] = to_string( r.kind );
    doc[ "status" ] = to_string( r.status() );

    doc[ "plans" ] = json::array();
    for ( const auto& p : r.plans )
        doc[ "plans" ].push_back( to_string( p ) );

    doc[ "extensions" ] = json::array();
    for ( const auto& e : r.family )
        doc[ "extensions" ].push_back( labels_of( af, e.members ) );

    doc[ "optimal_plans" ] = json::array();
    for ( const auto& p : r.optimal )
        doc[ "optimal_plans" ].push_back( to_string( p ) );

    doc[ "arguments" ] = json::array();
    for ( argument_index a = 0; a < af.size(); ++a )
    {
        const auto& arg = af.at( a );
        json entry;
        entry[ "label" ] = label( arg );
        entry[ "kind" ] = arg.is_ordinary() ? "ordinary" : "blocking";
        entry[ "value" ] = arg.value.name();
        entry[ "plan" ] = json::array();
        for ( const auto& action : arg.subject.actions )
            entry[ "plan" ].push_back( action.name() );
        entry[ "status" ] = to_string( status_in( r, a ) );
        auto defeaters = af.defeaters( a );
        std::sort( defeaters.begin(), defeaters.end() );
        entry[ "defeated_by" ] = labels_of( af, defeaters );
        doc[ "arguments" ].push_back( std::move( entry ) );
    }

    if ( r.why )
    {
        json why;
        why[ "arguments" ] = json::array();
        for ( const auto& v : r.why->arguments )
        {
            json entry;
            entry[ "label" ] = label( af.at( v.subject ) );
            entry[ "status" ] = to_string( v.status );
            entry[ "responsible" ] = labels_of( af, v.responsible );
            why[ "arguments" ].push_back( std::move( entry ) );
        }
        why[ "plans" ] = json::array();
        for ( const auto& v : r.why->plans )
        {
            json entry;
            entry[ "plan" ] = to_string( v.subject );
            entry[ "status" ] = to_string( v.status );
            entry[ "reasons" ] = json::array();
            for ( const auto& reason : v.reasons )
                entry[ "reasons" ].push_back( {
                    { "defeater", label( af.at( reason.defeater ) ) },
                    { "target", label( af.at( reason.target ) ) },
                    { "comparison", af.at( reason.defeater ).value.name() + " " + relation_symbol( reason.comparison ) +
                                        " " + af.at( reason.target ).value.name() },
                } );
            why[ "plans" ].push_back( std::move( entry ) );
        }
        doc[ "explanation" ] = std::move( why );
    }

    return doc.dump( 2, ' ', false, json::error_handler_t::replace ) + "\n";
}

std::string human( const results& r )
{
    const auto& af = r.framework;
    std::string out;
    out += "semantics: " + std::string( to_string( r.kind ) ) + "\n";

    out += "plans: " + std::to_string( r.plans.size() ) + "\n";
    for ( const auto& p : r.plans )
        out += "  " + to_string( p ) + "\n";

    out += "arguments: " + std::to_string( af.size() ) + "\n";
    for ( argument_index a = 0; a < af.size(); ++a )
        out += "  " + label( af.at( a ) ) + "  " + to_string( status_in( r, a ) ) + "\n";

    out += "extensions: " + std::to_string( r.family.size() ) + "\n";
    for ( const auto& e : r.family )
    {
        out += "  {";
        auto names = labels_of( af, e.members );
        for ( std::size_t i = 0; i < names.size(); ++i )
            out += ( i ? ", " : "" ) + names[ i ];
        out += "}\n";
    }

    switch ( r.status() )
    {
    case outcome::no_plan: out += "no plan found\n"; break;
    case outcome::all_plans_blocked: out += "plans found but all blocked\n"; break;
    case outcome::selected:
        out += "optimal plans:";
        for ( const auto& p : r.optimal )
            out += " " + to_string( p );
        out += "\n";
        break;
    }

    if ( r.why )
    {
        out += "explanation:\n";
        for ( const auto& v : r.why->plans )
        {
            out += "  " + to_string( v.subject ) + ": " + to_string( v.status );
            if ( v.status == plan_status::unrepresented )
                out += " (promotes no value)";
            else if ( v.status == plan_status::rejected && v.reasons.empty() )
                out += " (its arguments stay undecided)";
            out += "\n";
            for ( const auto& reason : v.reasons )
                out += "    " + reason_text( af, reason ) + "\n";
        }
    }
    return out;
}

} // namespace

std::string emit_results( const results& r, output_format format )
{
    return format == output_format::structured ? structured( r ) : human( r );
}

} // namespace planarg
