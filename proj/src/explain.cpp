#include "planarg/argumentation.hpp"

#include <algorithm>

namespace planarg
{

const char* to_string( acceptance a )
{
    switch ( a )
    {
    case acceptance::skeptical: return "skeptical";
    case acceptance::credulous: return "credulous";
    case acceptance::rejected: return "rejected";
    }
    return "unknown";
}

const char* to_string( plan_status s )
{
    switch ( s )
    {
    case plan_status::selected: return "selected";
    case plan_status::rejected: return "rejected";
    case plan_status::unrepresented: return "unrepresented";
    }
    return "unknown";
}

const char* relation_symbol( std::weak_ordering o )
{
    if ( o == std::weak_ordering::less )
        return "<";
    if ( o == std::weak_ordering::greater )
        return ">";
    return "=";
}

explanation explain( const paf& framework, const value_system& vs, semantics s, std::span< const extension > family,
                     std::span< const plan > plans )
{
    explanation out{ s, {}, {} };

    std::vector< acceptance > status( framework.size(), acceptance::rejected );
    for ( argument_index a = 0; a < framework.size(); ++a )
    {
        auto hits = std::count_if( family.begin(), family.end(), [ & ]( const extension& e ) { return e.contains( a ); } );
        if ( hits > 0 )
            status[ a ] = static_cast< std::size_t >( hits ) == family.size() ? acceptance::skeptical
                                                                               : acceptance::credulous;
    }

    for ( argument_index a = 0; a < framework.size(); ++a )
    {
        argument_verdict verdict{ a, status[ a ], framework.defeaters( a ), {} };
        std::sort( verdict.defeaters.begin(), verdict.defeaters.end() );
        if ( status[ a ] == acceptance::rejected && framework.at( a ).is_ordinary() )
            for ( auto d : verdict.defeaters )
                if ( status[ d ] != acceptance::rejected )
                    verdict.responsible.push_back( d );
        out.arguments.push_back( std::move( verdict ) );
    }

    std::set< plan > candidates( plans.begin(), plans.end() );
    for ( const auto& arg : framework.arguments() )
        candidates.insert( arg.subject );

    const auto selected = optimal_plans( framework, family );
    for ( const auto& p : candidates )
    {
        plan_verdict verdict{ p, plan_status::rejected, {} };
        bool represented = false;
        for ( argument_index a = 0; a < framework.size(); ++a )
        {
            const auto& arg = framework.at( a );
            if ( !arg.is_ordinary() || arg.subject != p )
                continue;
            represented = true;
            for ( auto d : out.arguments[ a ].responsible )
                verdict.reasons.push_back(
                    defeat_reason{ d, a, vs.compare( framework.at( d ).value, arg.value ) } );
        }

        if ( std::binary_search( selected.begin(), selected.end(), p ) )
        {
            verdict.status = plan_status::selected;
            verdict.reasons.clear();
        }
        else if ( !represented )
            verdict.status = plan_status::unrepresented;
        out.plans.push_back( std::move( verdict ) );
    }

    return out;
}

explanation explain( const paf& framework, const value_system& vs, semantics s, std::span< const plan > plans )
{
    auto family = extensions( framework, s );
    return explain( framework, vs, s, family, plans );
}

std::string to_dot( const paf& framework )
{
    auto quote = []( const std::string& text ) {
        std::string out = "\"";
        for ( char c : text )
        {
            if ( c == '"' || c == '\\' )
                out += '\\';
            out += c;
        }
        return out + "\"";
    };

    std::string out = "digraph paf {\n";
    for ( argument_index a = 0; a < framework.size(); ++a )
    {
        const auto& arg = framework.at( a );
        out += "  a" + std::to_string( a ) + " [label=" + quote( label( arg ) ) +
               ", style=" + ( arg.is_ordinary() ? "solid" : "dashed" ) + "];\n";
    }
    for ( const auto& [ a, b ] : framework.attacks() )
        if ( a < b || !framework.attacks().contains( { b, a } ) )
            out += "  a" + std::to_string( a ) + " -> a" + std::to_string( b ) + " [style=dotted, dir=none];\n";
    for ( const auto& [ a, b ] : framework.defeats() )
        out += "  a" + std::to_string( a ) + " -> a" + std::to_string( b ) + " [style=solid];\n";
    out += "}\n";
    return out;
}

} // namespace planarg
