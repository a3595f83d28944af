#pragma once

#include "planarg/textio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace planarg::fixtures
{

inline std::string path( const std::string& name )
{
    return std::string{ PLANARG_FIXTURES } + "/" + name;
}

inline std::string read( const std::string& name )
{
    std::ifstream in( path( name ), std::ios::binary );
    if ( !in )
        throw std::runtime_error( "missing fixture " + name );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline system_document load( const std::string& name )
{
    auto doc = parse_system( read( name ) );
    if ( !doc )
        throw std::runtime_error( "fixture " + name + " does not parse" );
    return *doc.value;
}

inline std::vector< action_id > seq( std::initializer_list< const char* > names )
{
    std::vector< action_id > out;
    for ( const auto* n : names )
        out.emplace_back( n );
    return out;
}

inline plan plan_of( std::initializer_list< const char* > names )
{
    return plan{ seq( names ) };
}

} // namespace planarg::fixtures
