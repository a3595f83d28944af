#include "doctest.h"

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

#include "planarg/argumentation.hpp"

#include <algorithm>

using namespace planarg;
using fixtures::plan_of;

namespace
{

const system_document& pharmacy()
{
    static const auto doc = fixtures::load( "pharmacy.vts" );
    return doc;
}

paf pharmacy_paf()
{
    const auto& d = pharmacy();
    return build_paf( d.system, d.initial, d.goal, enumerate_plans( d.system, d.initial, d.goal, 5 ) );
}

argument ordinary( const char* v, std::initializer_list< const char* > actions )
{
    return argument{ argument_kind::ordinary, value_id{ v }, plan_of( actions ) };
}

argument blocking( const char* v, std::initializer_list< const char* > actions )
{
    return argument{ argument_kind::blocking, value_id{ v }, plan_of( actions ) };
}

argument_index index_of( const paf& af, const argument& a )
{
    auto i = af.find( a );
    REQUIRE( i.has_value() );
    return *i;
}

std::vector< std::string > labels( const paf& af, const extension& e )
{
    std::vector< std::string > out;
    for ( auto a : e.members )
        out.push_back( label( af.at( a ) ) );
    std::sort( out.begin(), out.end() );
    return out;
}

paf framework_of( std::vector< argument > args, const value_system& vs )
{
    auto attacks = build_attacks( args );
    auto defeats = build_defeats( args, attacks, vs );
    return paf{ std::move( args ), std::move( attacks ), std::move( defeats ) };
}

// a and b promote the same value through different plans.
paf symmetric()
{
    return framework_of( { ordinary( "v", { "l" } ), ordinary( "v", { "r" } ) }, value_system{ { { value_id{ "v" } } } } );
}

const std::vector< std::string > example_extension{ "+pv:(α2,α4,α5)", "+sf:(α2,α4,α5)", "-pv:!(α1,α6)",
                                                    "-sf:!(α2,α3)" };

} // namespace

TEST_CASE( "pharmacy arguments" )
{
    auto af = pharmacy_paf();
    std::vector< std::string > got;
    for ( const auto& a : af.arguments() )
        got.push_back( label( a ) );
    CHECK( got == std::vector< std::string >{ "+pv:(α2,α3)", "+pv:(α2,α4,α5)", "+sf:(α2,α4,α5)", "-gc:!(α2,α4,α5)",
                                              "-pv:!(α1,α6)", "-sf:!(α2,α3)" } );
    CHECK( af.at( 0 ).conclusion() == plan_of( { "α2", "α3" } ) );
    CHECK_FALSE( af.at( 3 ).conclusion().has_value() );
}

TEST_CASE( "pharmacy attacks" )
{
    auto af = pharmacy_paf();
    const auto b = index_of( af, ordinary( "pv", { "α2", "α3" } ) );
    const auto e = index_of( af, ordinary( "sf", { "α2", "α4", "α5" } ) );
    const auto c = index_of( af, blocking( "sf", { "α2", "α3" } ) );
    const auto a = index_of( af, blocking( "pv", { "α1", "α6" } ) );
    CHECK( af.attacks().contains( { b, e } ) );
    CHECK( af.attacks().contains( { e, b } ) );
    CHECK( af.attacks().contains( { b, c } ) );
    CHECK( af.attacks().contains( { c, b } ) );
    for ( const auto& [ x, y ] : af.attacks() )
        CHECK( ( x != a && y != a ) );
    CHECK( af.attacks().size() == 10 );
}

TEST_CASE( "pharmacy defeats" )
{
    auto af = pharmacy_paf();
    const auto a = index_of( af, blocking( "pv", { "α1", "α6" } ) );
    const auto b = index_of( af, ordinary( "pv", { "α2", "α3" } ) );
    const auto c = index_of( af, blocking( "sf", { "α2", "α3" } ) );
    const auto d = index_of( af, ordinary( "pv", { "α2", "α4", "α5" } ) );
    const auto e = index_of( af, ordinary( "sf", { "α2", "α4", "α5" } ) );
    const auto f = index_of( af, blocking( "gc", { "α2", "α4", "α5" } ) );
    CHECK( af.defeats() == relation{ { b, d }, { d, b }, { e, b }, { c, b }, { f, d }, { e, f } } );
    CHECK( af.defeats( f, d ) );
    CHECK_FALSE( af.defeats( d, f ) );
    CHECK( af.defeaters( a ).empty() );
    CHECK( af.targets( a ).empty() );
    CHECK( on_defeat_cycle( af, b ) );
    CHECK_FALSE( on_defeat_cycle( af, e ) );
}

TEST_CASE( "pharmacy extensions coincide across semantics" )
{
    auto af = pharmacy_paf();
    CHECK( labels( af, grounded( af ) ) == example_extension );
    for ( auto s : { semantics::preferred, semantics::stable } )
    {
        auto family = extensions( af, s );
        REQUIRE( family.size() == 1 );
        CHECK( labels( af, family[ 0 ] ) == example_extension );
    }
    CHECK( complete( af ).size() == 1 );
    for ( auto s : { semantics::grounded, semantics::complete, semantics::preferred, semantics::stable } )
        CHECK( optimal_plans( af, s ) == std::vector< plan >{ plan_of( { "α2", "α4", "α5" } ) } );
    CHECK( oracle::oracle_extensions( af, semantics::stable ) == stable( af ) );
}

TEST_CASE( "unlabelled plans give no arguments" )
{
    transition_system ts{ { state_id{ "s" }, state_id{ "t" } },
                          { action_id{ "a" } },
                          { { state_id{ "s" }, action_id{ "a" }, state_id{ "t" } },
                            { state_id{ "t" }, action_id{ "a" }, state_id{ "t" } } },
                          { { state_id{ "t" }, { "p" } } } };
    value_based_system sys{ ts, value_system{ { { value_id{ "v" } } } } };
    auto p = formula::prop( "p" );
    auto plans = enumerate_plans( sys, state_id{ "s" }, p, 2 );
    REQUIRE( plans.size() == 1 );
    CHECK( build_arguments( sys, state_id{ "s" }, p, plans ).empty() );
    CHECK_THROWS_AS( (void)build_arguments( sys, state_id{ "s" }, p, std::vector< plan >{ plan_of( { "a", "a", "a" } ), plan_of( { "b" } ) } ),
                     std::exception );
}

TEST_CASE( "a plan that promotes and demotes one value gets both arguments" )
{
    // Two steps: the first promotes v, the second demotes it.
    const state_id s0{ "s0" }, s1{ "s1" }, s2{ "s2" };
    const action_id a{ "a" };
    transition_system ts{ { s0, s1, s2 }, { a }, { { s0, a, s1 }, { s1, a, s2 }, { s2, a, s2 } }, { { s2, { "p" } } } };
    value_based_system sys{ ts, value_system{ { { value_id{ "v" } } } },
                            { { sign::promote, value_id{ "v" }, { s0, a, s1 } },
                              { sign::demote, value_id{ "v" }, { s1, a, s2 } } } };
    auto p = formula::prop( "p" );
    auto args = build_arguments( sys, s0, p, std::vector< plan >{ plan_of( { "a", "a" } ) } );
    CHECK( args == std::vector< argument >{ ordinary( "v", { "a", "a" } ), blocking( "v", { "a", "a" } ) } );
    for ( auto sg : { sign::promote, sign::demote } )
        CHECK( oracle::annotated_by_scan( sys, s0, annotated_query{ sg, value_id{ "v" }, { a, a }, p } ) );

    // Equal values: they defeat each other.
    auto af = framework_of( args, sys.vs() );
    CHECK( af.defeats( 0, 1 ) );
    CHECK( af.defeats( 1, 0 ) );
}

TEST_CASE( "attacks need a conclusion" )
{
    std::vector< argument > one{ ordinary( "v", { "a" } ) };
    CHECK( build_attacks( one ).empty() );
    std::vector< argument > blockers{ blocking( "v", { "a" } ), blocking( "w", { "b" } ), blocking( "w", { "a" } ) };
    CHECK( build_attacks( blockers ).empty() );
}

TEST_CASE( "empty framework" )
{
    paf af;
    CHECK( grounded( af ).members.empty() );
    for ( auto s : { semantics::complete, semantics::preferred, semantics::stable, semantics::grounded } )
    {
        auto family = extensions( af, s );
        REQUIRE( family.size() == 1 );
        CHECK( family[ 0 ].members.empty() );
        CHECK( optimal_plans( af, s ).empty() );
        CHECK( oracle::oracle_extensions( af, s ) == family );
    }
    auto why = explain( af, value_system{}, semantics::grounded );
    CHECK( why.arguments.empty() );
    CHECK( why.plans.empty() );
}

TEST_CASE( "two mutually defeating arguments" )
{
    auto af = symmetric();
    CHECK( af.defeats() == relation{ { 0, 1 }, { 1, 0 } } );
    CHECK( grounded( af ).members.empty() );
    const std::vector< std::vector< argument_index > > both{ { 0 }, { 1 } };
    for ( auto s : { semantics::preferred, semantics::stable } )
    {
        std::vector< std::vector< argument_index > > got;
        for ( const auto& e : extensions( af, s ) )
            got.push_back( e.members );
        CHECK( got == both );
        CHECK( oracle::oracle_extensions( af, s ) == extensions( af, s ) );
    }
    CHECK( complete( af ).size() == 3 );
    CHECK( optimal_plans( af, semantics::preferred ) == std::vector< plan >{ plan_of( { "l" } ), plan_of( { "r" } ) } );
    CHECK( optimal_plans( af, semantics::grounded ).empty() );

    auto why = explain( af, value_system{ { { value_id{ "v" } } } }, semantics::preferred );
    REQUIRE( why.arguments.size() == 2 );
    CHECK( why.arguments[ 0 ].status == acceptance::credulous );
    CHECK( why.arguments[ 1 ].status == acceptance::credulous );
}

TEST_CASE( "a strictly preferred blocking argument leaves nothing to select" )
{
    value_system vs{ { { value_id{ "low" } }, { value_id{ "high" } } } };
    auto af = framework_of( { ordinary( "low", { "a" } ), blocking( "high", { "a" } ) }, vs );
    CHECK( af.defeats() == relation{ { 1, 0 } } );
    for ( auto s : { semantics::grounded, semantics::complete, semantics::preferred, semantics::stable } )
    {
        CHECK( optimal_plans( af, s ).empty() );
        CHECK( oracle::oracle_extensions( af, s ) == extensions( af, s ) );
    }

    auto only_blocking = framework_of( { blocking( "high", { "a" } ) }, vs );
    CHECK( optimal_plans( only_blocking, semantics::grounded ).empty() );
}

TEST_CASE( "semantics names" )
{
    for ( auto s : { semantics::grounded, semantics::complete, semantics::preferred, semantics::stable } )
        CHECK( parse_semantics( to_string( s ) ) == s );
    CHECK_FALSE( parse_semantics( "ideal" ).has_value() );
}

TEST_CASE( "pharmacy explanation" )
{
    const auto& d = pharmacy();
    auto plans = enumerate_plans( d.system, d.initial, d.goal, 5 );
    auto af = build_paf( d.system, d.initial, d.goal, plans );
    auto why = explain( af, d.system.vs(), semantics::grounded, plans );

    const auto b = index_of( af, ordinary( "pv", { "α2", "α3" } ) );
    const auto c = index_of( af, blocking( "sf", { "α2", "α3" } ) );
    CHECK( why.arguments[ b ].status == acceptance::rejected );
    CHECK( std::find( why.arguments[ b ].responsible.begin(), why.arguments[ b ].responsible.end(), c ) !=
           why.arguments[ b ].responsible.end() );
    CHECK( why.arguments[ c ].status == acceptance::skeptical );

    REQUIRE( why.plans.size() == 3 );
    CHECK( why.plans[ 0 ].subject == plan_of( { "α1", "α6" } ) );
    CHECK( why.plans[ 0 ].status == plan_status::unrepresented );
    CHECK( why.plans[ 1 ].subject == plan_of( { "α2", "α3" } ) );
    CHECK( why.plans[ 1 ].status == plan_status::rejected );
    const auto& reasons = why.plans[ 1 ].reasons;
    auto by_c = std::find_if( reasons.begin(), reasons.end(), [ & ]( const defeat_reason& r ) { return r.defeater == c; } );
    REQUIRE( by_c != reasons.end() );
    CHECK( by_c->target == b );
    CHECK( std::string{ relation_symbol( by_c->comparison ) } == ">" );
    CHECK( why.plans[ 2 ].status == plan_status::selected );
    CHECK( why.plans[ 2 ].reasons.empty() );
}

TEST_CASE( "graph export" )
{
    auto dot = to_dot( pharmacy_paf() );
    CHECK( dot.find( "a0 [label=\"+pv:(α2,α3)\", style=solid];" ) != std::string::npos );
    CHECK( dot.find( "a3 [label=\"-gc:!(α2,α4,α5)\", style=dashed];" ) != std::string::npos );
    CHECK( dot.find( "a3 -> a1 [style=solid];" ) != std::string::npos );
    CHECK( dot.find( "a1 -> a3 [style=solid];" ) == std::string::npos );
    CHECK( dot.find( "a1 -> a3 [style=dotted, dir=none];" ) != std::string::npos );
    CHECK( dot.find( "a3 -> a1 [style=dotted" ) == std::string::npos );
    CHECK( dot.rfind( "digraph paf {\n", 0 ) == 0 );
}

// Properties over generated systems.

namespace
{

gen::property< props::instance > instances()
{
    auto systems = gen::systems();
    return { [ systems ]( gen::rng& r ) { return props::instantiate( systems.make( r ) ); },
             [ systems ]( const props::instance& x ) {
                 std::vector< props::instance > out;
                 for ( const auto& d : systems.candidates( x.doc ) )
                     out.push_back( props::instantiate( d ) );
                 return out;
             },
             [ systems ]( const props::instance& x ) { return systems.show( x.doc ); } };
}

void holds_on_generated( std::uint64_t seed, const std::function< bool( const props::instance& ) >& property )
{
    auto failure = gen::for_all< props::instance >( seed, 150, instances(), property );
    CHECK_MESSAGE( !failure, failure.value_or( "" ) );
}

} // namespace

TEST_CASE( "P1 two-length cycles" ) { holds_on_generated( 41, props::two_cycles ); }
TEST_CASE( "P2 defeat cycles consist of mutual defeats between equivalent values" )
{
    holds_on_generated( 42, props::cycles_are_symmetric );
}

TEST_CASE( "three plans promoting one value form an odd defeat cycle" )
{
    auto af = framework_of( { ordinary( "v", { "a" } ), ordinary( "v", { "b" } ), ordinary( "v", { "c" } ) },
                            value_system{ { { value_id{ "v" } } } } );
    CHECK( af.defeats().size() == 6 );
    CHECK( oracle::has_odd_cycle( af ) );
    // The cycle is symmetric, so preferred and stable still coincide.
    auto prf = preferred( af );
    auto stb = stable( af );
    REQUIRE( prf.size() == 3 );
    REQUIRE( stb.size() == 3 );
    for ( std::size_t i = 0; i < 3; ++i )
        CHECK( prf[ i ].members == stb[ i ].members );
}
TEST_CASE( "P3 irreflexivity" ) { holds_on_generated( 43, props::irreflexive ); }
TEST_CASE( "P4 preferred equals stable" ) { holds_on_generated( 44, props::preferred_is_stable ); }
TEST_CASE( "P5 preferred collapses to grounded" ) { holds_on_generated( 45, props::preferred_is_grounded ); }
TEST_CASE( "P6 one plan per extension" ) { holds_on_generated( 46, props::single_plan ); }
TEST_CASE( "P7 top values are accepted" ) { holds_on_generated( 47, props::top_value_accepted ); }

TEST_CASE( "P8 optimal plans exist iff an ordinary argument escapes stronger blockers" )
{
    for ( auto s : { semantics::preferred, semantics::stable, semantics::complete } )
        holds_on_generated( 48, [ s ]( const props::instance& x ) { return props::optimal_plans_nonempty( x, s ); } );
}

TEST_CASE( "P8 fails for grounded semantics on a symmetric cycle" )
{
    auto doc = fixtures::load( "symmetric.vts" );
    auto x = props::instantiate( doc );
    CHECK( props::optimal_plans_nonempty( x, semantics::preferred ) );
    CHECK_FALSE( props::optimal_plans_nonempty( x, semantics::grounded ) );
}

TEST_CASE( "defeats are sound" ) { holds_on_generated( 49, props::defeats_sound ); }

TEST_CASE( "semantics agree with the subset oracle" )
{
    holds_on_generated( 50, []( const props::instance& x ) {
        if ( x.framework.size() > 12 )
            return true;
        for ( auto s : { semantics::grounded, semantics::complete, semantics::preferred, semantics::stable } )
            if ( extensions( x.framework, s ) != oracle::oracle_extensions( x.framework, s ) )
                return false;
        return true;
    } );
}

namespace
{

// Eight ordinary arguments under an arbitrary irreflexive defeat graph, which
// reaches shapes the plan construction never produces.
paf eight_arguments( const relation& defeats )
{
    std::vector< argument > args;
    for ( int i = 0; i < 8; ++i )
        args.push_back( argument{ argument_kind::ordinary, value_id{ "v" }, plan{ { action_id{ "a" + std::to_string( i ) } } } } );
    return paf{ std::move( args ), defeats, defeats };
}

gen::property< relation > defeat_graphs()
{
    return { []( gen::rng& r ) {
                 relation out;
                 const double density = std::uniform_real_distribution<>{ 0.05, 0.5 }( r );
                 for ( argument_index a = 0; a < 8; ++a )
                     for ( argument_index b = 0; b < 8; ++b )
                         if ( a != b && gen::chance( r, density ) )
                             out.insert( { a, b } );
                 return out;
             },
             []( const relation& rel ) {
                 std::vector< relation > out;
                 for ( const auto& edge : rel )
                 {
                     auto smaller = rel;
                     smaller.erase( edge );
                     out.push_back( std::move( smaller ) );
                 }
                 return out;
             },
             []( const relation& rel ) {
                 std::string out;
                 for ( const auto& [ a, b ] : rel )
                     out += std::to_string( a ) + "->" + std::to_string( b ) + " ";
                 return out;
             } };
}

} // namespace

TEST_CASE( "semantics agree with the subset oracle on random 8-argument graphs" )
{
    auto failure = gen::for_all< relation >( 52, 300, defeat_graphs(), []( const relation& rel ) {
        const auto af = eight_arguments( rel );
        for ( auto s : { semantics::grounded, semantics::complete, semantics::preferred, semantics::stable } )
            if ( extensions( af, s ) != oracle::oracle_extensions( af, s ) )
                return false;
        return true;
    } );
    CHECK_MESSAGE( !failure, failure.value_or( "" ) );
}

TEST_CASE( "arguments are canonical and defeat cycles are found by reachability" )
{
    holds_on_generated( 51, []( const props::instance& x ) {
        const auto& args = x.framework.arguments();
        if ( !std::is_sorted( args.begin(), args.end() ) || std::adjacent_find( args.begin(), args.end() ) != args.end() )
            return false;
        for ( argument_index a = 0; a < x.framework.size(); ++a )
        {
            // a is on a cycle iff some defeater of a is reachable from a.
            std::set< argument_index > seen;
            std::vector< argument_index > todo{ a };
            while ( !todo.empty() )
            {
                auto v = todo.back();
                todo.pop_back();
                for ( auto w : x.framework.targets( v ) )
                    if ( seen.insert( w ).second )
                        todo.push_back( w );
            }
            if ( seen.contains( a ) != on_defeat_cycle( x.framework, a ) )
                return false;
        }
        return true;
    } );
}
