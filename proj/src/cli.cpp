#include "planarg/cli.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace planarg
{

results solve( const system_document& doc, const solve_options& options )
{
    const auto& system = doc.system;
    results r;
    r.kind = options.kind;
    r.plans = enumerate_plans( system, doc.initial, doc.goal, options.max_len.value_or( default_max_len( system ) ),
                               options.policy );
    r.framework = build_paf( system, doc.initial, doc.goal, r.plans );
    r.family = extensions( r.framework, options.kind );
    r.optimal = optimal_plans( r.framework, r.family );
    if ( options.explain )
        r.why = explain( r.framework, system.vs(), options.kind, r.family, r.plans );
    return r;
}

namespace
{

struct io_failure
{
    std::string message;
};

std::string read_file( const std::string& path )
{
    std::error_code ec;
    if ( !std::filesystem::is_regular_file( path, ec ) )
        throw io_failure{ "cannot read '" + path + "': not a readable file" };
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw io_failure{ "cannot open '" + path + "'" };
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if ( in.bad() )
        throw io_failure{ "error while reading '" + path + "'" };
    return buffer.str();
}

// Parses the file, printing diagnostics; nullopt means the input was rejected.
std::optional< system_document > load( const std::string& path, bool allow_terminal, std::ostream& err )
{
    auto text = read_file( path );
    auto doc = parse_system( text, parse_options{ allow_terminal } );
    for ( const auto& d : doc.diagnostics )
        err << path << ":" << to_string( d ) << "\n";
    return std::move( doc.value );
}

} // namespace

int run_cli( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Value-based plan selection: verify plans, argue over them, pick the optimal ones." };
    app.require_subcommand( 1 );

    std::string file;
    bool allow_terminal = false;

    auto* validate_cmd = app.add_subcommand( "validate", "Parse and validate a system description" );
    validate_cmd->add_option( "file", file, "System description" )->required();
    validate_cmd->add_flag( "--allow-terminal", allow_terminal, "Accept states without successors" );

    std::string query_text;
    std::string state_name;
    auto* check_cmd = app.add_subcommand( "check", "Model-check a formula or an annotated query" );
    check_cmd->add_option( "file", file, "System description" )->required();
    check_cmd->add_option( "query", query_text, "Formula, or '+v : [a1][a2] goal' / '-v : [a1][a2] goal'" )->required();
    check_cmd->add_option( "--state", state_name, "Evaluate at this state instead of the initial one" );
    check_cmd->add_flag( "--allow-terminal", allow_terminal, "Accept states without successors" );

    solve_options options;
    std::string semantics_name = "grounded";
    std::string revisit_name = "forbid";
    std::string format_name = "human";
    std::string graph_path;
    auto* solve_cmd = app.add_subcommand( "solve", "Enumerate plans, build the argumentation framework, select plans" );
    solve_cmd->add_option( "file", file, "System description" )->required();
    solve_cmd->add_option( "--semantics", semantics_name, "Extension semantics" )
        ->check( CLI::IsMember( { "grounded", "complete", "preferred", "stable" } ) );
    solve_cmd->add_option( "--max-len", options.max_len, "Longest plan considered (default: number of states)" )
        ->check( CLI::PositiveNumber );
    solve_cmd->add_option( "--revisit", revisit_name, "Whether plans may revisit states" )
        ->check( CLI::IsMember( { "forbid", "allow" } ) );
    solve_cmd->add_option( "--format", format_name, "Output format" )
        ->check( CLI::IsMember( { "human", "structured" } ) );
    solve_cmd->add_option( "--export-graph", graph_path, "Write the framework as a Graphviz file" );
    solve_cmd->add_flag( "--explain", options.explain, "Explain why each plan was selected or rejected" );
    solve_cmd->add_flag( "--allow-terminal", allow_terminal, "Accept states without successors" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::CallForHelp& e )
    {
        return app.exit( e, out, err );
    }
    catch ( const CLI::ParseError& e )
    {
        app.exit( e, out, err );
        return exit_invalid_input;
    }

    try
    {
        auto doc = load( file, allow_terminal, err );
        if ( !doc )
            return exit_invalid_input;

        if ( *validate_cmd )
        {
            out << file << ": ok\n";
            return exit_ok;
        }

        if ( *check_cmd )
        {
            auto parsed_query = parse_query( query_text );
            for ( const auto& d : parsed_query.diagnostics )
                err << "query:" << to_string( d ) << "\n";
            if ( !parsed_query )
                return exit_invalid_input;

            const state_id at = state_name.empty() ? doc->initial : state_id{ state_name };
            bool holds = std::visit(
                [ & ]( const auto& q ) {
                    if constexpr ( std::is_same_v< std::decay_t< decltype( q ) >, formula > )
                        return check( doc->system, at, q );
                    else
                        return check_annotated( doc->system, at, q );
                },
                *parsed_query.value );
            out << ( holds ? "true" : "false" ) << "\n";
            return exit_ok;
        }

        options.kind = *parse_semantics( semantics_name );
        options.policy = revisit_name == "allow" ? revisit::allow : revisit::forbid;
        auto r = solve( *doc, options );
        out << emit_results( r, format_name == "structured" ? output_format::structured : output_format::human );

        if ( !graph_path.empty() )
        {
            std::ofstream graph( graph_path, std::ios::binary );
            graph << to_dot( r.framework );
            if ( !graph )
            {
                err << "cannot write '" << graph_path << "'\n";
                return exit_io_failure;
            }
        }
        return exit_ok;
    }
    catch ( const io_failure& e )
    {
        err << e.message << "\n";
        return exit_io_failure;
    }
    catch ( const input_error& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }
    catch ( const precondition_error& e )
    {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }
}

} // namespace planarg
