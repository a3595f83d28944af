#include "planarg/argumentation.hpp"

#include <algorithm>
#include <cstdint>

namespace planarg
{

const char* to_string( semantics s )
{
    switch ( s )
    {
    case semantics::complete: return "complete";
    case semantics::grounded: return "grounded";
    case semantics::preferred: return "preferred";
    case semantics::stable: return "stable";
    }
    return "unknown";
}

std::optional< semantics > parse_semantics( std::string_view name )
{
    for ( auto s : { semantics::complete, semantics::grounded, semantics::preferred, semantics::stable } )
        if ( name == to_string( s ) )
            return s;
    return std::nullopt;
}

bool extension::contains( argument_index a ) const
{
    return std::binary_search( members.begin(), members.end(), a );
}

extension grounded( const paf& framework )
{
    const auto n = framework.size();
    std::vector< bool > in( n, false );
    std::vector< bool > out( n, false ); // defeated by an accepted argument

    bool changed = true;
    while ( changed )
    {
        changed = false;
        for ( argument_index a = 0; a < n; ++a )
        {
            if ( in[ a ] )
                continue;
            const auto& attackers = framework.defeaters( a );
            bool defended = std::all_of( attackers.begin(), attackers.end(), [ & ]( argument_index b ) { return out[ b ]; } );
            if ( !defended )
                continue;
            in[ a ] = true;
            changed = true;
            for ( auto b : framework.targets( a ) )
                out[ b ] = true;
        }
    }

    extension e{ {}, semantics::grounded };
    for ( argument_index a = 0; a < n; ++a )
        if ( in[ a ] )
            e.members.push_back( a );
    return e;
}

namespace
{

void sort_family( std::vector< extension >& family )
{
    std::sort( family.begin(), family.end(),
               []( const extension& x, const extension& y ) { return x.members < y.members; } );
    family.erase( std::unique( family.begin(), family.end() ), family.end() );
}

enum class mark : std::uint8_t
{
    blank,
    in,
    out,
    undec
};

// Backtracking over complete labellings: IN iff every defeater is OUT, OUT
// iff some defeater is IN, UNDEC otherwise. Stable extensions are the
// complete labellings without UNDEC.
class labelling_search
{
    const paf& _af;
    bool _allow_undec;
    semantics _kind;
    std::vector< extension > _found;

    // Applies the forced labels; false on contradiction.
    bool propagate( std::vector< mark >& lab ) const
    {
        bool changed = true;
        while ( changed )
        {
            changed = false;
            for ( argument_index a = 0; a < _af.size(); ++a )
            {
                std::size_t n_in = 0, n_out = 0, n_blank = 0, n_undec = 0;
                argument_index last_blank = 0;
                for ( auto b : _af.defeaters( a ) )
                {
                    switch ( lab[ b ] )
                    {
                    case mark::in: ++n_in; break;
                    case mark::out: ++n_out; break;
                    case mark::undec: ++n_undec; break;
                    case mark::blank:
                        ++n_blank;
                        last_blank = b;
                        break;
                    }
                }

                switch ( lab[ a ] )
                {
                case mark::blank:
                    if ( n_in > 0 )
                        lab[ a ] = mark::out;
                    else if ( n_blank == 0 && n_undec == 0 )
                        lab[ a ] = mark::in;
                    else
                        break;
                    changed = true;
                    break;
                case mark::in:
                    if ( n_in > 0 || n_undec > 0 )
                        return false;
                    for ( auto b : _af.defeaters( a ) )
                        if ( lab[ b ] == mark::blank )
                        {
                            lab[ b ] = mark::out;
                            changed = true;
                        }
                    break;
                case mark::out:
                    if ( n_in == 0 && n_blank == 0 )
                        return false;
                    if ( n_in == 0 && n_blank == 1 )
                    {
                        lab[ last_blank ] = mark::in;
                        changed = true;
                    }
                    break;
                case mark::undec:
                    if ( n_in > 0 || ( n_blank == 0 && n_undec == 0 ) )
                        return false;
                    break;
                }
            }
        }
        return true;
    }

    void search( std::vector< mark > lab )
    {
        if ( !propagate( lab ) )
            return;

        auto next = std::find( lab.begin(), lab.end(), mark::blank );
        if ( next == lab.end() )
        {
            extension e{ {}, _kind };
            for ( argument_index a = 0; a < lab.size(); ++a )
                if ( lab[ a ] == mark::in )
                    e.members.push_back( a );
            _found.push_back( std::move( e ) );
            return;
        }

        const auto pos = static_cast< std::size_t >( next - lab.begin() );
        for ( auto choice : { mark::in, mark::out, mark::undec } )
        {
            if ( choice == mark::undec && !_allow_undec )
                continue;
            auto branch = lab;
            branch[ pos ] = choice;
            search( std::move( branch ) );
        }
    }

public:
    labelling_search( const paf& af, semantics kind )
        : _af{ af }, _allow_undec{ kind != semantics::stable }, _kind{ kind } {}

    std::vector< extension > run()
    {
        search( std::vector< mark >( _af.size(), mark::blank ) );
        sort_family( _found );
        return std::move( _found );
    }
};

// Admissible-set search that keeps only subset-maximal results. A branch is
// abandoned once everything it could still accept fits inside an extension
// already found.
class preferred_search
{
    enum class state : std::uint8_t
    {
        blank,
        in,
        excluded
    };

    const paf& _af;
    std::vector< std::vector< bool > > _found;

    bool propagate( std::vector< state >& lab ) const
    {
        bool changed = true;
        while ( changed )
        {
            changed = false;
            for ( argument_index a = 0; a < _af.size(); ++a )
            {
                if ( lab[ a ] == state::in )
                {
                    for ( const auto* neighbours : { &_af.defeaters( a ), &_af.targets( a ) } )
                        for ( auto b : *neighbours )
                        {
                            if ( lab[ b ] == state::in )
                                return false;
                            if ( lab[ b ] == state::blank )
                            {
                                lab[ b ] = state::excluded;
                                changed = true;
                            }
                        }

                    // Every defeater must itself be defeated by a member.
                    for ( auto b : _af.defeaters( a ) )
                    {
                        std::size_t n_in = 0, n_blank = 0;
                        argument_index last_blank = 0;
                        for ( auto c : _af.defeaters( b ) )
                        {
                            if ( lab[ c ] == state::in )
                                ++n_in;
                            else if ( lab[ c ] == state::blank )
                            {
                                ++n_blank;
                                last_blank = c;
                            }
                        }
                        if ( n_in == 0 && n_blank == 0 )
                            return false;
                        if ( n_in == 0 && n_blank == 1 )
                        {
                            lab[ last_blank ] = state::in;
                            changed = true;
                        }
                    }
                }
                else if ( lab[ a ] == state::blank )
                {
                    // A defeater nobody can counter rules a out.
                    for ( auto b : _af.defeaters( a ) )
                    {
                        const auto& counters = _af.defeaters( b );
                        bool counterable = std::any_of( counters.begin(), counters.end(),
                                                        [ & ]( argument_index c ) { return lab[ c ] != state::excluded; } );
                        if ( !counterable )
                        {
                            lab[ a ] = state::excluded;
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
        return true;
    }

    bool subsumed( const std::vector< state >& lab ) const
    {
        return std::any_of( _found.begin(), _found.end(), [ & ]( const std::vector< bool >& e ) {
            for ( argument_index a = 0; a < lab.size(); ++a )
                if ( lab[ a ] != state::excluded && !e[ a ] )
                    return false;
            return true;
        } );
    }

    void record( const std::vector< state >& lab )
    {
        std::vector< bool > e( lab.size() );
        for ( argument_index a = 0; a < lab.size(); ++a )
            e[ a ] = lab[ a ] == state::in;

        auto is_subset = []( const std::vector< bool >& x, const std::vector< bool >& y ) {
            for ( std::size_t i = 0; i < x.size(); ++i )
                if ( x[ i ] && !y[ i ] )
                    return false;
            return true;
        };
        if ( std::any_of( _found.begin(), _found.end(), [ & ]( const auto& f ) { return is_subset( e, f ); } ) )
            return;
        std::erase_if( _found, [ & ]( const auto& f ) { return is_subset( f, e ); } );
        _found.push_back( std::move( e ) );
    }

    void search( std::vector< state > lab )
    {
        if ( !propagate( lab ) || subsumed( lab ) )
            return;

        auto next = std::find( lab.begin(), lab.end(), state::blank );
        if ( next == lab.end() )
        {
            record( lab );
            return;
        }

        const auto pos = static_cast< std::size_t >( next - lab.begin() );
        for ( auto choice : { state::in, state::excluded } )
        {
            auto branch = lab;
            branch[ pos ] = choice;
            search( std::move( branch ) );
        }
    }

public:
    explicit preferred_search( const paf& af ) : _af{ af } {}

    std::vector< extension > run()
    {
        search( std::vector< state >( _af.size(), state::blank ) );

        std::vector< extension > family;
        for ( const auto& e : _found )
        {
            extension ext{ {}, semantics::preferred };
            for ( argument_index a = 0; a < e.size(); ++a )
                if ( e[ a ] )
                    ext.members.push_back( a );
            family.push_back( std::move( ext ) );
        }
        if ( family.empty() )
            family.push_back( extension{ {}, semantics::preferred } );
        sort_family( family );
        return family;
    }
};

} // namespace

std::vector< extension > complete( const paf& framework )
{
    return labelling_search{ framework, semantics::complete }.run();
}

std::vector< extension > stable( const paf& framework )
{
    return labelling_search{ framework, semantics::stable }.run();
}

std::vector< extension > preferred( const paf& framework )
{
    return preferred_search{ framework }.run();
}

std::vector< extension > extensions( const paf& framework, semantics s )
{
    switch ( s )
    {
    case semantics::complete: return complete( framework );
    case semantics::grounded: return { grounded( framework ) };
    case semantics::preferred: return preferred( framework );
    case semantics::stable: return stable( framework );
    }
    return {};
}

std::vector< plan > optimal_plans( const paf& framework, std::span< const extension > family )
{
    std::set< plan > out;
    for ( const auto& e : family )
        for ( auto a : e.members )
            if ( auto c = framework.at( a ).conclusion() )
                out.insert( *c );
    return { out.begin(), out.end() };
}

std::vector< plan > optimal_plans( const paf& framework, semantics s )
{
    auto family = extensions( framework, s );
    return optimal_plans( framework, family );
}

} // namespace planarg
