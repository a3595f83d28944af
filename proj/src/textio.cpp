#include "planarg/textio.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace planarg
{

std::string to_string( const diagnostic& d )
{
    std::string out = std::to_string( d.span.line ) + ":" + std::to_string( d.span.column ) + ": " +
                      ( d.level == severity::error ? "error: " : "warning: " ) + d.message;
    if ( !d.expected.empty() )
        out += " (expected " + d.expected + ")";
    return out;
}

namespace
{

constexpr std::size_t max_nesting = 256;
constexpr std::size_t max_formula_depth = 4096;

enum class tok
{
    ident,
    colon,
    minus,
    plus,
    arrow,
    less,
    equal,
    bang,
    amp,
    pipe,
    lbracket,
    rbracket,
    lparen,
    rparen,
    comma,
    invalid,
    end
};

const char* describe( tok t )
{
    switch ( t )
    {
    case tok::ident: return "identifier";
    case tok::colon: return "':'";
    case tok::minus: return "'-'";
    case tok::plus: return "'+'";
    case tok::arrow: return "'->'";
    case tok::less: return "'<'";
    case tok::equal: return "'='";
    case tok::bang: return "'!'";
    case tok::amp: return "'&'";
    case tok::pipe: return "'|'";
    case tok::lbracket: return "'['";
    case tok::rbracket: return "']'";
    case tok::lparen: return "'('";
    case tok::rparen: return "')'";
    case tok::comma: return "','";
    case tok::invalid: return "invalid character";
    case tok::end: return "end of line";
    }
    return "token";
}

struct token_t
{
    tok kind;
    std::string text;
    source_span span;
};

bool is_reserved( unsigned char c )
{
    static constexpr std::string_view reserved = "#:-><=!&|()[],+";
    return reserved.find( static_cast< char >( c ) ) != std::string_view::npos;
}

bool is_space( unsigned char c )
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

// Length of the UTF-8 sequence starting at text[i], or 0 if malformed.
std::size_t utf8_length( std::string_view text, std::size_t i )
{
    const auto c = static_cast< unsigned char >( text[ i ] );
    std::size_t n = 0;
    if ( c < 0x80 )
        return 1;
    if ( ( c & 0xE0 ) == 0xC0 && c >= 0xC2 )
        n = 2;
    else if ( ( c & 0xF0 ) == 0xE0 )
        n = 3;
    else if ( ( c & 0xF8 ) == 0xF0 && c <= 0xF4 )
        n = 4;
    else
        return 0;
    if ( i + n > text.size() )
        return 0;
    for ( std::size_t k = 1; k < n; ++k )
        if ( ( static_cast< unsigned char >( text[ i + k ] ) & 0xC0 ) != 0x80 )
            return 0;
    return n;
}

// Tokenizes one line (comments already stripped). `column0` is the column of
// text[0] within its source line.
std::vector< token_t > lex( std::string_view text, std::size_t line, std::size_t column0 )
{
    std::vector< token_t > out;
    std::size_t i = 0;
    auto span_at = [ & ]( std::size_t start, std::size_t len ) { return source_span{ line, column0 + start, len }; };

    while ( i < text.size() )
    {
        const auto c = static_cast< unsigned char >( text[ i ] );
        if ( is_space( c ) )
        {
            ++i;
            continue;
        }

        auto single = [ & ]( tok k ) {
            out.push_back( { k, std::string( 1, static_cast< char >( c ) ), span_at( i, 1 ) } );
            ++i;
        };

        switch ( c )
        {
        case ':': single( tok::colon ); continue;
        case '+': single( tok::plus ); continue;
        case '<': single( tok::less ); continue;
        case '=': single( tok::equal ); continue;
        case '!': single( tok::bang ); continue;
        case '&': single( tok::amp ); continue;
        case '|': single( tok::pipe ); continue;
        case '[': single( tok::lbracket ); continue;
        case ']': single( tok::rbracket ); continue;
        case '(': single( tok::lparen ); continue;
        case ')': single( tok::rparen ); continue;
        case ',': single( tok::comma ); continue;
        case '-':
            if ( i + 1 < text.size() && text[ i + 1 ] == '>' )
            {
                out.push_back( { tok::arrow, "->", span_at( i, 2 ) } );
                i += 2;
            }
            else
                single( tok::minus );
            continue;
        default: break;
        }

        if ( c < 0x20 || c == 0x7F || c == '>' || c == '#' )
        {
            single( tok::invalid );
            continue;
        }

        const auto start = i;
        bool valid = true;
        while ( i < text.size() )
        {
            const auto d = static_cast< unsigned char >( text[ i ] );
            if ( is_space( d ) || is_reserved( d ) || d < 0x20 || d == 0x7F )
                break;
            auto n = utf8_length( text, i );
            if ( n == 0 )
            {
                valid = false;
                n = 1;
            }
            i += n;
        }
        out.push_back( { valid ? tok::ident : tok::invalid, std::string( text.substr( start, i - start ) ),
                         span_at( start, i - start ) } );
    }

    const auto end_col = text.size();
    out.push_back( { tok::end, "", span_at( end_col, 0 ) } );
    return out;
}

class token_stream
{
    const std::vector< token_t >& _tokens;
    std::size_t _pos = 0;

public:
    explicit token_stream( const std::vector< token_t >& tokens ) : _tokens{ tokens } {}

    [[nodiscard]] const token_t& peek() const { return _tokens[ _pos ]; }
    const token_t& next()
    {
        const auto& t = _tokens[ _pos ];
        if ( t.kind != tok::end )
            ++_pos;
        return t;
    }
    bool accept( tok k )
    {
        if ( peek().kind != k )
            return false;
        next();
        return true;
    }
    [[nodiscard]] bool at_end() const { return peek().kind == tok::end; }
};

struct syntax_error
{
    diagnostic diag;
};

[[noreturn]] void fail( const token_t& at, std::string message, std::string expected = {} )
{
    throw syntax_error{ diagnostic{ severity::error, at.span, std::move( message ), at.text, std::move( expected ) } };
}

const token_t& expect( token_stream& in, tok k, const std::string& what )
{
    const auto& t = in.peek();
    if ( t.kind != k )
    {
        auto found = t.kind == tok::end ? std::string( "end of line" ) : "'" + t.text + "'";
        fail( t, "unexpected " + found, what.empty() ? describe( k ) : what );
    }
    return in.next();
}

class formula_parser
{
    token_stream& _in;
    std::size_t _depth = 0;

    struct guard
    {
        formula_parser& p;
        const token_t& at;
        guard( formula_parser& parser, const token_t& t ) : p{ parser }, at{ t }
        {
            if ( ++p._depth > max_nesting )
                fail( at, "formula nested too deeply" );
        }
        ~guard() { --p._depth; }
    };

public:
    explicit formula_parser( token_stream& in ) : _in{ in } {}

    formula implication()
    {
        guard g{ *this, _in.peek() };
        auto lhs = disjunction();
        if ( _in.accept( tok::arrow ) )
            return formula::implication( std::move( lhs ), implication() );
        return lhs;
    }

    formula disjunction()
    {
        auto lhs = conjunction();
        while ( _in.peek().kind == tok::pipe )
        {
            const auto& at = _in.next();
            guard g{ *this, at };
            lhs = formula::disjunction( std::move( lhs ), conjunction() );
            if ( lhs.depth() > max_formula_depth )
                fail( at, "formula nested too deeply" );
        }
        return lhs;
    }

    formula conjunction()
    {
        auto lhs = unary();
        while ( _in.peek().kind == tok::amp )
        {
            const auto& at = _in.next();
            guard g{ *this, at };
            lhs = formula::conjunction( std::move( lhs ), unary() );
            if ( lhs.depth() > max_formula_depth )
                fail( at, "formula nested too deeply" );
        }
        return lhs;
    }

    formula unary()
    {
        guard g{ *this, _in.peek() };
        if ( _in.accept( tok::bang ) )
            return formula::negation( unary() );
        if ( _in.accept( tok::lbracket ) )
        {
            const auto& a = expect( _in, tok::ident, "action name" );
            action_id action{ a.text };
            expect( _in, tok::rbracket, "']'" );
            return formula::box( std::move( action ), unary() );
        }
        if ( _in.accept( tok::lparen ) )
        {
            auto inner = implication();
            expect( _in, tok::rparen, "')'" );
            return inner;
        }
        const auto& t = expect( _in, tok::ident, "proposition, '!', '[' or '('" );
        return formula::prop( t.text );
    }
};

formula parse_formula_tokens( token_stream& in )
{
    formula_parser p{ in };
    auto f = p.implication();
    if ( !in.at_end() )
        fail( in.peek(), "unexpected '" + in.peek().text + "'", "end of formula" );
    return f;
}

// Splits text into lines, dropping comments. Returns (line number, column of
// first byte, content).
struct source_line
{
    std::size_t number;
    std::string_view content;
};

std::vector< source_line > split_lines( std::string_view text )
{
    std::vector< source_line > out;
    std::size_t start = 0, number = 1;
    while ( start <= text.size() )
    {
        auto end = text.find( '\n', start );
        if ( end == std::string_view::npos )
            end = text.size();
        auto line = text.substr( start, end - start );
        if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
            line = line.substr( 0, hash );
        out.push_back( { number, line } );
        start = end + 1;
        ++number;
    }
    return out;
}

constexpr std::array keywords = { "states", "actions", "init", "trans", "label", "values", "promote", "demote", "goal" };

struct located_transition
{
    std::array< token_t, 3 > parts; // from, action, to
    source_span span;
};

struct located_value_label
{
    sign status;
    located_transition edge;
    token_t value;
};

class document_parser
{
    std::vector< diagnostic > _diags;
    std::map< std::string, source_span > _spans;

    std::optional< std::vector< token_t > > _states, _actions;
    std::optional< token_t > _init;
    std::optional< std::vector< std::pair< token_t, tok > > > _values; // value, separator before it
    std::optional< std::pair< formula, source_span > > _goal;
    std::vector< located_transition > _transitions;
    std::vector< std::pair< token_t, std::vector< token_t > > > _labels;
    std::vector< located_value_label > _value_labels;

    void error( source_span span, std::string message, std::string token = {}, std::string expected = {} )
    {
        _diags.push_back( { severity::error, span, std::move( message ), std::move( token ), std::move( expected ) } );
    }

    void warning( source_span span, std::string message, std::string token = {} )
    {
        _diags.push_back( { severity::warning, span, std::move( message ), std::move( token ), {} } );
    }

    static std::vector< token_t > identifiers( token_stream& in, const std::string& what )
    {
        std::vector< token_t > out;
        out.push_back( expect( in, tok::ident, what ) );
        while ( !in.at_end() )
            out.push_back( expect( in, tok::ident, what ) );
        return out;
    }

    static located_transition transition_tokens( token_stream& in )
    {
        located_transition t;
        t.parts[ 0 ] = expect( in, tok::ident, "source state" );
        expect( in, tok::minus, "'-'" );
        t.parts[ 1 ] = expect( in, tok::ident, "action name" );
        expect( in, tok::arrow, "'->'" );
        t.parts[ 2 ] = expect( in, tok::ident, "target state" );
        const auto& first = t.parts[ 0 ].span;
        const auto& last = t.parts[ 2 ].span;
        t.span = source_span{ first.line, first.column, last.column + last.length - first.column };
        return t;
    }

    template < typename T >
    bool once( std::optional< T >& slot, const token_t& keyword )
    {
        if ( slot )
        {
            error( keyword.span, "duplicate '" + keyword.text + "' declaration", keyword.text );
            return false;
        }
        return true;
    }

    void declaration( const token_t& keyword, token_stream& in )
    {
        const auto& k = keyword.text;
        if ( k == "states" )
        {
            auto ids = identifiers( in, "state name" );
            if ( once( _states, keyword ) )
            {
                _states = std::move( ids );
                _spans[ "states" ] = keyword.span;
            }
        }
        else if ( k == "actions" )
        {
            auto ids = identifiers( in, "action name" );
            if ( once( _actions, keyword ) )
            {
                _actions = std::move( ids );
                _spans[ "actions" ] = keyword.span;
            }
        }
        else if ( k == "init" )
        {
            auto s = expect( in, tok::ident, "initial state" );
            expect( in, tok::end, "end of line" );
            if ( once( _init, keyword ) )
            {
                _init = std::move( s );
                _spans[ "init" ] = _init->span;
            }
        }
        else if ( k == "trans" )
        {
            auto t = transition_tokens( in );
            expect( in, tok::end, "end of line" );
            _transitions.push_back( std::move( t ) );
        }
        else if ( k == "label" )
        {
            auto s = expect( in, tok::ident, "state name" );
            auto props = identifiers( in, "proposition" );
            _labels.emplace_back( std::move( s ), std::move( props ) );
        }
        else if ( k == "values" )
        {
            std::vector< std::pair< token_t, tok > > chain;
            chain.emplace_back( expect( in, tok::ident, "value name" ), tok::less );
            while ( !in.at_end() )
            {
                auto sep = in.peek().kind;
                if ( sep != tok::less && sep != tok::equal )
                    fail( in.peek(), "unexpected '" + in.peek().text + "'", "'<' or '='" );
                in.next();
                chain.emplace_back( expect( in, tok::ident, "value name" ), sep );
            }
            if ( once( _values, keyword ) )
            {
                _values = std::move( chain );
                _spans[ "values" ] = keyword.span;
            }
        }
        else if ( k == "promote" || k == "demote" )
        {
            auto t = transition_tokens( in );
            expect( in, tok::colon, "':'" );
            auto v = expect( in, tok::ident, "value name" );
            expect( in, tok::end, "end of line" );
            _value_labels.push_back( { k == "promote" ? sign::promote : sign::demote, std::move( t ), std::move( v ) } );
        }
        else if ( k == "goal" )
        {
            const auto start = in.peek().span;
            auto f = parse_formula_tokens( in );
            if ( once( _goal, keyword ) )
            {
                _goal.emplace( std::move( f ), start );
                _spans[ "goal" ] = start;
            }
        }
    }

    void read_line( const source_line& line )
    {
        auto tokens = lex( line.content, line.number, 1 );
        token_stream in{ tokens };
        if ( in.at_end() )
            return;

        for ( const auto& t : tokens )
            if ( t.kind == tok::invalid )
            {
                error( t.span, "invalid character in '" + t.text + "'", t.text );
                return;
            }

        try
        {
            const auto& keyword = in.peek();
            const bool known = keyword.kind == tok::ident &&
                               std::find( keywords.begin(), keywords.end(), keyword.text ) != keywords.end();
            if ( !known )
                fail( keyword, "unknown declaration '" + keyword.text + "'",
                      "one of states, actions, init, trans, label, values, promote, demote, goal" );
            in.next();
            expect( in, tok::colon, "':' after '" + keyword.text + "'" );
            declaration( keyword, in );
        }
        catch ( const syntax_error& e )
        {
            _diags.push_back( e.diag );
        }
    }

    template < typename Id >
    std::set< Id > declare( const std::vector< token_t >& tokens, const std::string& kind )
    {
        std::set< Id > out;
        for ( const auto& t : tokens )
        {
            if ( !out.emplace( t.text ).second )
            {
                error( t.span, "duplicate " + kind + " '" + t.text + "'", t.text );
                continue;
            }
            _spans[ kind + ":" + t.text ] = t.span;
        }
        return out;
    }

    std::optional< transition > resolve( const located_transition& lt, const std::set< state_id >& states,
                                         const std::set< action_id >& actions )
    {
        bool ok = true;
        for ( auto i : { 0, 2 } )
            if ( !states.contains( state_id{ lt.parts[ i ].text } ) )
            {
                error( lt.parts[ i ].span, "undeclared state '" + lt.parts[ i ].text + "'", lt.parts[ i ].text,
                       "a state listed under 'states'" );
                ok = false;
            }
        if ( !actions.contains( action_id{ lt.parts[ 1 ].text } ) )
        {
            error( lt.parts[ 1 ].span, "undeclared action '" + lt.parts[ 1 ].text + "'", lt.parts[ 1 ].text,
                   "an action listed under 'actions'" );
            ok = false;
        }
        if ( !ok )
            return std::nullopt;
        return transition{ state_id{ lt.parts[ 0 ].text }, action_id{ lt.parts[ 1 ].text },
                           state_id{ lt.parts[ 2 ].text } };
    }

    source_span span_of( const violation& v ) const
    {
        for ( const auto* prefix : { "state:", "action:", "value:", "trans:", "step:" } )
            if ( auto it = _spans.find( prefix + v.element ); it != _spans.end() )
                return it->second;
        return source_span{ 1, 1, 0 };
    }

public:
    parsed< system_document > run( std::string_view text, const parse_options& options )
    {
        for ( const auto& line : split_lines( text ) )
            read_line( line );

        const source_span origin{ 1, 1, 0 };
        if ( !_states )
            error( origin, "missing states declaration", {}, "'states:'" );
        if ( !_actions )
            error( origin, "missing actions declaration", {}, "'actions:'" );
        if ( !_init )
            error( origin, "missing init declaration", {}, "'init:'" );
        if ( !_goal )
            error( origin, "missing goal declaration", {}, "'goal:'" );

        auto states = declare< state_id >( _states.value_or( std::vector< token_t >{} ), "state" );
        auto actions = declare< action_id >( _actions.value_or( std::vector< token_t >{} ), "action" );

        std::vector< std::vector< value_id > > tiers;
        std::set< value_id > values;
        if ( _values )
        {
            for ( const auto& [ t, sep ] : *_values )
            {
                if ( !values.emplace( t.text ).second )
                {
                    error( t.span, "duplicate value '" + t.text + "'", t.text );
                    continue;
                }
                _spans[ "value:" + t.text ] = t.span;
                if ( sep == tok::less || tiers.empty() )
                    tiers.emplace_back();
                tiers.back().emplace_back( t.text );
            }
        }

        if ( _init && !states.contains( state_id{ _init->text } ) )
            error( _init->span, "undeclared state '" + _init->text + "'", _init->text, "a state listed under 'states'" );

        std::set< transition > transitions;
        for ( const auto& lt : _transitions )
        {
            auto t = resolve( lt, states, actions );
            if ( !t )
                continue;
            if ( !transitions.insert( *t ).second )
            {
                error( lt.span, "duplicate transition " + to_string( *t ), to_string( *t ) );
                continue;
            }
            _spans[ "trans:" + to_string( *t ) ] = lt.span;
            _spans.try_emplace( "step:(" + t->from.name() + "," + t->action.name() + ")", lt.span );
        }

        std::map< state_id, std::set< proposition > > labels;
        for ( const auto& [ s, props ] : _labels )
        {
            if ( !states.contains( state_id{ s.text } ) )
            {
                error( s.span, "undeclared state '" + s.text + "'", s.text, "a state listed under 'states'" );
                continue;
            }
            for ( const auto& p : props )
                labels[ state_id{ s.text } ].insert( p.text );
        }

        std::set< value_label > delta;
        for ( const auto& vl : _value_labels )
        {
            auto t = resolve( vl.edge, states, actions );
            bool ok = t.has_value();
            if ( t && !transitions.contains( *t ) )
            {
                error( vl.edge.span, "label on undeclared transition " + to_string( *t ), to_string( *t ),
                       "a transition declared with 'trans:'" );
                ok = false;
            }
            if ( !values.contains( value_id{ vl.value.text } ) )
            {
                error( vl.value.span, "undeclared value '" + vl.value.text + "'", vl.value.text,
                       "a value listed under 'values'" );
                ok = false;
            }
            if ( ok && !delta.insert( value_label{ vl.status, value_id{ vl.value.text }, *t } ).second )
                error( vl.edge.span, std::string( "duplicate " ) + to_string( vl.status ) + " label", vl.value.text );
        }

        if ( _goal )
        {
            if ( !_goal->first.is_propositional() )
                error( _goal->second, "goal must be propositional (no [action] boxes)", {}, "a propositional formula" );
            std::set< proposition > known;
            for ( const auto& [ s, props ] : labels )
                known.insert( props.begin(), props.end() );
            for ( const auto& p : propositions( _goal->first ) )
                if ( !known.contains( p ) )
                    warning( _goal->second, "proposition '" + p + "' holds in no state", p );
        }

        parsed< system_document > out;
        if ( has_error() )
        {
            out.diagnostics = std::move( _diags );
            return out;
        }

        value_based_system system{ transition_system{ std::move( states ), std::move( actions ),
                                                      std::move( transitions ), std::move( labels ) },
                                   value_system{ tiers }, std::move( delta ) };

        for ( const auto& v : validate( system, validation_options{ options.allow_terminal } ) )
            _diags.push_back( { v.level, span_of( v ), v.message, v.element, {} } );

        if ( !has_error() )
            out.value = system_document{ std::move( system ), state_id{ _init->text }, _goal->first, std::move( _spans ) };
        out.diagnostics = std::move( _diags );
        return out;
    }

    [[nodiscard]] bool has_error() const
    {
        return std::any_of( _diags.begin(), _diags.end(), []( const diagnostic& d ) { return d.level == severity::error; } );
    }
};

// Formulas and queries are single-line syntax; the lexer's columns assume it.
std::optional< diagnostic > line_break( std::string_view text )
{
    auto at = text.find_first_of( "\r\n" );
    if ( at == std::string_view::npos )
        return std::nullopt;
    return diagnostic{ severity::error, source_span{ 1, at + 1, 0 }, "line break inside a formula", {}, {} };
}

} // namespace

parsed< system_document > parse_system( std::string_view text, const parse_options& options )
{
    return document_parser{}.run( text, options );
}

parsed< formula > parse_formula( std::string_view text )
{
    parsed< formula > out;
    if ( auto d = line_break( text ) )
    {
        out.diagnostics.push_back( *d );
        return out;
    }
    auto tokens = lex( text, 1, 1 );
    for ( const auto& t : tokens )
        if ( t.kind == tok::invalid )
        {
            out.diagnostics.push_back(
                { severity::error, t.span, "invalid character in '" + t.text + "'", t.text, {} } );
            return out;
        }
    try
    {
        token_stream in{ tokens };
        out.value = parse_formula_tokens( in );
    }
    catch ( const syntax_error& e )
    {
        out.diagnostics.push_back( e.diag );
    }
    return out;
}

parsed< query > parse_query( std::string_view text )
{
    parsed< query > out;
    if ( auto d = line_break( text ) )
    {
        out.diagnostics.push_back( *d );
        return out;
    }
    auto tokens = lex( text, 1, 1 );
    for ( const auto& t : tokens )
        if ( t.kind == tok::invalid )
        {
            out.diagnostics.push_back(
                { severity::error, t.span, "invalid character in '" + t.text + "'", t.text, {} } );
            return out;
        }

    try
    {
        token_stream in{ tokens };
        const auto first = in.peek().kind;
        if ( first != tok::plus && first != tok::minus )
        {
            out.value = parse_formula_tokens( in );
            return out;
        }

        in.next();
        const auto status = first == tok::plus ? sign::promote : sign::demote;
        value_id value{ expect( in, tok::ident, "value name" ).text };
        expect( in, tok::colon, "':'" );

        std::vector< action_id > seq;
        while ( in.accept( tok::lbracket ) )
        {
            seq.emplace_back( expect( in, tok::ident, "action name" ).text );
            expect( in, tok::rbracket, "']'" );
        }
        if ( seq.empty() )
            fail( in.peek(), "annotated query needs at least one [action]", "'['" );

        const auto goal_start = in.peek();
        auto goal = parse_formula_tokens( in );
        if ( !goal.is_propositional() )
            fail( goal_start, "annotated query goal must be propositional", "a formula without [action] boxes" );
        out.value = annotated_query{ status, std::move( value ), std::move( seq ), std::move( goal ) };
    }
    catch ( const syntax_error& e )
    {
        out.diagnostics.push_back( e.diag );
    }
    return out;
}

std::string serialize_system( const system_document& doc )
{
    const auto& ts = doc.system.ts();
    std::string out;

    out += "states:";
    for ( const auto& s : ts.states() )
        out += " " + s.name();
    out += "\nactions:";
    for ( const auto& a : ts.actions() )
        out += " " + a.name();
    out += "\n";

    if ( !doc.system.vs().empty() )
    {
        out += "values: ";
        bool first_tier = true;
        for ( const auto& tier : doc.system.vs().tiers() )
        {
            if ( !first_tier )
                out += " < ";
            first_tier = false;
            for ( std::size_t i = 0; i < tier.size(); ++i )
                out += ( i ? " = " : "" ) + tier[ i ].name();
        }
        out += "\n";
    }

    out += "init: " + doc.initial.name() + "\n";
    for ( const auto& t : ts.transitions() )
        out += "trans: " + to_string( t ) + "\n";
    for ( const auto& [ s, props ] : ts.prop_labels() )
    {
        if ( props.empty() )
            continue;
        out += "label: " + s.name();
        for ( const auto& p : props )
            out += " " + p;
        out += "\n";
    }
    for ( auto status : { sign::promote, sign::demote } )
        for ( const auto& label : doc.system.delta() )
            if ( label.status == status )
                out += std::string( to_string( status ) ) + ": " + to_string( label.edge ) + " : " +
                       label.value.name() + "\n";
    out += "goal: " + doc.goal.to_string() + "\n";
    return out;
}

} // namespace planarg
