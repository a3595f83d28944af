#pragma once

// Text formats: the line-oriented system description language, the formula
// and query syntax, and result rendering.
//
//   # comment
//   states:  s0 s1 s2
//   actions: a1 a2
//   init:    s0
//   trans:   s0 -a1-> s1
//   label:   s1 p q
//   values:  pv < gc = hs < sf
//   promote: s0 -a1-> s1 : pv
//   demote:  s1 -a2-> s2 : sf
//   goal:    p & !q

#include "planarg/argumentation.hpp"
#include "planarg/logic.hpp"
#include "planarg/model.hpp"
#include "planarg/planner.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace planarg
{

struct source_span
{
    std::size_t line = 0;   // 1-based
    std::size_t column = 0; // 1-based byte offset within the line
    std::size_t length = 0;

    friend bool operator==( const source_span&, const source_span& ) = default;
};

struct diagnostic
{
    severity level;
    source_span span;
    std::string message;
    std::string token;    // offending text, if any
    std::string expected; // hint, if any
};

[[nodiscard]] std::string to_string( const diagnostic& d );

template < typename T >
struct parsed
{
    std::optional< T > value;
    std::vector< diagnostic > diagnostics;

    explicit operator bool() const { return value.has_value(); }
};

struct system_document
{
    value_based_system system;
    state_id initial;
    formula goal = formula::prop( "" );

    // Keys: "states", "actions", "init", "values", "goal", "state:<name>",
    // "action:<name>", "value:<name>", "trans:<s -a-> t>".
    std::map< std::string, source_span > source_spans;

    // Spans are bookkeeping and take no part in equality.
    friend bool operator==( const system_document& lhs, const system_document& rhs )
    {
        return lhs.system == rhs.system && lhs.initial == rhs.initial && lhs.goal == rhs.goal;
    }
};

struct parse_options
{
    bool allow_terminal = false;
};

// Never throws on malformed input; failures come back as diagnostics. A
// returned document has passed validate().
[[nodiscard]] parsed< system_document > parse_system( std::string_view text, const parse_options& options = {} );

// Canonical form: fixed declaration order, each list sorted.
[[nodiscard]] std::string serialize_system( const system_document& doc );

[[nodiscard]] parsed< formula > parse_formula( std::string_view text );

using query = std::variant< formula, annotated_query >;

// "f" or "+v : [a1]...[an] goal" / "-v : [a1]...[an] goal".
[[nodiscard]] parsed< query > parse_query( std::string_view text );

enum class outcome
{
    selected,         // at least one optimal plan
    no_plan,          // the goal is unreachable within the bound
    all_plans_blocked // plans exist but none is optimal
};

[[nodiscard]] const char* to_string( outcome o );

struct results
{
    semantics kind = semantics::grounded;
    std::vector< plan > plans;
    paf framework;
    std::vector< extension > family;
    std::vector< plan > optimal;
    std::optional< explanation > why;

    [[nodiscard]] outcome status() const;
};

enum class output_format
{
    human,
    structured
};

[[nodiscard]] std::string emit_results( const results& r, output_format format );

} // namespace planarg
