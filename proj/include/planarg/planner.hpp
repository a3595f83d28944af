#pragma once

#include "planarg/logic.hpp"
#include "planarg/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace planarg
{

// A finite action sequence; whether it achieves a goal depends on the
// system, start state and goal it is paired with.
struct plan
{
    std::vector< action_id > actions;

    friend auto operator<=>( const plan&, const plan& ) = default;
    friend bool operator==( const plan&, const plan& ) = default;
};

// "(a1,a2,a3)"
[[nodiscard]] std::string to_string( const plan& p );

enum class revisit
{
    forbid,
    allow
};

// Default length bound: the number of states.
[[nodiscard]] std::size_t default_max_len( const value_based_system& system );

// All action sequences of length 1..max_len executable from s0 whose end state
// satisfies goal, sorted lexicographically by action names. With
// revisit::forbid no trajectory visits a state twice (s0 included).
[[nodiscard]] std::vector< plan > enumerate_plans( const value_based_system& system, const state_id& s0,
                                                   const formula& goal, std::size_t max_len,
                                                   revisit policy = revisit::forbid );

[[nodiscard]] bool is_plan( const value_based_system& system, const state_id& s0, std::span< const action_id > seq,
                            const formula& goal );

// Signs collected per value along a plan's trajectory; values the plan does
// not touch are absent.
class value_profile
{
    std::map< value_id, sign_set > _signs;

public:
    value_profile() = default;
    explicit value_profile( std::map< value_id, sign_set > signs );

    [[nodiscard]] sign_set signs( const value_id& v ) const;
    [[nodiscard]] const std::map< value_id, sign_set >& entries() const { return _signs; }

    friend bool operator==( const value_profile&, const value_profile& ) = default;
};

// Throws precondition_error if p is not a plan for goal from s0.
[[nodiscard]] value_profile compute_value_profile( const value_based_system& system, const state_id& s0,
                                                   const plan& p, const formula& goal );

} // namespace planarg
