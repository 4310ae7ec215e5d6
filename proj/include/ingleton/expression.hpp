#pragma once

#include <string>
#include <string_view>

#include "ingleton/distribution.hpp"

namespace ingleton::entropy {

/// A parsed information expression, evaluable against any distribution of
/// sufficient arity.
///
///   EXPR := 'H(' SET ('|' SET)? ')'
///         | 'I(' SET ':' SET ('|' SET)? ')'
///         | 'Ing(' V ',' V ',' V ',' V ('|' SET)? ')'
///         | 'L(' V ',' V ('|' SET)? ')'
///   SET  := INDEX (',' INDEX)*
///   V    := INDEX | '{' SET '}'
///
/// H and I use set semantics: H(I|J) = H(I\J | J), I(I:J|K) = H(I|K) - H(I|JK),
/// so H(0|0) = 0 and I(0:0) = H(0). Ing and L require disjoint roles.
class Query {
public:
    enum class Kind { Entropy, Information, Ingleton, Ell };

    Kind kind() const noexcept { return kind_; }
    /// Role sets in textual order (1, 2, 4 or 2 entries).
    const std::vector<VarSet>& roles() const noexcept { return roles_; }
    VarSet given() const noexcept { return given_; }

    /// Errors: UnknownVariableIndex when an index is >= the arity.
    double evaluate(const JointDistribution& dist) const;

    std::string to_string() const;

private:
    friend Query parse_expression(std::string_view text);

    Kind kind_ = Kind::Entropy;
    std::vector<VarSet> roles_;
    VarSet given_;
};

/// Errors: SyntaxError carrying the offending position.
Query parse_expression(std::string_view text);

}  // namespace ingleton::entropy
