#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "higgs/boson.hpp"
#include "higgs/params.hpp"

namespace higgs {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line, int column);
    int line;
    int column;
};

/// Expression tree for the textual operator language:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-'* base ('^' uint)?
///   base   := scalar | 'i' | atom | param | '(' expr ')'
/// Atoms are a(j) and ad(j) (the Unicode dagger a†(j) is accepted);
/// params are gamma, omega0, c, beta, bound at lowering time.
struct ExprNode {
    enum class Kind { sum, difference, product, power, negate, scalar, atom,
                      param };
    Kind kind = Kind::scalar;
    std::vector<std::shared_ptr<const ExprNode>> children;
    unsigned exponent = 0;     ///< power
    Complex value{0.0, 0.0};   ///< scalar
    bool creation = false;     ///< atom
    int mode = 0;              ///< atom
    std::string name;          ///< param
};

using ExprPtr = std::shared_ptr<const ExprNode>;

ExprPtr parse(const std::string& text, int n_modes = 3);

/// Numeric coefficients substituted, products normal-ordered.
BosonPolynomial lower(const ExprPtr& ast, const DeformationParams& params,
                      int n_modes = 3);

/// parse + lower in one step.
BosonPolynomial parse_polynomial(const std::string& text,
                                 const DeformationParams& params,
                                 int n_modes = 3);

}  // namespace higgs
