#pragma once

#include "linroots/linpoly.hpp"

namespace linroots::textio {

/// Parsed "p^m" with optional ":modulus=c0,...,cm" (monic, length m+1).
struct FieldSpec {
    uint64_t p = 2;
    unsigned m = 1;
    std::optional<std::vector<uint32_t>> modulus;
};

/// All parse errors are FieldError with a message naming the offending token.
FieldSpec parse_field_spec(const std::string& text);
/// Fully-resolved spec including the modulus actually in use.
std::string format_field_spec(const FieldCtx& ctx);

/// Element text: "c0,c1,...,c{m-1}" coordinates, "g^k" generator power, or a
/// (possibly negative) prime-subfield integer; "0" is the zero element.
FFElem parse_element(const FieldCtx& ctx, const std::string& text);
std::string format_element(const FieldCtx& ctx, const FFElem& x);
/// "0" or "g^k"; requires a field small enough for discrete logs.
std::string format_element_gpow(const FieldCtx& ctx, const FFElem& x);

/// Comma-separated list of single-token elements (integers or g^k only;
/// coordinate lists would be ambiguous here).
std::vector<FFElem> parse_element_list(const FieldCtx& ctx,
                                       const std::string& text);

/// Polynomial text: semicolon-separated "exponent:element" monomials with the
/// exponent in q-power units, e.g. "0:-1;1:g^5;4:1".
LinPoly parse_poly(const FieldCtx& ctx, unsigned e, const std::string& text);
std::string format_poly(const LinPoly& f);

/// SigmaForm text: "s0=<int>; b=<elem>,<elem>,...".
SigmaForm parse_sigma_form(const TowerCtx& tower, const std::string& text);
std::string format_sigma_form(const SigmaForm& F);

}  // namespace linroots::textio
