#include "linroots/textio.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace linroots::textio {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& token) {
    throw FieldError(what + ": '" + token + "'");
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) out.push_back(trim(part));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

uint64_t parse_u64(const std::string& tok, const std::string& what) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) bad(what, tok);
    return v;
}

int64_t parse_i64(const std::string& tok, const std::string& what) {
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) bad(what, tok);
    return v;
}

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit((unsigned char)t[i])) return false;
    return true;
}

// single-token element: integer constant or generator power
FFElem parse_element_token(const FieldCtx& ctx, const std::string& tok) {
    if (is_integer_token(tok)) return ctx.from_int(parse_i64(tok, "element"));
    if (tok.rfind("g^", 0) == 0)
        return ctx.pow(ctx.generator(), parse_u64(tok.substr(2), "generator exponent"));
    if (tok == "g") return ctx.generator();
    bad("unrecognized element", tok);
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
    std::string body = trim(text), modpart;
    size_t colon = body.find(':');
    if (colon != std::string::npos) {
        modpart = trim(body.substr(colon + 1));
        body = trim(body.substr(0, colon));
    }
    size_t caret = body.find('^');
    FieldSpec spec;
    if (caret == std::string::npos) {
        spec.p = parse_u64(body, "field spec");
        spec.m = 1;
    } else {
        spec.p = parse_u64(trim(body.substr(0, caret)), "field characteristic");
        spec.m = (unsigned)parse_u64(trim(body.substr(caret + 1)), "field degree");
    }
    if (!modpart.empty()) {
        if (modpart.rfind("modulus=", 0) != 0) bad("field spec option", modpart);
        std::vector<uint32_t> mod;
        for (const auto& c : split(modpart.substr(8), ','))
            mod.push_back((uint32_t)parse_u64(c, "modulus coefficient"));
        if (mod.size() != spec.m + 1) bad("modulus length", modpart);
        spec.modulus = std::move(mod);
    }
    return spec;
}

std::string format_field_spec(const FieldCtx& ctx) {
    std::ostringstream os;
    os << ctx.p() << '^' << ctx.degree() << ":modulus=";
    const auto& mod = ctx.modulus();
    for (size_t i = 0; i < mod.size(); ++i) {
        if (i) os << ',';
        os << mod[i];
    }
    return os.str();
}

FFElem parse_element(const FieldCtx& ctx, const std::string& text) {
    std::string body = trim(text);
    if (body.find(',') == std::string::npos) return parse_element_token(ctx, body);
    auto parts = split(body, ',');
    if (parts.size() != ctx.degree()) bad("coordinate count", body);
    FFElem x = ctx.zero();
    for (size_t i = 0; i < parts.size(); ++i) {
        int64_t v = parse_i64(parts[i], "coordinate");
        int64_t p = (int64_t)ctx.p();
        x.c[i] = (uint32_t)(((v % p) + p) % p);
    }
    return x;
}

std::string format_element(const FieldCtx& ctx, const FFElem& x) {
    std::ostringstream os;
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (i) os << ',';
        os << x.c[i];
    }
    return os.str();
}

std::string format_element_gpow(const FieldCtx& ctx, const FFElem& x) {
    if (ctx.is_zero(x)) return "0";
    auto k = ctx.dlog(x);
    if (!k) throw FieldError("field too large for generator-power output");
    if (*k == 0) return "1";
    return "g^" + std::to_string(*k);
}

std::vector<FFElem> parse_element_list(const FieldCtx& ctx,
                                       const std::string& text) {
    std::vector<FFElem> out;
    for (const auto& tok : split(trim(text), ','))
        out.push_back(parse_element_token(ctx, tok));
    return out;
}

LinPoly parse_poly(const FieldCtx& ctx, unsigned e, const std::string& text) {
    std::vector<std::pair<unsigned, FFElem>> terms;
    for (const auto& term : split(trim(text), ';')) {
        size_t colon = term.find(':');
        if (colon == std::string::npos) bad("monomial term", term);
        unsigned exp = (unsigned)parse_u64(trim(term.substr(0, colon)),
                                           "monomial exponent");
        terms.emplace_back(exp, parse_element(ctx, term.substr(colon + 1)));
    }
    return make_poly(ctx, e, terms);
}

std::string format_poly(const LinPoly& f) {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < f.slots(); ++i) {
        if (f.ctx->is_zero(f.coeff[i])) continue;
        if (!first) os << ';';
        first = false;
        os << i << ':' << format_element(*f.ctx, f.coeff[i]);
    }
    if (first) os << "0:0";
    return os.str();
}

SigmaForm parse_sigma_form(const TowerCtx& tower, const std::string& text) {
    std::optional<unsigned> s0;
    std::optional<std::vector<FFElem>> b;
    for (const auto& part : split(trim(text), ';')) {
        size_t eq = part.find('=');
        if (eq == std::string::npos) bad("sigma-form field", part);
        std::string key = trim(part.substr(0, eq));
        std::string val = trim(part.substr(eq + 1));
        if (key == "s0")
            s0 = (unsigned)parse_u64(val, "s0");
        else if (key == "b")
            b = parse_element_list(tower.field, val);
        else
            bad("sigma-form key", key);
    }
    if (!s0 || !b) bad("sigma-form text", text);
    return SigmaForm(tower, *s0, std::move(*b));
}

std::string format_sigma_form(const SigmaForm& F) {
    std::ostringstream os;
    os << "s0=" << F.s0 << "; b=";
    const FieldCtx& fld = F.tower->field;
    for (size_t i = 0; i < F.b.size(); ++i) {
        if (i) os << ',';
        // single tokens keep the list parseable; fall back to coordinates
        // only when the field is too large for discrete logs
        try {
            os << format_element_gpow(fld, F.b[i]);
        } catch (const FieldError&) {
            os << format_element(fld, F.b[i]);
        }
    }
    return os.str();
}

}  // namespace linroots::textio
