#include "linroots/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linroots/kernel.hpp"
#include "linroots/linset.hpp"
#include "linroots/roots.hpp"
#include "linroots/selftest.hpp"
#include "linroots/textio.hpp"

namespace linroots::cli {

namespace {

using nlohmann::json;

struct SpecError : FieldError {
    using FieldError::FieldError;
};

struct Options {
    std::string verb;
    std::string field, q, b, poly, alpha;
    unsigned n = 0, t = 0, s0 = 0;
    std::string method = "restricted";
    std::string format = "text";
    uint64_t limit = kDefaultExhaustiveLimit;
};

const char* quad_name(QuadRoots q) {
    switch (q) {
        case QuadRoots::TwoInBase: return "two-in-base";
        case QuadRoots::OneInBase: return "one-in-base";
        case QuadRoots::TwoInExt: return "two-in-ext";
    }
    return "?";
}

void emit(const json& report, const Options& opt, std::ostream& out) {
    if (opt.format == "structured") {
        out << report.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
}

TowerCtx make_tower(const Options& opt) {
    if (opt.q.empty()) throw SpecError("missing flag: '--q'");
    if (opt.n == 0) throw SpecError("missing flag: '--n'");
    if (opt.t == 0) throw SpecError("missing flag: '--t'");
    textio::FieldSpec qs = textio::parse_field_spec(opt.q);
    std::optional<std::vector<uint32_t>> modulus;
    if (!opt.field.empty()) {
        textio::FieldSpec fs = textio::parse_field_spec(opt.field);
        if (fs.p != qs.p || fs.m != qs.m * opt.n * opt.t)
            throw SpecError("field spec inconsistent with q, n, t: '" +
                            opt.field + "'");
        modulus = fs.modulus;
    }
    return TowerCtx(qs.p, qs.m, opt.n, opt.t, std::move(modulus));
}

SigmaForm make_form(const Options& opt, const TowerCtx& tw) {
    if (opt.s0 == 0) throw SpecError("missing flag: '--s0'");
    if (opt.b.empty()) throw SpecError("missing flag: '--b'");
    return SigmaForm(tw, opt.s0, textio::parse_element_list(tw.field, opt.b));
}

json report_of(const KernelReport& r, const FieldCtx& fld) {
    json j;
    j["field"] = textio::format_field_spec(fld);
    j["dim"] = r.dim;
    j["method"] = r.method;
    j["witnesses"] = r.witnesses;
    return j;
}

int verb_kernel(const Options& opt, std::ostream& out) {
    // general-polynomial path: --poly over --field with q giving the units
    if (!opt.poly.empty()) {
        if (opt.field.empty()) throw SpecError("missing flag: '--field'");
        if (opt.q.empty()) throw SpecError("missing flag: '--q'");
        textio::FieldSpec fs = textio::parse_field_spec(opt.field);
        textio::FieldSpec qs = textio::parse_field_spec(opt.q);
        if (qs.p != fs.p || fs.m % qs.m != 0)
            throw SpecError("q does not divide the field: '" + opt.q + "'");
        FieldCtx fld(fs.p, fs.m, fs.modulus);
        LinPoly f = textio::parse_poly(fld, qs.m, opt.poly);
        KernelReport r;
        if (opt.method == "brute")
            r = kernel_dim_bruteforce(f, opt.limit);
        else if (opt.method == "dickson" || opt.method == "restricted")
            r = kernel_dim_dickson(f);
        else if (opt.method == "minors")
            r = kernel_dim_minors(f);
        else if (opt.method == "companion")
            r = kernel_dim_companion(f, opt.s0 ? opt.s0 : 1);
        else
            throw SpecError("method not valid for --poly input: '" +
                            opt.method + "'");
        emit(report_of(r, fld), opt, out);
        return 0;
    }

    TowerCtx tw = make_tower(opt);
    SigmaForm F = make_form(opt, tw);
    auto run_one = [&](const std::string& m) -> KernelReport {
        if (m == "restricted") return kernel_dim_restricted(F);
        if (m == "semilinear") return semilinear_kernel_dim(F);
        if (m == "brute") return kernel_dim_bruteforce(embed(F), opt.limit);
        if (m == "dickson") return kernel_dim_dickson(embed(F));
        if (m == "minors") return kernel_dim_minors(embed(F));
        if (m == "companion") return kernel_dim_companion(embed(F), F.s0);
        throw SpecError("unknown method: '" + m + "'");
    };
    if (opt.method == "all") {
        json j;
        j["field"] = textio::format_field_spec(tw.field);
        j["method"] = "all";
        json w;
        std::optional<unsigned> dim;
        bool agree = true;
        std::vector<std::string> methods = {"restricted", "semilinear",
                                            "dickson", "minors"};
        if (tw.field.size() <= opt.limit) methods.push_back("brute");
        if (std::gcd(F.s0, tw.nt()) == 1) methods.push_back("companion");
        for (const auto& m : methods) {
            KernelReport r = run_one(m);
            w[m] = r.dim;
            if (!dim) dim = r.dim;
            if (r.dim != *dim) agree = false;
        }
        j["dim"] = *dim;
        j["witnesses"] = w;
        j["agree"] = agree;
        emit(j, opt, out);
        return agree ? 0 : 1;
    }
    emit(report_of(run_one(opt.method), tw.field), opt, out);
    return 0;
}

int verb_roots(const Options& opt, std::ostream& out) {
    TowerCtx tw = make_tower(opt);
    SigmaForm F = make_form(opt, tw);
    KernelBasis basis = roots_via_L(F);
    json j;
    j["field"] = textio::format_field_spec(tw.field);
    j["dim"] = basis.dim;
    json elems = json::array();
    for (const auto& x : basis.elements)
        elems.push_back(textio::format_element(tw.field, x));
    j["basis"] = elems;
    if (opt.format == "structured") {
        out << j.dump() << "\n";
    } else {
        out << "field: " << j["field"].get<std::string>() << "\n"
            << "dim: " << basis.dim << "\n";
        for (const auto& e : elems) out << e.get<std::string>() << "\n";
    }
    return 0;
}

int verb_bool(const Options& opt, std::ostream& out, bool value,
              const std::string& key, const FieldCtx& fld) {
    json j;
    j["field"] = textio::format_field_spec(fld);
    j[key] = value;
    emit(j, opt, out);
    return 0;
}

int verb_trinomial(const Options& opt, std::ostream& out) {
    TowerCtx tw = make_tower(opt);
    SigmaForm F = make_form(opt, tw);
    TrinomialBound b = trinomial_bound(F);
    json j;
    j["field"] = textio::format_field_spec(tw.field);
    j["bound"] = b.bound;
    j["improved"] = b.improved;
    j["ell"] = b.ell;
    j["conditions"] = {{"degree", b.hyp_t},
                       {"c1", b.cond1},
                       {"c2", b.cond2},
                       {"c3", b.cond3}};
    emit(j, opt, out);
    return 0;
}

int verb_t2(const Options& opt, std::ostream& out) {
    TowerCtx tw = make_tower(opt);
    SigmaForm F = make_form(opt, tw);
    T2Result r = t2_classify(F);
    json j;
    j["field"] = textio::format_field_spec(tw.field);
    j["dim"] = r.dim;
    j["branch"] = r.branch;
    if (r.quad) j["quad"] = quad_name(*r.quad);
    emit(j, opt, out);
    return 0;
}

int verb_spectrum(const Options& opt, std::ostream& out) {
    TowerCtx tw = make_tower(opt);
    if (opt.s0 == 0) throw SpecError("missing flag: '--s0'");
    if (opt.b.empty()) throw SpecError("missing flag: '--b'");
    LinearSetSpec L(tw, opt.s0, textio::parse_element_list(tw.field, opt.b));
    WeightSpectrum sp = weight_spectrum(L, opt.limit);
    json j;
    j["field"] = textio::format_field_spec(tw.field);
    j["size"] = sp.size;
    json counts;
    for (auto [w, x] : sp.counts) counts[std::to_string(w)] = x;
    j["counts"] = counts;
    j["infinity_weight"] = sp.infinity_weight;
    j["scattered"] = is_scattered(sp);
    auto club = is_club(sp);
    j["club"] = club ? json(*club) : json(nullptr);
    emit(j, opt, out);
    return 0;
}

int verb_scattered_check(const Options& opt, std::ostream& out) {
    TowerCtx tw = make_tower(opt);
    if (opt.alpha.empty()) throw SpecError("missing flag: '--alpha'");
    FFElem alpha = textio::parse_element(tw.field, opt.alpha);
    F3Criterion crit = scattered_f3_criterion(tw, alpha);
    F3Cardinality card = lf3_cardinality(tw, alpha);
    json j;
    j["field"] = textio::format_field_spec(tw.field);
    j["scattered"] = crit.scattered;
    j["quad"] = quad_name(crit.quad);
    j["size"] = card.size;
    j["x2"] = card.x2;
    emit(j, opt, out);
    return 0;
}

int verb_search_alpha(const Options& opt, std::ostream& out) {
    TowerCtx tw = make_tower(opt);
    std::vector<FFElem> alphas = search_alpha(tw);
    json j;
    j["field"] = textio::format_field_spec(tw.field);
    json list = json::array();
    for (const auto& a : alphas)
        list.push_back(textio::format_element_gpow(tw.field, a));
    j["alphas"] = list;
    j["count"] = alphas.size();
    emit(j, opt, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Options opt;
    CLI::App app{"kernel dimensions, explicit roots and linear-set invariants "
                 "of sigma-form linearized polynomials"};
    app.add_option("verb", opt.verb,
                   "kernel|roots|permutation|maxkernel|trinomial-bound|"
                   "t2-classify|weight-spectrum|scattered-check|search-alpha|"
                   "selftest")
        ->required();
    app.add_option("--field", opt.field, "ambient field p^m[:modulus=c0,...,cm]");
    app.add_option("--q", opt.q, "base field p^e");
    app.add_option("--n", opt.n, "inner extension degree");
    app.add_option("--t", opt.t, "outer extension degree");
    app.add_option("--s0", opt.s0, "sigma exponent: sigma = q^s0");
    app.add_option("--b", opt.b, "form coefficients b_0,...,b_{t-1}");
    app.add_option("--poly", opt.poly, "general polynomial exp:coeff;...");
    app.add_option("--alpha", opt.alpha, "element for scattered-check");
    app.add_option("--method", opt.method,
                   "brute|dickson|minors|companion|restricted|semilinear|all");
    app.add_option("--format", opt.format, "text|structured");
    app.add_option("--limit", opt.limit, "exhaustive-enumeration bound");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (opt.format != "text" && opt.format != "structured") {
        err << "error: unknown format: '" << opt.format << "'\n";
        return 2;
    }

    try {
        if (opt.verb == "selftest") return selftest::run_and_print(out) ? 1 : 0;
        if (opt.verb == "kernel") return verb_kernel(opt, out);
        if (opt.verb == "roots") return verb_roots(opt, out);
        if (opt.verb == "permutation") {
            TowerCtx tw = make_tower(opt);
            return verb_bool(opt, out, permutation_check(make_form(opt, tw)),
                             "permutation", tw.field);
        }
        if (opt.verb == "maxkernel") {
            TowerCtx tw = make_tower(opt);
            return verb_bool(opt, out, max_kernel_check(make_form(opt, tw)),
                             "maxkernel", tw.field);
        }
        if (opt.verb == "trinomial-bound") return verb_trinomial(opt, out);
        if (opt.verb == "t2-classify") return verb_t2(opt, out);
        if (opt.verb == "weight-spectrum") return verb_spectrum(opt, out);
        if (opt.verb == "scattered-check") return verb_scattered_check(opt, out);
        if (opt.verb == "search-alpha") return verb_search_alpha(opt, out);
        err << "error: unknown verb: '" << opt.verb << "'\n";
        return 2;
    } catch (const FieldError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace linroots::cli
