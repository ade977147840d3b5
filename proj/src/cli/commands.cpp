#include "rfps/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfps/errors.hpp"
#include "rfps/render.hpp"
#include "rfps/riordan.hpp"
#include "rfps/series_spec.hpp"

namespace rfps::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t max_order = 512;

struct CommonOptions {
    std::size_t order = 32;
    std::string format = "table";
    bool pad = false;
};

void add_common(CLI::App& cmd, CommonOptions& opts)
{
    cmd.add_option("--order", opts.order, "truncation order N")
        ->check(CLI::Range(std::size_t{1}, max_order));
    cmd.add_option("--format", opts.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd.add_flag("--pad", opts.pad, "zero-pad coeffs: lists shorter than N+1");
}

std::optional<std::size_t> nonconstant_order(const Series& s)
{
    Series tail = s;
    tail[0] = 0;
    return order_of(tail);
}

// Series at order N plus the r-1 extra coefficients that the involution
// construction consumes, when the spec can supply them.
Series materialize_for_involution(const SeriesSpec& spec, const CommonOptions& opts)
{
    Series g = spec.materialize(opts.order, opts.pad);
    const auto r = nonconstant_order(g);
    if (r && *r > 1 && spec.extendable()) {
        g = spec.materialize(opts.order + *r - 1);
    }
    return g;
}

RiordanElement involution_at(const SeriesSpec& spec, const CommonOptions& opts, std::ostream& err)
{
    const Series g = materialize_for_involution(spec, opts);
    RiordanElement inv = involution_from_g(UnitSeries(g));
    if (inv.order() > opts.order) {
        return inv.retruncate(opts.order);
    }
    if (inv.order() < opts.order) {
        err << "note: F is determined by g only through x^" << inv.order()
            << "; supply more coefficients of g for a wider window\n";
    }
    return inv;
}

json verdict_json(const OrderCheck& check)
{
    json j{{"holds", check.holds}, {"path", check.shortcut ? "shortcut" : "full"}};
    if (check.holds) {
        j["product_through"] = check.product_through;
        j["iterate_through"] = check.iterate_through;
    }
    if (check.witness) {
        j["witness"] = {{"condition", to_string(check.witness->condition)},
                        {"index", check.witness->index},
                        {"actual", to_string(check.witness->actual)},
                        {"expected", to_string(check.witness->expected)}};
    }
    if (!check.note.empty()) {
        j["note"] = check.note;
    }
    return j;
}

void render_verdict(std::ostream& out, const OrderCheck& check, unsigned n)
{
    out << "check: A^" << n << " = (1, x), "
        << (check.shortcut ? "shortcut (product condition only)" : "full (both conditions)") << '\n';
    if (check.holds) {
        out << "product condition holds through x^" << check.product_through << '\n'
            << "iterate condition " << (check.shortcut ? "implied" : "holds") << " through x^"
            << check.iterate_through << '\n'
            << "verdict: holds\n";
        return;
    }
    const OrderWitness& w = *check.witness;
    out << "verdict: fails\n"
        << "witness: " << to_string(w.condition) << " condition, coefficient of x^" << w.index
        << " is " << to_string(w.actual) << ", expected " << to_string(w.expected) << '\n';
}

void render_pair(std::ostream& out, Format format, const RiordanElement& a, const OrderCheck& check,
                 unsigned n, json extra = json::object())
{
    switch (format) {
    case Format::table:
        render_series_table(out, {{"g", &a.g().series()}, {"F", &a.f().series()}});
        render_verdict(out, check, n);
        break;
    case Format::csv:
        render_series_csv(out, {{"g", &a.g().series()}, {"F", &a.f().series()}});
        break;
    case Format::json: {
        json j{{"N", a.order()},
               {"g", to_strings(a.g().series())},
               {"F", to_strings(a.f().series())},
               {"verdict", verdict_json(check)}};
        j.update(extra);
        out << j.dump() << '\n';
        break;
    }
    }
}

int cmd_matrix(const std::string& g_text, const std::string& f_text, const CommonOptions& opts,
               std::ostream& out)
{
    const RiordanElement a(UnitSeries(parse_series(g_text, opts.order, opts.pad)),
                           DeltaSeries(parse_series(f_text, opts.order, opts.pad)));
    const TriangularBlock block = to_matrix(a);
    switch (parse_format(opts.format)) {
    case Format::table:
        render_matrix_table(out, block);
        break;
    case Format::csv:
        render_matrix_csv(out, block);
        break;
    case Format::json:
        out << json{{"N", a.order()},
                    {"g", to_strings(a.g().series())},
                    {"F", to_strings(a.f().series())},
                    {"matrix", to_strings(block)}}
                   .dump()
            << '\n';
        break;
    }
    return exit_ok;
}

int cmd_involution(const std::string& g_text, const CommonOptions& opts, std::ostream& out,
                   std::ostream& err)
{
    const RiordanElement inv = involution_at(SeriesSpec::parse(g_text), opts, err);
    const OrderCheck check = check_order(inv, 2);
    render_pair(out, parse_format(opts.format), inv, check, 2);
    return check.holds ? exit_ok : exit_fails;
}

int cmd_verify(const std::string& g_text, const std::string& f_text, unsigned n, bool full,
               const CommonOptions& opts, std::ostream& out, std::ostream& err)
{
    const RiordanElement a(UnitSeries(parse_series(g_text, opts.order, opts.pad)),
                           DeltaSeries(parse_series(f_text, opts.order, opts.pad)));
    const OrderCheck check = full ? check_order(a, n) : check_order_shortcut(a, n);
    if (!check.note.empty()) {
        err << "notice: " << check.note << '\n';
    }
    const Format format = parse_format(opts.format);
    if (format == Format::json) {
        out << json{{"N", a.order()}, {"n", n}, {"verdict", verdict_json(check)}}.dump() << '\n';
    } else {
        render_verdict(out, check, n);
    }
    return check.holds ? exit_ok : exit_fails;
}

int cmd_aerate(const std::string& g_text, const std::string& f_text, unsigned q,
               const CommonOptions& opts, std::ostream& out, std::ostream& err)
{
    if (q == 0 || q % 2 == 0) {
        throw domain_violation("q = " + std::to_string(q) + ": aeration needs a positive odd integer q");
    }
    const SeriesSpec g_spec = SeriesSpec::parse(g_text);
    const SeriesSpec f_spec = SeriesSpec::parse(f_text);
    const Series g = g_spec.materialize(opts.order, opts.pad);
    const Series f = f_spec.kind() == SeriesSpec::Kind::partner
                         ? involution_at(g_spec, opts, err).f().series()
                         : f_spec.materialize(opts.order, opts.pad);
    if (f.order() != g.order()) {
        throw domain_violation("F is only known through x^" + std::to_string(f.order())
                               + "; lower --order or give F explicitly");
    }
    const RiordanElement aerated = aerated_involution(UnitSeries(g), DeltaSeries(f), q);
    const OrderCheck check = check_order(aerated, 2);
    const Format format = parse_format(opts.format);
    if (format == Format::csv) {
        render_series_csv(out, {{"g", &g}, {"F", &f}, {"h", &aerated.g().series()},
                                {"K", &aerated.f().series()}});
    } else if (format == Format::table) {
        render_series_table(out, {{"g", &g}, {"F", &f}, {"h", &aerated.g().series()},
                                  {"K", &aerated.f().series()}});
        render_verdict(out, check, 2);
    } else {
        render_pair(out, format, aerated, check, 2,
                    json{{"q", q}, {"source", {{"g", to_strings(g)}, {"F", to_strings(f)}}}});
    }
    return check.holds ? exit_ok : exit_fails;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact truncated power series and Riordan arrays over the rationals", "rfps"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string g_text;
    std::string f_text;
    unsigned power = 2;
    unsigned q = 1;
    bool full = false;
    bool shortcut = false;

    auto* matrix = app.add_subcommand("matrix", "leading block of the Riordan matrix (g, F)");
    add_common(*matrix, opts);
    matrix->add_option("g", g_text, "series spec for g")->required();
    matrix->add_option("F", f_text, "series spec for F")->required();

    auto* involution = app.add_subcommand("involution", "the unique F with (g, F) an involution");
    add_common(*involution, opts);
    involution->add_option("g", g_text, "series spec for g")->required();

    auto* verify = app.add_subcommand("verify", "check whether (g, F)^n = (1, x)");
    add_common(*verify, opts);
    verify->add_option("g", g_text, "series spec for g")->required();
    verify->add_option("F", f_text, "series spec for F")->required();
    verify->add_option("n", power, "group order to test (default 2)")
        ->check(CLI::PositiveNumber);
    auto* full_flag = verify->add_flag("--full", full, "check both conditions");
    verify->add_flag("--shortcut", shortcut, "check the product condition only (default)")
        ->excludes(full_flag);

    auto* aerate_cmd = app.add_subcommand("aerate", "involution partner of g(x^q) from (g, F)");
    add_common(*aerate_cmd, opts);
    aerate_cmd->add_option("g", g_text, "series spec for g")->required();
    aerate_cmd->add_option("F", f_text, "series spec for F, or 'auto'")->required();
    aerate_cmd->add_option("q", q, "positive odd integer")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (matrix->parsed()) {
            return cmd_matrix(g_text, f_text, opts, out);
        }
        if (involution->parsed()) {
            return cmd_involution(g_text, opts, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(g_text, f_text, power, full, opts, out, err);
        }
        return cmd_aerate(g_text, f_text, q, opts, out, err);
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_fails;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
}

} // namespace rfps::cli
