#include "binsum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "binsum/doubleseq.hpp"
#include "binsum/identities.hpp"
#include "binsum/report.hpp"
#include "binsum/sequences.hpp"

namespace binsum::cli {

namespace {

Integer parse_int(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '+')
        body.erase(body.begin());
    std::string digits = (!body.empty() && body.front() == '-') ? body.substr(1) : body;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not an integer: '" + text + "'");
    return Integer(body);
}

Rational parse_rational(const std::string& text) {
    const size_t slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("denominator must be positive in '" + text + "'");
    return Rational(num, den);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

QuadElem parse_quad(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty parameter");
    const size_t mark = text.find("sqrt:");
    if (mark == std::string::npos)
        return QuadElem(parse_rational(text));
    const std::string rad_text = text.substr(mark + 5);
    if (rad_text.empty() || rad_text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad radicand in '" + text + "'");
    const Integer d(rad_text);

    // head is "<lead><sign><coef>"; the coefficient is the trailing run of
    // digits and '/' just before "sqrt:".
    std::string head = text.substr(0, mark);
    size_t cut = head.size();
    while (cut > 0 && (std::isdigit(static_cast<unsigned char>(head[cut - 1])) || head[cut - 1] == '/'))
        --cut;
    const std::string coef_text = head.substr(cut);
    std::string lead = head.substr(0, cut);
    Rational coef = coef_text.empty() ? Rational(1) : parse_rational(coef_text);
    if (!lead.empty() && (lead.back() == '+' || lead.back() == '-')) {
        if (lead.back() == '-')
            coef = -coef;
        lead.pop_back();
    }
    Rational a = lead.empty() ? Rational(0) : parse_rational(lead);
    return QuadElem(a, coef, d);
}

std::vector<Integer> parse_range_list(const std::string& text) {
    std::vector<Integer> out;
    for (const std::string& piece : split(text, ',')) {
        const size_t dots = piece.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(piece));
            continue;
        }
        Integer lo = parse_int(piece.substr(0, dots));
        Integer hi = parse_int(piece.substr(dots + 2));
        for (Integer v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

namespace {

std::vector<QuadElem> parse_quad_list(const std::string& text) {
    std::vector<QuadElem> out;
    for (const std::string& piece : split(text, ','))
        out.push_back(parse_quad(piece));
    return out;
}

struct AxisOverrides {
    std::map<std::string, std::string> by_name;  // axis name -> raw range text
};

GridAxes build_grid(const IdentityInfo& info, const AxisOverrides& axes,
                    const std::string& p_text) {
    GridAxes grid = default_grid(info.id);
    std::map<std::string, std::string> pending = axes.by_name;
    for (auto& [name, values] : grid.int_axes) {
        auto it = pending.find(name);
        if (it == pending.end())
            continue;
        std::vector<Integer> parsed = parse_range_list(it->second);
        const AxisSpec* spec = nullptr;
        for (const AxisSpec& a : info.axes)
            if (a.name == name)
                spec = &a;
        if (spec && spec->even_only)
            std::erase_if(parsed, [](const Integer& v) { return is_odd(v); });
        values = std::move(parsed);
        pending.erase(it);
    }
    if (!pending.empty())
        throw std::invalid_argument("identity " + info.name + " has no parameter --" +
                                    pending.begin()->first);
    if (!p_text.empty()) {
        if (!info.variable_p)
            throw std::invalid_argument("identity " + info.name + " has a fixed parameter p");
        grid.p_values = parse_quad_list(p_text);
        if (grid.p_values.empty())
            throw std::invalid_argument("empty p list");
    }
    return grid;
}

int emit_verification(const IdentityReport& report, std::span<const TableRow> rows,
                      const std::string& format, std::ostream& out, std::ostream& err) {
    if (format == "csv")
        out << table_csv(rows);
    else
        out << report_json(report).dump(2) << "\n";
    err << report.identity << ": " << report.passed << "/" << report.checked << " passed";
    if (report.two_forms)
        err << " (corrected form " << (report.corrected_form_passes ? "passes" : "fails")
            << ", printed form " << (report.printed_form_passes ? "passes" : "fails") << ")";
    err << "\n";
    return report.ok() ? 0 : 1;
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verifier for half-binomial identities over generalized "
                 "Fibonacci and Lucas sequences"};
    app.require_subcommand(1);

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "evaluate u_n or v_n");
    std::string seq_kind;
    std::string seq_p = "1";
    std::string seq_n;
    seq_cmd->add_option("--kind", seq_kind, "sequence kind: u or v")
        ->required()
        ->check(CLI::IsMember({"u", "v"}));
    seq_cmd->add_option("--p", seq_p, "recurrence parameter (e.g. 2, 1/2, sqrt:3, 1+2sqrt:3)");
    seq_cmd->add_option("--n", seq_n, "index, may be negative")->required();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one identity at one point");
    std::string eval_identity;
    std::vector<std::string> eval_args;
    std::string eval_p;
    bool eval_paper = false;
    std::string eval_format = "json";
    eval_cmd->add_option("--identity", eval_identity, "identity name")->required();
    eval_cmd->add_option("--args", eval_args, "parameter tuple in axis order");
    eval_cmd->add_option("--p", eval_p, "parameter p (variable-p identities only)");
    eval_cmd->add_flag("--paper-form", eval_paper, "evaluate the form as printed");
    eval_cmd->add_option("--format", eval_format)->check(CLI::IsMember({"json", "csv"}));

    // verify / table share their grid flags
    std::string verify_identity, verify_p, verify_format = "json";
    bool verify_paper = false;
    std::map<std::string, std::string> verify_axes;
    auto* verify_cmd = app.add_subcommand("verify", "sweep an identity over a grid");
    std::string table_identity, table_p, table_format = "json";
    bool table_paper = false;
    std::map<std::string, std::string> table_axes;
    auto* table_cmd = app.add_subcommand("table", "emit per-point rows over a grid");
    for (auto [cmd, identity, p, format, paper, axes] :
         {std::tuple{verify_cmd, &verify_identity, &verify_p, &verify_format, &verify_paper,
                     &verify_axes},
          std::tuple{table_cmd, &table_identity, &table_p, &table_format, &table_paper,
                     &table_axes}}) {
        cmd->add_option("--identity", *identity, "identity name")->required();
        for (const char* axis : {"n", "r", "m", "t", "u", "v"})
            cmd->add_option("--" + std::string(axis), (*axes)[axis],
                            "range for " + std::string(axis) + " (lo..hi or comma list)");
        cmd->add_option("--p", *p, "comma-separated p values");
        cmd->add_flag("--paper-form", *paper, "check the form as printed");
        cmd->add_option("--format", *format)->check(CLI::IsMember({"json", "csv"}));
    }

    // congruence
    auto* cong_cmd = app.add_subcommand("congruence", "modular sweep of a power-sum congruence");
    std::string cong_id;
    std::string cong_nmax = "1000";
    std::string cong_format = "json";
    cong_cmd->add_option("--id", cong_id, "mod25 or mod625")
        ->required()
        ->check(CLI::IsMember({"mod25", "mod625"}));
    cong_cmd->add_option("--n-max", cong_nmax, "upper index bound");
    cong_cmd->add_option("--format", cong_format)->check(CLI::IsMember({"json", "csv"}));

    // represent
    auto* rep_cmd = app.add_subcommand("represent", "power-of-w representation check");
    std::string rep_w;
    std::string rep_n = "1..12";
    std::string rep_format = "json";
    rep_cmd->add_option("--w", rep_w, "base w >= 4")->required();
    rep_cmd->add_option("--n", rep_n, "range for n");
    rep_cmd->add_option("--format", rep_format)->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (seq_cmd->parsed()) {
        const SeqParams params{parse_quad(seq_p)};
        const Integer n = parse_int(seq_n);
        const Integer mag = n < 0 ? Integer(-n) : n;
        SeqPair pair = seq_pair_fastdouble(mag, params);
        QuadElem value = seq_kind == "u" ? pair.u : pair.v;
        if (n < 0) {
            // u_{-n} = (-1)^{n+1} u_n, v_{-n} = (-1)^n v_n
            const bool flip = seq_kind == "u" ? is_even(mag) : is_odd(mag);
            if (flip)
                value = -value;
        }
        out << value.str() << "\n";
        return 0;
    }

    if (eval_cmd->parsed()) {
        const IdentityId id = identity_from_name(eval_identity);
        const IdentityInfo& info = identity_info(id);
        std::vector<Integer> point;
        for (const std::string& a : eval_args)
            point.push_back(parse_int(a));
        const QuadElem p = eval_p.empty() ? QuadElem(1) : parse_quad(eval_p);
        if (!eval_p.empty() && !info.variable_p)
            throw std::invalid_argument("identity " + info.name + " has a fixed parameter p");
        const Form form = eval_paper ? Form::Printed : info.default_form;
        auto [lhs, rhs] = evaluate_identity(id, point, form, &p);
        TableRow row;
        for (size_t i = 0; i < point.size(); ++i)
            row.params.emplace_back(info.axes[i].name, point[i].get_str());
        if (info.variable_p)
            row.params.emplace_back("p", p.str());
        row.lhs = lhs.str();
        row.rhs = rhs.str();
        row.equal = lhs == rhs;
        if (eval_format == "csv") {
            out << table_csv({&row, 1});
        } else {
            nlohmann::ordered_json doc;
            doc["identity"] = info.name;
            if (info.two_forms)
                doc["form"] = form == Form::Corrected ? "corrected" : "printed";
            nlohmann::ordered_json params_doc = nlohmann::ordered_json::object();
            for (const auto& [name, value] : row.params)
                params_doc[name] = value;
            doc["params"] = std::move(params_doc);
            doc["lhs"] = row.lhs;
            doc["rhs"] = row.rhs;
            doc["equal"] = row.equal;
            out << doc.dump(2) << "\n";
        }
        return row.equal ? 0 : 1;
    }

    if (verify_cmd->parsed() || table_cmd->parsed()) {
        const bool is_verify = verify_cmd->parsed();
        const std::string& identity_text = is_verify ? verify_identity : table_identity;
        const std::string& p_text = is_verify ? verify_p : table_p;
        const std::string& format = is_verify ? verify_format : table_format;
        const bool paper = is_verify ? verify_paper : table_paper;
        auto& axes_text = is_verify ? verify_axes : table_axes;

        const IdentityId id = identity_from_name(identity_text);
        const IdentityInfo& info = identity_info(id);
        AxisOverrides overrides;
        for (const auto& [name, text] : axes_text)
            if (!text.empty())
                overrides.by_name[name] = text;
        const GridAxes grid = build_grid(info, overrides, p_text);
        const std::optional<Form> form =
            paper ? std::optional<Form>(Form::Printed) : std::nullopt;

        if (is_verify) {
            IdentityReport report = verify_grid(id, grid, form);
            std::vector<TableRow> rows;
            if (format == "csv")
                rows = tabulate(id, grid, form);
            return emit_verification(report, rows, format, out, err);
        }
        std::vector<TableRow> rows = tabulate(id, grid, form);
        if (format == "csv") {
            out << table_csv(rows);
        } else {
            const IdentityReport summary = verify_grid(id, grid, form);
            out << table_json(info.name, summary.grid, rows).dump(2) << "\n";
        }
        const bool all_equal =
            std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.equal; });
        err << info.name << ": " << rows.size() << " rows\n";
        return all_equal ? 0 : 1;
    }

    if (cong_cmd->parsed()) {
        const IdentityId id = cong_id == "mod25" ? IdentityId::Cong25 : IdentityId::Cong625;
        const Integer n_max = parse_int(cong_nmax);
        IdentityReport report = congruence_check(id, n_max);
        std::vector<TableRow> rows;
        if (cong_format == "csv") {
            GridAxes grid;
            std::vector<Integer> values;
            for (Integer n = 1; n <= n_max; ++n)
                values.push_back(n);
            grid.int_axes.emplace_back("n", std::move(values));
            rows = tabulate(id, grid);
        }
        return emit_verification(report, rows, cong_format, out, err);
    }

    if (rep_cmd->parsed()) {
        const Integer w = parse_int(rep_w);
        const std::vector<Integer> ns = parse_range_list(rep_n);
        if (ns.empty())
            throw std::invalid_argument("empty range for n");
        const auto started = std::chrono::steady_clock::now();
        IdentityReport report;
        report.identity = "rep_power_sum";
        report.grid = {{"w", w.get_str()}, {"n", rep_n}};
        std::vector<TableRow> rows;
        for (const Integer& n : ns) {
            auto [lhs, rhs] = rep_power_sum(w, n);
            const bool equal = lhs == rhs;
            ++report.checked;
            if (equal)
                ++report.passed;
            else
                report.counterexamples.push_back(Counterexample{
                    {{"w", w.get_str()}, {"n", n.get_str()}}, lhs.str(), rhs.str()});
            rows.push_back(TableRow{{{"w", w.get_str()}, {"n", n.get_str()}},
                                    lhs.str(), rhs.str(), equal});
        }
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();
        return emit_verification(report, rows, rep_format, out, err);
    }

    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_parsed(args, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace binsum::cli
