// lenz_cli: batch front-end for configurations, censuses, formulas and the verification matrix.

#include "lenz/lenz.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace lenz;

struct Range {
    long long lo = 0;
    long long hi = 0;
};

/// "a..b" (inclusive) or a single integer.
Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long long v = std::stoll(text);
            return {v, v};
        }
        Range r{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
        if (r.lo > r.hi) throw domain_error("empty range '" + text + "'");
        return r;
    } catch (const std::logic_error&) {
        throw domain_error("malformed range '" + text + "'");
    }
}

std::optional<PartitionVector> parse_partition(const std::string& text) {
    if (text.empty()) return std::nullopt;
    PartitionVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.entries.push_back(std::stoll(item));
        } catch (const std::logic_error&) {
            throw domain_error("malformed partition '" + text + "'");
        }
        if (v.entries.back() < 0) throw domain_error("partition entries must be nonnegative");
    }
    return v;
}

struct Output {
    std::string path;
    bool csv = false;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            write_text_file(path, text);
        }
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lenz configurations and regular simplex census"};
    app.require_subcommand(1);

    Output out;
    unsigned workers = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out.path, "write to this file instead of stdout");
        sub->add_flag("--csv", out.csv, "tabular output");
        sub->add_option("--workers", workers, "parallel workers (0 = all available)");
    };

    // generate
    long long gen_n = 0, gen_r = 3, gen_k = 3;
    bool gen_odd = false;
    std::string gen_partition;
    auto* generate = app.add_subcommand("generate", "build a Lenz configuration");
    generate->add_option("--n", gen_n, "number of points")->required();
    generate->add_option("--r", gen_r, "number of circles")->required();
    generate->add_option("--k", gen_k, "simplex vertex count used to pick the partition");
    generate->add_flag("--odd", gen_odd, "odd ambient dimension 2r+1 (last component a 2-sphere)");
    generate->add_option("--partition", gen_partition, "explicit class sizes n1,n2,...");
    add_common(generate);

    // count
    std::string count_in, count_method = "closed", count_side;
    long long count_k = 3;
    auto* count = app.add_subcommand("count", "census of regular simplices");
    count->add_option("--in", count_in, "configuration or point-set JSON")->required();
    count->add_option("--method", count_method, "coords | ticks | closed")
        ->check(CLI::IsMember({"coords", "ticks", "closed"}));
    count->add_option("--k", count_k, "vertices per simplex");
    count->add_option("--side-sq", count_side, "only simplices with this squared side (\"a\" or \"a+b*rt3\")");
    add_common(count);

    // formula
    std::string f_which, f_n, f_partition;
    long long f_r = 3, f_k = 3;
    auto* formula = app.add_subcommand("formula", "evaluate a closed-form count");
    formula->add_option("--which", f_which, "fk | t2r | cor13 | unit | leading")
        ->required()
        ->check(CLI::IsMember({"fk", "t2r", "cor13", "unit", "leading"}));
    formula->add_option("--n", f_n, "n or inclusive range a..b");
    formula->add_option("--r", f_r, "number of circles");
    formula->add_option("--k", f_k, "vertices per simplex");
    formula->add_option("--partition", f_partition, "class sizes n1,n2,... (fk, unit)");
    add_common(formula);

    // maximize
    std::string m_n;
    long long m_r = 3, m_k = 3, m_window = 6;
    bool m_auto = false;
    auto* maximize = app.add_subcommand("maximize", "exhaustive maximization of f_k");
    maximize->add_option("--n", m_n, "n or inclusive range a..b")->required();
    maximize->add_option("--r", m_r, "number of circles")->required();
    maximize->add_option("--k", m_k, "vertices per simplex");
    maximize->add_option("--window", m_window, "search |n_i - n/r| <= window");
    maximize->add_flag("--auto-widen", m_auto, "double the window while a maximizer touches it");
    add_common(maximize);

    // verify
    std::string v_n;
    long long v_r = 3, v_k = 3;
    bool v_odd = false;
    auto* verify = app.add_subcommand("verify", "cross-validate census routes and formulas");
    verify->add_option("--n", v_n, "n or inclusive range a..b")->required();
    verify->add_option("--r", v_r, "number of circles")->required();
    verify->add_option("--k", v_k, "vertices per simplex");
    verify->add_flag("--odd", v_odd, "use the odd-dimension configuration");
    add_common(verify);

    // hypergraph
    long long h_r = 3, h_k = 3, h_t = 2;
    bool h_pattern = false;
    std::string h_blowup, h_g, h_h, h_config, h_method = "ticks";
    auto* hyper = app.add_subcommand("hypergraph", "pattern, blowup, containment and simplex hypergraphs");
    auto* mode = hyper->add_option_group("mode");
    mode->add_flag("--make-pattern", h_pattern, "K_{r+1} with each edge padded by k-2 vertices");
    mode->add_option("--blowup", h_blowup, "hypergraph JSON to blow up by --t");
    mode->add_option("--contains", h_g, "host hypergraph JSON; pattern given by --pattern");
    mode->add_option("--from-config", h_config, "configuration or point-set JSON");
    mode->require_option(1);
    hyper->add_option("--pattern", h_h, "pattern hypergraph JSON for --contains");
    hyper->add_option("--r", h_r, "pattern clique order minus one");
    hyper->add_option("--k", h_k, "uniformity");
    hyper->add_option("--t", h_t, "blowup factor");
    hyper->add_option("--method", h_method, "coords | ticks (for --from-config)")->check(CLI::IsMember({"coords", "ticks"}));
    add_common(hyper);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            CircleConfig cfg;
            if (gen_odd) {
                require(gen_partition.empty(), "--partition is not used with --odd");
                cfg = build_odd_config(gen_n, gen_r);
            } else {
                auto part = parse_partition(gen_partition);
                if (!part) {
                    part = gen_k == 3 ? theorem12_partition(gen_n, gen_r)
                                      : maximize_f_k_auto(gen_n, gen_r, gen_k, 6, workers).argmax.front();
                }
                cfg = build_even_config(gen_n, gen_r, *part);
            }
            require(!out.csv, "generate has no CSV form");
            out.emit(dump(to_json(cfg)));
            return 0;
        }

        if (*count) {
            require(count_k >= 3, "--k must be at least 3");
            const json in = read_json_file(count_in);
            const auto k = static_cast<std::size_t>(count_k);
            if (in.contains("dim")) {
                // bare point sets carry no component labels, so only the total is defined
                require(count_method == "coords", "point-set input supports only --method coords");
                std::optional<Quad3> side;
                if (!count_side.empty()) side = Quad3::parse(count_side);
                const BigInt total = count_brute_force(point_set_from_json(in), k, side, workers);
                out.emit(out.csv ? "total\n" + total.str() + "\n" : dump(json{{"total", bigint_to_json(total)}}));
                return 0;
            }
            const CircleConfig cfg = circle_config_from_json(in);
            std::optional<Rational> side;
            if (!count_side.empty()) side = Rational::parse(count_side);
            CountReport rep;
            if (count_method == "closed") {
                rep = count_structured(cfg, k, side);
            } else if (count_method == "ticks") {
                rep = brute_force_structured(cfg, k, side, workers);
            } else {
                rep = census_coords(cfg, k, side, workers);
            }
            out.emit(out.csv ? count_report_csv_header() + to_csv_row(rep) : dump(to_json(rep)));
            return 0;
        }

        if (*formula) {
            const auto part = parse_partition(f_partition);
            std::vector<std::pair<long long, FormulaResult>> rows;
            std::vector<std::pair<long long, Rational>> leading;
            Range range{0, 0};
            if (!f_n.empty()) {
                range = parse_range(f_n);
            } else {
                require(part.has_value(), "--n or --partition is required");
                range = {part->n(), part->n()};
            }
            for (long long n = range.lo; n <= range.hi; ++n) {
                if (f_which == "fk" || f_which == "unit") {
                    PartitionVector p = part ? *part : theorem12_partition(n, f_r);
                    require(p.n() == n, "partition does not sum to n");
                    rows.emplace_back(n, f_which == "fk" ? eval_f_k(p, f_k) : eval_unit_triangle_formula(p));
                    rows.back().second.argmax = {p};
                } else if (f_which == "t2r") {
                    rows.emplace_back(n, eval_T2r_closed(n, f_r));
                } else if (f_which == "cor13") {
                    rows.emplace_back(n, eval_corollary13(n, f_r));
                } else {
                    leading.emplace_back(n, asymptotic_leading(n, f_r, f_k));
                }
            }
            std::string text;
            if (!leading.empty()) {
                if (out.csv) {
                    text = "n,r,k,value\n";
                    for (const auto& [n, v] : leading) text += std::to_string(n) + "," + std::to_string(f_r) + "," + std::to_string(f_k) + "," + v.to_string() + "\n";
                } else {
                    json arr = json::array();
                    for (const auto& [n, v] : leading) arr.push_back(json{{"n", n}, {"r", f_r}, {"k", f_k}, {"value", v.to_string()}});
                    text = dump(arr.size() == 1 ? arr[0] : arr);
                }
            } else if (out.csv) {
                text = "n,r,k,value,argmax,delta1,delta2,delta3\n";
                for (const auto& [n, res] : rows) {
                    text += std::to_string(n) + "," + std::to_string(f_r) + "," + std::to_string(f_k) + "," + res.value.str() + ",\"" +
                            argmax_cell(res.argmax) + "\"," + res.terms->delta1.str() + "," + res.terms->delta2.str() + "," +
                            res.terms->delta3.str() + "\n";
                }
            } else {
                json arr = json::array();
                for (const auto& [n, res] : rows) {
                    json j = to_json(res);
                    j["n"] = n;
                    arr.push_back(std::move(j));
                }
                text = dump(arr.size() == 1 ? arr[0] : arr);
            }
            out.emit(text);
            return 0;
        }

        if (*maximize) {
            const Range range = parse_range(m_n);
            std::string text = out.csv ? "n,r,k,window,value,argmax,delta1,delta2,delta3,touches_boundary\n" : "";
            json arr = json::array();
            for (long long n = range.lo; n <= range.hi; ++n) {
                const auto res = m_auto ? maximize_f_k_auto(n, m_r, m_k, m_window, workers) : maximize_f_k(n, m_r, m_k, m_window, workers);
                if (out.csv) {
                    text += std::to_string(n) + "," + std::to_string(m_r) + "," + std::to_string(m_k) + "," +
                            std::to_string(res.window) + "," + res.value.str() + ",\"" + argmax_cell(res.argmax) + "\"," +
                            res.terms->delta1.str() + "," + res.terms->delta2.str() + "," + res.terms->delta3.str() + "," +
                            (res.touches_boundary ? "true" : "false") + "\n";
                } else {
                    json j = to_json(res);
                    j["n"] = n;
                    j["window"] = res.window;
                    j["touches_boundary"] = res.touches_boundary;
                    arr.push_back(std::move(j));
                }
            }
            out.emit(out.csv ? text : dump(arr.size() == 1 ? arr[0] : arr));
            return 0;
        }

        if (*verify) {
            const Range range = parse_range(v_n);
            VerifyOptions opt{range.lo, range.hi, v_r, v_k, v_odd, workers};
            const auto rep = run_verify(opt);
            out.emit(out.csv ? to_csv(rep) : dump(to_json(rep)));
            if (const auto* bad = rep.first_mismatch()) {
                std::cerr << "mismatch: " << *bad << "\n";
                return 1;
            }
            return 0;
        }

        if (*hyper) {
            require(!out.csv, "hypergraph has no CSV form");
            if (h_pattern) {
                out.emit(dump(to_json(make_pattern_H(static_cast<std::size_t>(h_r), static_cast<std::size_t>(h_k)))));
            } else if (!h_blowup.empty()) {
                require(h_t >= 1, "--t must be at least 1");
                out.emit(dump(to_json(blowup(hypergraph_from_json(read_json_file(h_blowup)), static_cast<std::size_t>(h_t)))));
            } else if (!h_g.empty()) {
                require(!h_h.empty(), "--contains needs --pattern");
                const bool found = contains_copy(hypergraph_from_json(read_json_file(h_g)), hypergraph_from_json(read_json_file(h_h)));
                out.emit(dump(json{{"contains", found}}));
            } else {
                const json in = read_json_file(h_config);
                const auto k = static_cast<std::size_t>(h_k);
                Hypergraph g;
                if (in.contains("dim")) {
                    g = build_simplex_hypergraph(point_set_from_json(in), k);
                } else if (h_method == "coords") {
                    g = build_simplex_hypergraph(embed(circle_config_from_json(in)), k);
                } else {
                    g = build_simplex_hypergraph(circle_config_from_json(in), k);
                }
                out.emit(dump(to_json(g)));
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
