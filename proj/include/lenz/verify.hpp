#pragma once

// Cross-validation matrix: for each n, build the configuration and compare every applicable
// census route and formula. Equalities between exact counts are asserted; the comparison of
// the case-selected partition with the exhaustive maximizer is reported only, since it is
// guaranteed just for large n.

#include "lenz/census.hpp"
#include "lenz/construction.hpp"
#include "lenz/formulas.hpp"
#include "lenz/serialize.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lenz {

struct VerifyOptions {
    long long n_lo = 3;
    long long n_hi = 3;
    long long r = 3;
    long long k = 3;
    bool odd = false;
    unsigned workers = 1;
};

struct VerifyRow {
    long long n = 0;
    PartitionVector partition;
    std::map<std::string, BigInt> totals;  // method -> total
    std::optional<CountReport> ticks;
    std::optional<CountReport> closed;
    std::optional<bool> partition_attains_max;  // reported, not asserted
    std::optional<std::string> mismatch;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifyRow> rows;

    bool ok() const {
        for (const auto& row : rows) {
            if (row.mismatch) return false;
        }
        return true;
    }

    const std::string* first_mismatch() const {
        for (const auto& row : rows) {
            if (row.mismatch) return &*row.mismatch;
        }
        return nullptr;
    }
};

namespace detail {

inline std::string describe(const VerifyOptions& o, long long n, const PartitionVector& p) {
    return "n=" + std::to_string(n) + " r=" + std::to_string(o.r) + " k=" + std::to_string(o.k) +
           " partition=" + p.to_string();
}

inline PartitionVector verify_partition(const VerifyOptions& o, long long n) {
    if (o.odd) return balanced_partition(n, o.r);
    if (o.k == 3) return theorem12_partition(n, o.r);
    return maximize_f_k_auto(n, o.r, o.k, 6, 1).argmax.front();
}

}  // namespace detail

inline VerifyReport run_verify(const VerifyOptions& o) {
    if (o.n_lo > o.n_hi) throw domain_error("empty n range");
    if (o.r < 3) throw domain_error("verify needs r >= 3");
    if (o.k < 3 || o.k > o.r) throw domain_error("verify needs 3 <= k <= r");
    if (o.n_lo < o.r) throw domain_error("verify needs n >= r");

    VerifyReport report;
    report.options = o;
    const auto k = static_cast<std::size_t>(o.k);
    for (long long n = o.n_lo; n <= o.n_hi; ++n) {
        VerifyRow row;
        row.n = n;
        row.partition = detail::verify_partition(o, n);
        const CircleConfig cfg = o.odd ? build_odd_config(n, o.r) : build_even_config(n, o.r, row.partition);

        row.ticks = brute_force_structured(cfg, k, std::nullopt, o.workers);
        row.closed = count_structured(cfg, k);
        row.totals["ticks"] = row.ticks->total;
        row.totals["closed"] = row.closed->total;
        std::optional<CountReport> coords;
        if (is_embeddable(cfg)) {
            coords = census_coords(cfg, k, std::nullopt, o.workers);
            row.totals["coords"] = coords->total;
        }
        row.totals["formula"] = eval_f_k(row.partition, o.k).value;
        if (!o.odd && o.k == 3) {
            row.totals["t2r"] = eval_T2r_closed(n, o.r).value;
            if (n % (12 * o.r) == 0) row.totals["cor13"] = eval_corollary13(n, o.r).value;
            row.partition_attains_max = maximize_f_k_auto(n, o.r, 3, 6, o.workers).value == row.totals["formula"];
        }

        if (*row.ticks != *row.closed) {
            row.mismatch = "type breakdown differs between ticks and closed at " + detail::describe(o, n, row.partition);
        } else if (coords && *coords != *row.ticks) {
            row.mismatch = "type breakdown differs between ticks and coords at " + detail::describe(o, n, row.partition);
        }
        const auto& ref = row.totals.at("ticks");
        for (const auto& [method, value] : row.totals) {
            if (row.mismatch) break;
            if (value != ref) {
                row.mismatch = "ticks=" + ref.str() + " vs " + method + "=" + value.str() + " at " +
                               detail::describe(o, n, row.partition);
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline json to_json(const VerifyReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json jr{{"n", row.n}, {"partition", to_json(row.partition)}, {"ok", !row.mismatch}};
        json totals = json::object();
        for (const auto& [method, value] : row.totals) totals[method] = bigint_to_json(value);
        jr["totals"] = std::move(totals);
        if (row.ticks) jr["types"] = to_json(*row.ticks);
        if (row.partition_attains_max) jr["partition_attains_max"] = *row.partition_attains_max;
        if (row.mismatch) jr["mismatch"] = *row.mismatch;
        rows.push_back(std::move(jr));
    }
    return json{{"r", rep.options.r},
                {"k", rep.options.k},
                {"dimension", 2 * rep.options.r + (rep.options.odd ? 1 : 0)},
                {"ok", rep.ok()},
                {"rows", std::move(rows)}};
}

inline std::string to_csv(const VerifyReport& rep) {
    static const char* kMethods[] = {"coords", "ticks", "closed", "formula", "t2r", "cor13"};
    std::string out = "n,r,k,partition,delta1,delta2,delta3";
    for (const char* m : kMethods) out += std::string(",") + m;
    out += ",partition_attains_max,ok\n";
    for (const auto& row : rep.rows) {
        out += std::to_string(row.n) + "," + std::to_string(rep.options.r) + "," + std::to_string(rep.options.k) + ",\"" +
               row.partition.to_string() + "\"," + row.ticks->delta1.str() + "," + row.ticks->delta2.str() + "," +
               row.ticks->delta3.str();
        for (const char* m : kMethods) {
            auto it = row.totals.find(m);
            out += ",";
            if (it != row.totals.end()) out += it->second.str();
        }
        out += ",";
        if (row.partition_attains_max) out += *row.partition_attains_max ? "true" : "false";
        out += row.mismatch ? ",false\n" : ",true\n";
    }
    return out;
}

}  // namespace lenz
