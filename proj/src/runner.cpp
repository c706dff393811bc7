#include "splitcensus/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace splitcensus {

using ordered_json = nlohmann::ordered_json;

namespace {

struct ConfigError : Error {
    std::string field;
    ConfigError(std::string f, const std::string& message)
        : Error("invalid --" + f + ": " + message), field(std::move(f)) {}
};

std::string join_dashed(const std::vector<u64>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back('-');
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_dashed(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back('-');
        out += std::to_string(values[i]);
    }
    return out;
}

std::string edges_string(const PatternGraph& g) {
    std::string out;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            if (!g.edge(i, j)) continue;
            if (!out.empty()) out.push_back(';');
            out += std::to_string(i);
            out.push_back(':');
            out += std::to_string(j);
        }
    }
    return out;
}

const char* bool_str(bool b) {
    return b ? "true" : "false";
}

struct ValidatedConfig {
    FieldContext ctx;
    u64 t_lo = 0;
    u64 t_hi = 0;  // inclusive; 0..0 when t is absent
    bool has_t = false;
};

ValidatedConfig validate(const RunConfig& cfg) {
    ValidatedConfig v;
    if (cfg.jobs < 1) throw ConfigError{"jobs", "must be >= 1"};
    if (cfg.budget < 1) throw ConfigError{"budget", "must be >= 1"};
    if (cfg.p == 0) throw ConfigError{"p", "required"};
    try {
        v.ctx = make_context(cfg.p);
    } catch (const Error& e) {
        throw ConfigError{"p", e.what()};
    }
    if (cfg.k < 1) throw ConfigError{"k", "must be >= 1"};

    const bool needs_t = cfg.command != Command::verify_lemmas;
    if (needs_t) {
        if (cfg.t_spec.empty()) throw ConfigError{"t", "required for this command"};
        const auto range = parse_t_spec(cfg.t_spec);
        if (!range) throw ConfigError{"t", "expected an integer or a range A..B"};
        v.t_lo = range->first;
        v.t_hi = range->second;
        v.has_t = true;
        if (v.t_lo < 1) throw ConfigError{"t", "must be >= 1"};
        if (v.t_hi >= cfg.p) {
            throw ConfigError{"t", "must be below p = " + std::to_string(cfg.p)};
        }
    }
    if (cfg.command == Command::domination) {
        if (!cfg.d) throw ConfigError{"D", "required for domination"};
        if (*cfg.d < 1) throw ConfigError{"D", "must be >= 1"};
    }
    return v;
}

// ---- census ----

std::string census_csv(const std::vector<CensusRecord>& records) {
    std::string out = "p,k,t,pattern,splittable,D,witness,Q_witness\n";
    for (const CensusRecord& rec : records) {
        for (const PatternResult& r : rec.per_pattern) {
            out += std::to_string(rec.p) + ',' + std::to_string(rec.k) + ',' +
                   std::to_string(rec.t) + ',' + join_dashed(r.exps) + ',' +
                   bool_str(r.splittable) + ',' + std::to_string(r.d) + ',';
            if (r.splittable) {
                out += join_dashed(r.witness) + ',' + std::to_string(r.witness_roots);
            } else {
                out += ',';
            }
            out.push_back('\n');
        }
        out += "#N," + std::to_string(rec.n_split) + ',' + format_double(rec.bound_leading) +
               ',' + bool_str(rec.nontrivial) + '\n';
    }
    return out;
}

ordered_json census_record_json(const CensusRecord& rec) {
    ordered_json j;
    j["p"] = rec.p;
    j["k"] = rec.k;
    j["t"] = rec.t;
    j["per_pattern"] = ordered_json::array();
    for (const PatternResult& r : rec.per_pattern) {
        ordered_json row;
        row["pattern"] = join_dashed(r.exps);
        row["splittable"] = r.splittable;
        row["D"] = r.d;
        if (r.splittable) {
            row["witness"] = join_dashed(r.witness);
            row["Q_witness"] = r.witness_roots;
        } else {
            row["witness"] = "";
            row["Q_witness"] = nullptr;
        }
        j["per_pattern"].push_back(std::move(row));
    }
    j["N"] = rec.n_split;
    j["bound_leading"] = rec.bound_leading;
    j["nontrivial"] = rec.nontrivial;
    return j;
}

// ---- zero-bound ----

struct ZeroBoundRow {
    PatternResult pattern;
    std::optional<ZeroBoundRecord> zero;  // present for split patterns
    GcdFloorRecord floor;
};

std::vector<ZeroBoundRow> zero_bound_rows(const FieldContext& ctx, const CensusRecord& rec) {
    std::vector<ZeroBoundRow> rows;
    for (const PatternResult& r : rec.per_pattern) {
        ZeroBoundRow row;
        row.pattern = r;
        const ExponentPattern pattern(ctx, r.exps);
        row.floor = gcd_floor_report(pattern, r.splittable);
        if (r.splittable) {
            // The census already counted the witness's distinct roots; loose
            // witnesses may carry interior zeros, so go through the record
            // assembler rather than a LacunaryPoly.
            row.zero = zero_bound_record(row.floor.d, r.witness_roots, rec.k, ctx.p);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string zero_bound_csv(const FieldContext& ctx, const std::vector<CensusRecord>& records) {
    std::string out =
        "p,k,t,pattern,splittable,D,Q,leading,secondary,ratio,floor_rhs,floor_ratio\n";
    for (const CensusRecord& rec : records) {
        for (const ZeroBoundRow& row : zero_bound_rows(ctx, rec)) {
            out += std::to_string(rec.p) + ',' + std::to_string(rec.k) + ',' +
                   std::to_string(rec.t) + ',' + join_dashed(row.pattern.exps) + ',' +
                   bool_str(row.pattern.splittable) + ',' + std::to_string(row.floor.d) + ',';
            if (row.zero) {
                out += std::to_string(row.zero->q) + ',' + format_double(row.zero->leading) +
                       ',' + format_double(row.zero->secondary) + ',' +
                       format_double(row.zero->ratio);
            } else {
                out += ",,,";
            }
            out += ',' + format_double(row.floor.rhs) + ',';
            if (row.floor.applicable) out += format_double(row.floor.ratio);
            out.push_back('\n');
        }
    }
    return out;
}

ordered_json zero_bound_record_json(const FieldContext& ctx, const CensusRecord& rec) {
    ordered_json j;
    j["p"] = rec.p;
    j["k"] = rec.k;
    j["t"] = rec.t;
    j["per_pattern"] = ordered_json::array();
    for (const ZeroBoundRow& row : zero_bound_rows(ctx, rec)) {
        ordered_json r;
        r["pattern"] = join_dashed(row.pattern.exps);
        r["splittable"] = row.pattern.splittable;
        r["D"] = row.floor.d;
        if (row.zero) {
            r["Q"] = row.zero->q;
            r["leading"] = row.zero->leading;
            r["secondary"] = row.zero->secondary;
            r["ratio"] = row.zero->ratio;
        } else {
            r["Q"] = nullptr;
            r["leading"] = nullptr;
            r["secondary"] = nullptr;
            r["ratio"] = nullptr;
        }
        r["floor_rhs"] = row.floor.rhs;
        if (row.floor.applicable) {
            r["floor_ratio"] = row.floor.ratio;
        } else {
            r["floor_ratio"] = nullptr;
        }
        j["per_pattern"].push_back(std::move(r));
    }
    return j;
}

// ---- domination ----

std::string domination_csv(const std::vector<GraphClassReport>& reports) {
    std::string out =
        "p,k,t,D,graph,edges,count,min_degree,status,gamma,dominating,endpoint_case,bound\n";
    for (const GraphClassReport& rep : reports) {
        for (const GraphClassEntry& e : rep.entries) {
            const PatternGraph g =
                PatternGraph::from_canonical_key(static_cast<int>(rep.k) + 1, e.key);
            out += std::to_string(rep.p) + ',' + std::to_string(rep.k) + ',' +
                   std::to_string(rep.t) + ',' + std::to_string(rep.d) + ',' +
                   std::to_string(e.key) + ',' + edges_string(g) + ',' +
                   std::to_string(e.count) + ',' + std::to_string(e.min_deg) + ',';
            if (e.excluded) {
                out += "isolated-vertex,,,,";
            } else {
                out += std::string("ok,") + std::to_string(e.gamma) + ',' +
                       join_dashed(e.dominating) + ',' + endpoint_case_name(e.endpoint_case) +
                       ',' + format_double(e.bound_value);
            }
            out.push_back('\n');
        }
        out += "#classes," + std::to_string(rep.entries.size()) + ',' +
               std::to_string(rep.total_patterns) + '\n';
    }
    return out;
}

ordered_json domination_record_json(const GraphClassReport& rep) {
    ordered_json j;
    j["p"] = rep.p;
    j["k"] = rep.k;
    j["t"] = rep.t;
    j["D"] = rep.d;
    j["classes"] = ordered_json::array();
    for (const GraphClassEntry& e : rep.entries) {
        const PatternGraph g =
            PatternGraph::from_canonical_key(static_cast<int>(rep.k) + 1, e.key);
        ordered_json r;
        r["graph"] = e.key;
        r["edges"] = edges_string(g);
        r["count"] = e.count;
        r["min_degree"] = e.min_deg;
        if (e.excluded) {
            r["status"] = "isolated-vertex";
            r["gamma"] = nullptr;
            r["dominating"] = nullptr;
            r["endpoint_case"] = nullptr;
            r["bound"] = nullptr;
        } else {
            r["status"] = "ok";
            r["gamma"] = e.gamma;
            r["dominating"] = join_dashed(e.dominating);
            r["endpoint_case"] = endpoint_case_name(e.endpoint_case);
            r["bound"] = e.bound_value;
        }
        j["classes"].push_back(std::move(r));
    }
    j["total_patterns"] = rep.total_patterns;
    return j;
}

// ---- bound-compare ----

struct BoundCompareRow {
    u64 p = 0;
    unsigned k = 0;
    u64 t = 0;
    u64 n = 0;
    PatternCountBound bound;
    double slack = 0.0;
};

std::string bound_compare_csv(const std::vector<BoundCompareRow>& rows) {
    std::string out =
        "p,k,t,N,trivial_bound,bound_leading,slack,nontrivial,simplified_exponent\n";
    for (const BoundCompareRow& r : rows) {
        out += std::to_string(r.p) + ',' + std::to_string(r.k) + ',' + std::to_string(r.t) +
               ',' + std::to_string(r.n) + ',' + std::to_string(r.bound.trivial_bound) + ',' +
               format_double(r.bound.leading) + ',' + format_double(r.slack) + ',' +
               bool_str(r.bound.nontrivial) + ',' + std::to_string(r.bound.simplified_exponent) +
               '\n';
    }
    return out;
}

ordered_json bound_compare_record_json(const BoundCompareRow& r) {
    ordered_json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["t"] = r.t;
    j["N"] = r.n;
    j["trivial_bound"] = r.bound.trivial_bound;
    j["bound_leading"] = r.bound.leading;
    j["slack"] = r.slack;
    j["nontrivial"] = r.bound.nontrivial;
    j["simplified_exponent"] = r.bound.simplified_exponent;
    return j;
}

// ---- verify-lemmas ----

struct SuiteRow {
    std::string name;
    SweepResult result;
};

std::vector<SuiteRow> run_verify_suites(const FieldContext& ctx, const RunConfig& cfg) {
    // Budget guard on the exhaustive coefficient sweeps: sum over t of
    // C(t-1, k-1) patterns is C(p-1, k), each scanned over (p-1)^k vectors.
    u64 per_pattern = 1;
    bool over = false;
    for (unsigned i = 0; i < cfg.k && !over; ++i) {
        if (per_pattern > cfg.budget / (ctx.p - 1)) over = true;
        per_pattern *= ctx.p - 1;
    }
    const u64 n_patterns = binomial_saturating(ctx.p - 1, cfg.k);
    if (over || (n_patterns != 0 && per_pattern > cfg.budget / n_patterns)) {
        throw BudgetExceededError("verify-lemmas: exhaustive sweep at p = " +
                                  std::to_string(ctx.p) + ", k = " + std::to_string(cfg.k) +
                                  " exceeds budget " + std::to_string(cfg.budget));
    }

    std::vector<SuiteRow> rows;
    rows.push_back({"multiplicity-bound", verify_multiplicity_bound(ctx, cfg.k, cfg.jobs)});
    rows.push_back({"determinant-identity",
                    verify_determinant_identity(cfg.k, std::min<u64>(12, ctx.p - 1))});
    rows.push_back(
        {"ore-domination", verify_ore_bound(2, std::min<int>(static_cast<int>(cfg.k) + 1, 7),
                                            cfg.jobs)});
    rows.push_back({"min-degree-at-gcd-parameter",
                    verify_min_degree_at_gcd_parameter(ctx, cfg.k)});
    rows.push_back({"split-test", verify_split_test_exhaustive(ctx, cfg.k, cfg.jobs)});
    return rows;
}

std::string verify_csv(const std::vector<SuiteRow>& rows) {
    std::string out = "suite,checked,violations\n";
    for (const SuiteRow& r : rows) {
        out += r.name + ',' + std::to_string(r.result.checked) + ',' +
               std::to_string(r.result.violations) + '\n';
    }
    return out;
}

ordered_json verify_json(const FieldContext& ctx, const RunConfig& cfg,
                         const std::vector<SuiteRow>& rows) {
    ordered_json j;
    j["p"] = ctx.p;
    j["k"] = cfg.k;
    j["suites"] = ordered_json::array();
    for (const SuiteRow& r : rows) {
        ordered_json s;
        s["suite"] = r.name;
        s["checked"] = r.result.checked;
        s["violations"] = r.result.violations;
        j["suites"].push_back(std::move(s));
    }
    return j;
}

std::string dump_json(const ordered_json& j) {
    return j.dump(2) + "\n";
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    if (name == "census") return Command::census;
    if (name == "verify-lemmas") return Command::verify_lemmas;
    if (name == "zero-bound") return Command::zero_bound;
    if (name == "domination") return Command::domination;
    if (name == "bound-compare") return Command::bound_compare;
    return std::nullopt;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::census: return "census";
        case Command::verify_lemmas: return "verify-lemmas";
        case Command::zero_bound: return "zero-bound";
        case Command::domination: return "domination";
        case Command::bound_compare: return "bound-compare";
    }
    return "?";
}

std::optional<std::pair<u64, u64>> parse_t_spec(const std::string& spec) {
    const auto parse_u64 = [](std::string_view s) -> std::optional<u64> {
        u64 value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
        return value;
    };
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_u64(spec);
        if (!v) return std::nullopt;
        return std::make_pair(*v, *v);
    }
    const auto lo = parse_u64(std::string_view(spec).substr(0, dots));
    const auto hi = parse_u64(std::string_view(spec).substr(dots + 2));
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_environment() {
    if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') {
        return ResultCache(env);
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return ResultCache(std::filesystem::path(home) / ".cache" / "splitcensus");
    }
    return ResultCache(".splitcensus-cache");
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
    std::ifstream in(dir_ / key, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return buf.str();
}

void ResultCache::store(const std::string& key, const std::string& bytes) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw IoError("cache: cannot create " + dir_.string() + ": " + ec.message());
    const std::filesystem::path tmp = dir_ / (key + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out.good()) throw IoError("cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, dir_ / key, ec);
    if (ec) throw IoError("cache: rename failed: " + ec.message());
}

std::string cache_key(const RunConfig& cfg) {
    std::string key = command_name(cfg.command);
    key += "_p" + std::to_string(cfg.p);
    key += "_k" + std::to_string(cfg.k);
    key += "_t" + (cfg.t_spec.empty() ? std::string("x") : cfg.t_spec);
    key += "_D" + (cfg.d ? std::to_string(*cfg.d) : std::string("x"));
    key += cfg.strict_pattern ? "_s1" : "_s0";
    key += std::string("_v") + kToolVersion;
    key += cfg.format == OutputFormat::csv ? ".csv" : ".json";
    return key;
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

Rendered render_output(const RunConfig& cfg) {
    const ValidatedConfig v = validate(cfg);
    const CensusOptions opts{cfg.budget, cfg.strict_pattern, cfg.jobs};
    Rendered rendered;

    switch (cfg.command) {
        case Command::census:
        case Command::zero_bound: {
            std::vector<CensusRecord> records;
            for (u64 t = v.t_lo; t <= v.t_hi; ++t) {
                records.push_back(count_split_patterns(v.ctx, cfg.k, t, opts));
            }
            const bool single = v.t_lo == v.t_hi && cfg.t_spec.find("..") == std::string::npos;
            if (cfg.command == Command::census) {
                if (cfg.format == OutputFormat::csv) {
                    rendered.bytes = census_csv(records);
                } else if (single) {
                    rendered.bytes = dump_json(census_record_json(records.front()));
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const auto& rec : records) arr.push_back(census_record_json(rec));
                    rendered.bytes = dump_json(arr);
                }
            } else {
                if (cfg.format == OutputFormat::csv) {
                    rendered.bytes = zero_bound_csv(v.ctx, records);
                } else if (single) {
                    rendered.bytes = dump_json(zero_bound_record_json(v.ctx, records.front()));
                } else {
                    ordered_json arr = ordered_json::array();
                    for (const auto& rec : records) {
                        arr.push_back(zero_bound_record_json(v.ctx, rec));
                    }
                    rendered.bytes = dump_json(arr);
                }
            }
            break;
        }
        case Command::domination: {
            std::vector<GraphClassReport> reports;
            for (u64 t = v.t_lo; t <= v.t_hi; ++t) {
                reports.push_back(graph_class_report(v.ctx, cfg.k, t, *cfg.d, cfg.budget));
            }
            const bool single = v.t_lo == v.t_hi && cfg.t_spec.find("..") == std::string::npos;
            if (cfg.format == OutputFormat::csv) {
                rendered.bytes = domination_csv(reports);
            } else if (single) {
                rendered.bytes = dump_json(domination_record_json(reports.front()));
            } else {
                ordered_json arr = ordered_json::array();
                for (const auto& rep : reports) arr.push_back(domination_record_json(rep));
                rendered.bytes = dump_json(arr);
            }
            break;
        }
        case Command::bound_compare: {
            std::vector<BoundCompareRow> rows;
            for (u64 t = v.t_lo; t <= v.t_hi; ++t) {
                BoundCompareRow row;
                row.p = cfg.p;
                row.k = cfg.k;
                row.t = t;
                row.n = count_split_patterns(v.ctx, cfg.k, t, opts).n_split;
                row.bound = pattern_count_bound(cfg.p, cfg.k, t);
                row.slack = static_cast<double>(row.n) / row.bound.leading;
                rows.push_back(row);
            }
            const bool single = v.t_lo == v.t_hi && cfg.t_spec.find("..") == std::string::npos;
            if (cfg.format == OutputFormat::csv) {
                rendered.bytes = bound_compare_csv(rows);
            } else if (single) {
                rendered.bytes = dump_json(bound_compare_record_json(rows.front()));
            } else {
                ordered_json arr = ordered_json::array();
                for (const auto& row : rows) arr.push_back(bound_compare_record_json(row));
                rendered.bytes = dump_json(arr);
            }
            break;
        }
        case Command::verify_lemmas: {
            const auto rows = run_verify_suites(v.ctx, cfg);
            for (const SuiteRow& r : rows) rendered.violations += r.result.violations;
            rendered.bytes = cfg.format == OutputFormat::csv
                                 ? verify_csv(rows)
                                 : dump_json(verify_json(v.ctx, cfg, rows));
            break;
        }
    }
    return rendered;
}

namespace {

void write_artifact(const RunConfig& cfg, const std::string& bytes) {
    if (cfg.out.empty()) {
        std::cout << bytes;
        std::cout.flush();
        return;
    }
    std::ofstream out(cfg.out, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file " + cfg.out);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.good()) throw IoError("write failed for " + cfg.out);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& err) {
    try {
        try {
            validate(cfg);
        } catch (const ConfigError& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }

        const ResultCache cache = ResultCache::from_environment();
        const std::string key = cache_key(cfg);
        if (const auto hit = cache.lookup(key)) {
            write_artifact(cfg, *hit);
            return 0;
        }

        const Rendered rendered = render_output(cfg);
        if (rendered.violations == 0) cache.store(key, rendered.bytes);
        write_artifact(cfg, rendered.bytes);
        if (rendered.violations != 0) {
            err << "error: " << rendered.violations << " invariant violation(s) detected\n";
            return 2;
        }
        return 0;
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace splitcensus
