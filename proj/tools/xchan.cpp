// xchan: command line surface for the X channel toolkit. Every subcommand
// echoes its resolved configuration, prints machine-readable output (table,
// csv or json), and uses exit codes 0 = success, 1 = verification failure,
// 2 = usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "xchannel/alignment.hpp"
#include "xchannel/det_channel.hpp"
#include "xchannel/gaussian.hpp"
#include "xchannel/hex_io.hpp"
#include "xchannel/qary.hpp"

using json = nlohmann::ordered_json;
using namespace xchan;

namespace {

enum class Format { table, csv, js };

struct Output {
    Format format = Format::table;
    std::string out_path;  // empty = stdout
    std::ofstream file;

    std::ostream& stream() {
        if (out_path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(out_path);
            if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        }
        return file;
    }
};

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("XCHAN_OUTPUT_DIR");
    if (!dir || !*dir) return path;
    return std::string(dir) + "/" + path;
}

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void emit_config_line(Output& out, const json& config) {
    if (out.format == Format::csv)
        out.stream() << "# config: " << config.dump() << "\n";
    else if (out.format == Format::table)
        out.stream() << "config: " << config.dump() << "\n";
}

Rational parse_rational_flag(const std::string& text) {
    if (text.find('/') != std::string::npos || text.find('.') == std::string::npos)
        return Rational::parse(text);
    auto approx = rational_from_double(std::stod(text));
    return approx.value;
}

json load_config_file(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    json j;
    in >> j;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_capacity(Output& out, int nc, int nd, int sweep_max_nd) {
    json cfg{{"command", "capacity"}, {"nc", nc}, {"nd", nd}};
    if (sweep_max_nd > 0) cfg["sweep_max_nd"] = sweep_max_nd;

    struct Row {
        int nc, nd;
        Rational ratio;
        CapacityValue cap;
        SymUpperValue up;
    };
    std::vector<Row> rows;
    auto add_row = [&](int c, int d) {
        SymDetParams s{c, d};
        rows.push_back({c, d, d ? Rational(c, d) : Rational(0), sym_sum_capacity(s), sym_sum_upper(s)});
    };
    if (sweep_max_nd > 0) {
        for (int d = 1; d <= sweep_max_nd; ++d)
            for (int c = 0; c <= 2 * d; ++c) add_row(c, d);
    } else {
        add_row(nc, nd);
    }

    emit_config_line(out, cfg);
    auto& os = out.stream();
    if (out.format == Format::js) {
        json j{{"config", cfg}};
        j["rows"] = json::array();
        for (const auto& r : rows)
            j["rows"].push_back(json{{"nc", r.nc},
                                     {"nd", r.nd},
                                     {"ratio", rational_json(r.ratio)},
                                     {"capacity", rational_json(r.cap.value)},
                                     {"upper", rational_json(r.up.value)},
                                     {"branch", r.cap.branch}});
        os << j.dump(2) << "\n";
    } else if (out.format == Format::csv) {
        os << "nc,nd,ratio,capacity_num,capacity_den,branch_label\n";
        for (const auto& r : rows)
            os << r.nc << "," << r.nd << "," << r.ratio.str() << "," << r.cap.value.num() << ","
               << r.cap.value.den() << "," << r.cap.branch << "\n";
    } else {
        os << "nc\tnd\tratio\tcapacity\tupper\tbranch\n";
        for (const auto& r : rows)
            os << r.nc << "\t" << r.nd << "\t" << r.ratio.str() << "\t" << r.cap.value.str() << "\t"
               << r.up.value.str() << "\t" << r.cap.branch << "\n";
    }
    return 0;
}

int cmd_bounds_det(Output& out, int n11, int n12, int n21, int n22) {
    json cfg{{"command", "bounds-det"}, {"n11", n11}, {"n12", n12}, {"n21", n21}, {"n22", n22}};
    auto bounds = det_outer_bounds(DetParams{n11, n12, n21, n22});
    emit_config_line(out, cfg);
    auto& os = out.stream();
    if (out.format == Format::js) {
        json j{{"config", cfg}};
        j["bounds"] = json::array();
        for (const auto& b : bounds)
            j["bounds"].push_back(json{{"label", b.label}, {"rates", b.rate_subset}, {"value", b.value}});
        os << j.dump(2) << "\n";
    } else {
        if (out.format == Format::csv)
            os << "label,rates,value\n";
        else
            os << "label\trates\tvalue\n";
        char sep = out.format == Format::csv ? ',' : '\t';
        for (const auto& b : bounds) os << b.label << sep << b.rate_subset << sep << b.value << "\n";
    }
    return 0;
}

int cmd_bounds_gauss(Output& out, const GaussParams& g) {
    json cfg{{"command", "bounds-gauss"}, {"h11", g.h11}, {"h12", g.h12}, {"h21", g.h21},
             {"h22", g.h22}, {"p1", g.p1},   {"p2", g.p2}};
    auto etw = etw_outer_bounds(g);
    auto known = known_outer_bounds(g);
    emit_config_line(out, cfg);
    auto& os = out.stream();
    if (out.format == Format::js) {
        json j{{"config", cfg}};
        j["etw"] = json::array({etw[0], etw[1]});
        j["bounds"] = json::array();
        for (const auto& b : known)
            j["bounds"].push_back(json{{"label", b.label}, {"rates", b.rate_subset}, {"value", b.value}});
        os << j.dump(2) << "\n";
    } else {
        char sep = out.format == Format::csv ? ',' : '\t';
        if (out.format == Format::csv)
            os << "label,rates,bits\n";
        else
            os << "label\trates\tbits\n";
        os << "etw1" << sep << "sum" << sep << fmt_double(etw[0]) << "\n";
        os << "etw2" << sep << "sum" << sep << fmt_double(etw[1]) << "\n";
        for (const auto& b : known)
            os << b.label << sep << b.rate_subset << sep << fmt_double(b.value) << "\n";
    }
    return 0;
}

int cmd_gdof(Output& out, const std::string& alpha_text) {
    Rational alpha = parse_rational_flag(alpha_text);
    json cfg{{"command", "gdof"}, {"alpha", alpha.str()}};
    auto v = gdof(alpha);
    auto outer = gdof_outer(alpha);
    auto ic = gdof_ic(alpha);
    emit_config_line(out, cfg);
    auto& os = out.stream();
    if (out.format == Format::js) {
        json j{{"config", cfg},
               {"alpha", rational_json(alpha)},
               {"d", rational_json(v.value)},
               {"d_outer", rational_json(outer)},
               {"d_ic", rational_json(ic)},
               {"branch", v.branch}};
        os << j.dump(2) << "\n";
    } else if (out.format == Format::csv) {
        os << "alpha_num,alpha_den,d_num,d_den,branch\n";
        os << alpha.num() << "," << alpha.den() << "," << v.value.num() << "," << v.value.den() << ","
           << v.branch << "\n";
    } else {
        os << "alpha\td\td_outer\td_ic\tbranch\n";
        os << alpha.str() << "\t" << v.value.str() << "\t" << outer.str() << "\t" << ic.str() << "\t"
           << v.branch << "\n";
    }
    return 0;
}

int cmd_gdof_curve(Output& out, const std::string& step_text, const std::string& max_text) {
    Rational step = parse_rational_flag(step_text);
    Rational maxa = parse_rational_flag(max_text);
    if (!(Rational(0) < step)) throw std::invalid_argument("step must be positive");
    json cfg{{"command", "gdof-curve"}, {"step", step.str()}, {"max", maxa.str()}};

    emit_config_line(out, cfg);
    auto& os = out.stream();
    if (out.format == Format::js) {
        json j{{"config", cfg}};
        j["rows"] = json::array();
        for (Rational a(0); a <= maxa; a = a + step) {
            auto v = gdof(a);
            j["rows"].push_back(json{{"alpha", rational_json(a)},
                                     {"d", rational_json(v.value)},
                                     {"branch", v.branch},
                                     {"d_ic", rational_json(gdof_ic(a))}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << "alpha_num,alpha_den,d_num,d_den,branch,d_ic_num,d_ic_den\n";
        for (Rational a(0); a <= maxa; a = a + step) {
            auto v = gdof(a);
            auto ic = gdof_ic(a);
            os << a.num() << "," << a.den() << "," << v.value.num() << "," << v.value.den() << ","
               << v.branch << "," << ic.num() << "," << ic.den() << "\n";
        }
    }
    return 0;
}

json bit_matrix_json(const BitMatrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"row_hex", rows_to_hex(m)}};
}

json prime_matrix_json(const PrimeFieldMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c));
        entries.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"modulus", m.modulus()}, {"entries", entries}};
}

json certificate_json(const ValidationResult& v) {
    auto rx = [](const ReceiverCertificate& c) {
        return json{{"desired_cols", c.desired_cols},
                    {"rank_interference", c.rank_interference},
                    {"rank_full", c.rank_full},
                    {"ok", c.ok}};
    };
    return json{{"rx1", rx(v.rx1)}, {"rx2", rx(v.rx2)}, {"valid", v.valid}};
}

json rates_json(const RateTuple& r) {
    return json{{"r11", rational_json(r.r11)},
                {"r12", rational_json(r.r12)},
                {"r21", rational_json(r.r21)},
                {"r22", rational_json(r.r22)},
                {"sum", rational_json(r.sum())}};
}

template <class Field, class MatrixJson>
int precoder_common(Output& out, int nc, int nd, const Field& f, std::uint32_t field_size,
                    MatrixJson&& matrix_json) {
    json cfg{{"command", "precoder"}, {"nc", nc}, {"nd", nd}, {"field", field_size}};
    auto scheme = build_scheme(nc, nd, f);
    auto cert = validate_linear_scheme(SymDetParams{nc, nd}.to_det(), scheme, f);

    if (out.format == Format::js) {
        json j{{"config", cfg}};
        j["scheme"] = json{{"extension", scheme.extension},
                           {"q", scheme.q},
                           {"field", field_size},
                           {"rates", rates_json(scheme.rates)},
                           {"precoders", json{{"w11", matrix_json(scheme.p11)},
                                              {"w12", matrix_json(scheme.p12)},
                                              {"w21", matrix_json(scheme.p21)},
                                              {"w22", matrix_json(scheme.p22)}}}};
        j["certificates"] = certificate_json(cert);
        out.stream() << j.dump(2) << "\n";
    } else {
        emit_config_line(out, cfg);
        auto& os = out.stream();
        os << "extension\t" << scheme.extension << "\n";
        os << "sum_rate\t" << scheme.rates.sum().str() << "\n";
        os << "r11\t" << scheme.rates.r11.str() << "\tr12\t" << scheme.rates.r12.str() << "\tr21\t"
           << scheme.rates.r21.str() << "\tr22\t" << scheme.rates.r22.str() << "\n";
        os << "rx1_ranks\t" << cert.rx1.rank_full << "/" << cert.rx1.rank_interference << "\n";
        os << "rx2_ranks\t" << cert.rx2.rank_full << "/" << cert.rx2.rank_interference << "\n";
        os << "valid\t" << (cert.valid ? "yes" : "no") << "\n";
    }
    return cert.valid ? 0 : 1;
}

int cmd_precoder(Output& out, int nc, int nd, std::uint32_t field) {
    if (field == 2)
        return precoder_common(out, nc, nd, Gf2Field{}, 2, bit_matrix_json);
    return precoder_common(out, nc, nd, PrimeFieldCtx(field), field, prime_matrix_json);
}

int cmd_sweep_verify(Output& out, int max_nd, bool inject_fault) {
    json cfg{{"command", "sweep-verify"}, {"max_nd", max_nd}, {"inject_fault", inject_fault}};
    emit_config_line(out, cfg);
    auto& os = out.stream();

    Gf2Field f;
    SplitMix64 rng(1);
    int checked = 0, bad = 0;
    std::string first_bad;
    for (int nd = 1; nd <= max_nd; ++nd) {
        for (int nc = 0; nc <= 2 * nd; ++nc) {
            auto p = SymDetParams{nc, nd}.to_det();
            auto s = build_scheme(nc, nd, f);
            if (inject_fault && nd == std::max(1, max_nd / 2) && nc == 1 && s.p11.cols() > 0) {
                // negative control: clobber one precoder column
                s.p11.set(0, 0, !s.p11.get(0, 0));
                s.p11.set(std::min<std::size_t>(1, s.p11.rows() - 1), 0, false);
            }
            auto v = validate_linear_scheme(p, s, f);
            bool ok = v.valid && s.sum_rate() == sym_sum_capacity({nc, nd}).value;
            if (ok) {
                DetCodec<Gf2Field> codec(p, s, f);
                unsigned long long space = codec.total_symbols();
                if (space <= 12) {
                    for (unsigned long long i = 0; i < (1ull << space) && ok; ++i) {
                        auto msg = codec.messages_from_index(i);
                        ok = messages_equal(codec.roundtrip(msg), msg);
                    }
                } else {
                    for (int t = 0; t < 200 && ok; ++t) {
                        auto msg = codec.random_messages(rng);
                        ok = messages_equal(codec.roundtrip(msg), msg);
                    }
                }
            }
            ++checked;
            if (!ok) {
                ++bad;
                if (first_bad.empty())
                    first_bad = "nc=" + std::to_string(nc) + " nd=" + std::to_string(nd);
            }
        }
    }

    if (out.format == Format::js) {
        json j{{"config", cfg}, {"checked", checked}, {"failed", bad}};
        if (!first_bad.empty()) j["first_failure"] = first_bad;
        os << j.dump(2) << "\n";
    } else {
        os << "checked\t" << checked << "\nfailed\t" << bad << "\n";
        if (!first_bad.empty()) os << "first_failure\t" << first_bad << "\n";
    }
    return bad == 0 ? 0 : 1;
}

int cmd_simulate_det(Output& out, int nc, int nd, std::uint64_t trials, std::uint64_t seed,
                     bool exhaustive) {
    json cfg{{"command", "simulate-det"}, {"nc", nc},     {"nd", nd},
             {"trials", trials},          {"seed", seed}, {"exhaustive", exhaustive}};
    Gf2Field f;
    auto p = SymDetParams{nc, nd}.to_det();
    auto s = build_scheme(nc, nd, f);
    DetCodec<Gf2Field> codec(p, s, f);

    std::uint64_t ran = 0, errors = 0;
    if (exhaustive) {
        if (codec.total_symbols() > 24) throw std::invalid_argument("message space too large for --exhaustive");
        std::uint64_t space = 1ull << codec.total_symbols();
        for (std::uint64_t i = 0; i < space; ++i, ++ran) {
            auto m = codec.messages_from_index(i);
            if (!messages_equal(codec.roundtrip(m), m)) ++errors;
        }
    } else {
        SplitMix64 rng(seed);
        for (std::uint64_t i = 0; i < trials; ++i, ++ran) {
            auto m = codec.random_messages(rng);
            if (!messages_equal(codec.roundtrip(m), m)) ++errors;
        }
    }

    emit_config_line(out, cfg);
    auto& os = out.stream();
    if (out.format == Format::js) {
        json j{{"config", cfg},
               {"sum_rate", rational_json(s.sum_rate())},
               {"tuples", ran},
               {"errors", errors}};
        os << j.dump(2) << "\n";
    } else if (out.format == Format::csv) {
        os << "tuples,errors\n" << ran << "," << errors << "\n";
    } else {
        os << "sum_rate\t" << s.sum_rate().str() << "\ntuples\t" << ran << "\nerrors\t" << errors << "\n";
    }
    return errors == 0 ? 0 : 1;
}

int cmd_simulate_gauss(Output& out, int Q, int N, int nc, int nd, std::uint64_t trials,
                       std::uint64_t seed, bool noiseless, std::uint32_t field, bool nonzero,
                       int workers) {
    auto cfg = QaryConfig::make(Q, N, nc, nd, Rational(0), field, nonzero);
    json jcfg{{"command", "simulate-gauss"},
              {"Q", Q},
              {"N", N},
              {"nc", nc},
              {"nd", nd},
              {"trials", trials},
              {"seed", seed},
              {"noiseless", noiseless},
              {"p", cfg.p},
              {"nonzero_digits", nonzero},
              {"workers", workers}};
    PrimeFieldCtx f(cfg.p);
    auto s = build_scheme(N * nc, N * nd, f);
    auto rep = run_monte_carlo(cfg, s, trials, seed, noiseless, workers);

    emit_config_line(out, jcfg);
    auto& os = out.stream();
    if (out.format == Format::js) {
        json j{{"config", jcfg}};
        j["levels"] = json::array();
        for (std::size_t k = 0; k < rep.level_errors.size(); ++k)
            j["levels"].push_back(json{{"level_k", k},
                                       {"errors", rep.level_errors[k]},
                                       {"trials", rep.trials},
                                       {"p_hat", rep.p_hat(k)},
                                       {"wilson_upper", rep.wilson_upper(k)}});
        j["mean_power_tx1"] = rep.mean_power_tx1;
        j["mean_power_tx2"] = rep.mean_power_tx2;
        os << j.dump(2) << "\n";
    } else {
        os << "level_k,errors,trials,p_hat,wilson_upper\n";
        for (std::size_t k = 0; k < rep.level_errors.size(); ++k)
            os << k << "," << rep.level_errors[k] << "," << rep.trials << "," << fmt_double(rep.p_hat(k))
               << "," << fmt_double(rep.wilson_upper(k)) << "\n";
        os << "# mean_power_tx1=" << fmt_double(rep.mean_power_tx1)
           << " mean_power_tx2=" << fmt_double(rep.mean_power_tx2) << "\n";
    }
    return 0;
}

int cmd_noisy_check(Output& out, const GaussParams& g) {
    json cfg{{"command", "noisy-check"}, {"h11", g.h11}, {"h12", g.h12}, {"h21", g.h21},
             {"h22", g.h22}, {"p1", g.p1},   {"p2", g.p2}};
    auto v = noisy_verdict(g);
    json j{{"config", cfg}, {"regime", noisy_regime_name(v.regime)}};
    if (v.sum_capacity) j["sum_capacity_bits"] = *v.sum_capacity;
    j["weak_tested"] = v.weak_tested;
    j["strong_tested"] = v.strong_tested;
    if (v.weak_tested) j["weak_lhs"] = v.weak_lhs;
    if (v.strong_tested) j["strong_lhs"] = v.strong_lhs;
    out.stream() << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"X channel capacity, alignment and simulation toolkit"};
    app.require_subcommand(1);

    Output out;
    std::string format_text = "table", out_path, config_path;
    app.add_option("--format", format_text, "table, csv or json")->capture_default_str();
    app.add_option("--out", out_path, "write output to a file (relative to $XCHAN_OUTPUT_DIR)");
    app.add_option("--config", config_path, "JSON file with default sweep/curve parameters");

    int nc = 0, nd = 0, n11 = 0, n12 = 0, n21 = 0, n22 = 0;
    int sweep_max_nd = 0, max_nd = 20, Q = 17, N = 1, workers = 1;
    std::uint32_t field = 2, qfield = 0;
    std::uint64_t trials = 1000, seed = 1;
    bool inject_fault = false, exhaustive = false, noiseless = false, nonzero = false, as_json = false;
    double h11 = 0, h12 = 0, h21 = 0, h22 = 0, p1 = 0, p2 = 0;
    std::string alpha_text = "1", step_text = "1/12", max_text = "3";

    auto* capacity = app.add_subcommand("capacity", "symmetric sum capacity and upper bound");
    capacity->add_option("--nc", nc);
    capacity->add_option("--nd", nd);
    capacity->add_option("--sweep-max-nd", sweep_max_nd, "emit the whole table up to this nd");

    auto* bounds_det = app.add_subcommand("bounds-det", "deterministic rate-sum bounds");
    bounds_det->add_option("--n11", n11)->required();
    bounds_det->add_option("--n12", n12)->required();
    bounds_det->add_option("--n21", n21)->required();
    bounds_det->add_option("--n22", n22)->required();

    auto add_gauss_flags = [&](CLI::App* cmd) {
        cmd->add_option("--h11", h11)->required();
        cmd->add_option("--h12", h12)->required();
        cmd->add_option("--h21", h21)->required();
        cmd->add_option("--h22", h22)->required();
        cmd->add_option("--p1", p1)->required();
        cmd->add_option("--p2", p2)->required();
    };
    auto* bounds_gauss = app.add_subcommand("bounds-gauss", "Gaussian sum-rate bounds (bits/use)");
    add_gauss_flags(bounds_gauss);

    auto* gdof_cmd = app.add_subcommand("gdof", "generalized degrees of freedom at one exponent");
    gdof_cmd->add_option("--alpha", alpha_text, "rational like 4/3, or decimal")->required();

    auto* curve = app.add_subcommand("gdof-curve", "GDOF curve with the two-message benchmark");
    curve->add_option("--step", step_text, "rational grid step");
    curve->add_option("--max", max_text, "largest exponent");

    auto* precoder = app.add_subcommand("precoder", "build and certify an alignment scheme");
    precoder->add_option("--nc", nc)->required();
    precoder->add_option("--nd", nd)->required();
    precoder->add_option("--field", field, "prime field for the precoders");
    precoder->add_flag("--json", as_json, "shorthand for --format json");

    auto* sweep = app.add_subcommand("sweep-verify", "validate schemes against the capacity formula");
    sweep->add_option("--max-nd", max_nd);
    sweep->add_flag("--inject-fault", inject_fault, "negative control: corrupt one precoder");

    auto* sim_det = app.add_subcommand("simulate-det", "deterministic-channel roundtrips");
    sim_det->add_option("--nc", nc)->required();
    sim_det->add_option("--nd", nd)->required();
    sim_det->add_option("--trials", trials);
    sim_det->add_option("--seed", seed);
    sim_det->add_flag("--exhaustive", exhaustive);

    auto* sim_gauss = app.add_subcommand("simulate-gauss", "Q-ary lifting on the Gaussian channel");
    sim_gauss->add_option("--Q", Q)->required();
    sim_gauss->add_option("--N", N)->required();
    sim_gauss->add_option("--nc", nc)->required();
    sim_gauss->add_option("--nd", nd)->required();
    sim_gauss->add_option("--trials", trials)->required();
    sim_gauss->add_option("--seed", seed)->required();
    sim_gauss->add_flag("--noiseless", noiseless);
    sim_gauss->add_option("--field", qfield, "digit field prime (default: largest prime <= (Q-1)/4)");
    sim_gauss->add_flag("--nonzero-digits", nonzero, "map field symbols into {1..p}");
    sim_gauss->add_option("--workers", workers);

    auto* noisy = app.add_subcommand("noisy-check", "treating-interference-as-noise verdict (json)");
    add_gauss_flags(noisy);

    // allow the global --format/--out/--config to appear after the subcommand
    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (format_text == "table")
            out.format = Format::table;
        else if (format_text == "csv")
            out.format = Format::csv;
        else if (format_text == "json")
            out.format = Format::js;
        else
            throw std::invalid_argument("unknown format: " + format_text);
        if (as_json) out.format = Format::js;
        out.out_path = resolve_out_path(out_path);

        json file_cfg = load_config_file(config_path);
        if (file_cfg.contains("sweep_verify") && sweep->count("--max-nd") == 0)
            max_nd = file_cfg["sweep_verify"].value("max_nd", max_nd);
        if (file_cfg.contains("gdof_curve")) {
            if (curve->count("--step") == 0)
                step_text = file_cfg["gdof_curve"].value("step", step_text);
            if (curve->count("--max") == 0) max_text = file_cfg["gdof_curve"].value("max", max_text);
        }

        if (capacity->parsed()) {
            if (sweep_max_nd == 0 &&
                (capacity->count("--nc") == 0 || capacity->count("--nd") == 0))
                throw std::invalid_argument("capacity needs --nc and --nd (or --sweep-max-nd)");
            if (sweep_max_nd == 0 && nc == 0 && nd == 0)
                throw std::invalid_argument("degenerate channel: nc = nd = 0");
            return cmd_capacity(out, nc, nd, sweep_max_nd);
        }
        if (bounds_det->parsed()) return cmd_bounds_det(out, n11, n12, n21, n22);
        if (bounds_gauss->parsed()) return cmd_bounds_gauss(out, GaussParams{h11, h12, h21, h22, p1, p2});
        if (gdof_cmd->parsed()) return cmd_gdof(out, alpha_text);
        if (curve->parsed()) return cmd_gdof_curve(out, step_text, max_text);
        if (precoder->parsed()) return cmd_precoder(out, nc, nd, field);
        if (sweep->parsed()) return cmd_sweep_verify(out, max_nd, inject_fault);
        if (sim_det->parsed()) return cmd_simulate_det(out, nc, nd, trials, seed, exhaustive);
        if (sim_gauss->parsed())
            return cmd_simulate_gauss(out, Q, N, nc, nd, trials, seed, noiseless, qfield, nonzero,
                                      workers);
        if (noisy->parsed()) return cmd_noisy_check(out, GaussParams{h11, h12, h21, h22, p1, p2});
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
