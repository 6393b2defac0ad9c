// tensorwalk: separation / total-variation curves, cutoff profiles, route
// cross-checks and Monte Carlo occupancy records for the tensor-product walks
// on Irr(S_n) and Irr(GL(n,q)).
//
// Exit codes: 0 all checks pass, 1 a consistency check failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tensorwalk/tensorwalk.hpp"

using namespace tensorwalk;
using json = nlohmann::ordered_json;

namespace {

constexpr int kClosedFormMaxN = 512;

struct RunConfig {
    std::string command;
    int n = 0;
    std::optional<long> q;
    std::optional<int> r_max;
    std::vector<int> n_list{128, 256, 512};
    std::vector<double> c_list{-1, 0, 1, 2};
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0x5eed2026ULL;
    unsigned streams = 1;
    std::string format = "csv";
    std::string out;
};

std::string fraction(const ExactScalar& x) { return to_fraction_string(x); }

json exact_fields(const std::string& name, const ExactScalar& x) {
    json j;
    j[name + "_exact"] = fraction(x);
    j[name + "_float"] = to_double(x);
    return j;
}

// ---- curves ---------------------------------------------------------------

void emit_curve(std::ostream& os, const RunConfig& cfg, const SeparationCurve& curve, const std::string& name) {
    if (cfg.format == "csv") {
        write_curve_csv(os, curve, name);
        return;
    }
    json j;
    j["n"] = curve.n;
    if (curve.q) j["q"] = *curve.q;
    j["records"] = json::array();
    for (const auto& rec : curve.records) {
        json row{{"r", rec.r}};
        row.update(exact_fields(name, rec.value));
        row["route"] = rec.route;
        j["records"].push_back(row);
    }
    os << j.dump(2) << '\n';
}

int default_rmax(const RunConfig& cfg, int factor) { return cfg.r_max.value_or(factor * cfg.n); }

/// Each route is computed on its own so a disagreement can be reported
/// value by value instead of as a single thrown message.
bool sn_sep_curve(const RunConfig& cfg, SeparationCurve& curve) {
    const int n = cfg.n;
    const int rmax = default_rmax(cfg, 4);
    curve.n = n;
    bool ok = true;
    if (n > max_multi_route_n()) {
        for (int r = 0; r <= rmax; ++r) curve.records.push_back({r, separation_closed_form(n, r), "closed"});
        return ok;
    }
    SnWalk walk(n);
    const auto eigs = EigenvalueList::from(spectrum_sn(n));
    for (int r = 0; r <= rmax; ++r) {
        const auto& law = walk.law(r);
        ExactScalar kernel_route(0);
        for (std::size_t s = 0; s < law.size(); ++s) {
            const ExactScalar gap = 1 - law[s] / walk.kernel().stationary[s];
            if (gap > kernel_route) kernel_route = gap;
        }
        const ExactScalar occupancy = separation_by_occupancy(n, r);
        const ExactScalar closed = separation_closed_form(n, r);
        const ExactScalar spectral = separation_from_spectrum(eigs, r);
        if (kernel_route == closed && occupancy == closed && spectral == closed) {
            curve.records.push_back({r, closed, "kernel+occupancy+closed+spectral"});
        } else {
            ok = false;
            std::cerr << "route mismatch n=" << n << " r=" << r << ": kernel " << fraction(kernel_route)
                      << ", occupancy " << fraction(occupancy) << ", closed " << fraction(closed) << ", spectral "
                      << fraction(spectral) << '\n';
            curve.records.push_back({r, closed, "mismatch"});
        }
    }
    return ok;
}

bool gl_sep_curve(const RunConfig& cfg, SeparationCurve& curve) {
    const int n = cfg.n;
    const long q = *cfg.q;
    reject_gl12(n, q);
    curve.n = n;
    curve.q = q;
    const auto eigs = EigenvalueList::from(gl_spectrum(n, q));
    bool ok = true;
    for (int r = 0; r <= default_rmax(cfg, 3); ++r) {
        const ExactScalar closed = gl_separation_closed_form(n, q, r);
        const ExactScalar span = 1 - qspan_exact(n, r, n, q);
        const ExactScalar spectral = separation_from_spectrum(eigs, r);
        if (span == closed && spectral == closed) {
            curve.records.push_back({r, closed, "closed+span+spectral"});
        } else {
            ok = false;
            std::cerr << "route mismatch n=" << n << " q=" << q << " r=" << r << ": closed " << fraction(closed)
                      << ", span " << fraction(span) << ", spectral " << fraction(spectral) << '\n';
            curve.records.push_back({r, closed, "mismatch"});
        }
    }
    return ok;
}

bool cmd_sn_sep(const RunConfig& cfg, std::ostream& os) {
    if (cfg.n < 2 || cfg.n > kClosedFormMaxN) {
        throw invalid_input_error("sn-sep: n must lie in 2.." + std::to_string(kClosedFormMaxN));
    }
    SeparationCurve curve;
    const bool ok = sn_sep_curve(cfg, curve);
    emit_curve(os, cfg, curve, "s");
    return ok;
}

bool cmd_sn_tv(const RunConfig& cfg, std::ostream& os) {
    if (cfg.n < 2) throw invalid_input_error("sn-tv: n must be at least 2");
    SnWalk walk(cfg.n);
    SeparationCurve curve;
    curve.n = cfg.n;
    for (int r = 0; r <= default_rmax(cfg, 4); ++r) curve.records.push_back({r, walk.total_variation(r), "kernel"});
    emit_curve(os, cfg, curve, "tv");
    return true;
}

bool cmd_gl_sep(const RunConfig& cfg, std::ostream& os) {
    if (!cfg.q) throw invalid_input_error("gl-sep: --q is required");
    if (cfg.n < 1) throw invalid_input_error("gl-sep: n must be at least 1");
    if (*cfg.q < 2) throw invalid_input_error("gl-sep: q must be at least 2");
    SeparationCurve curve;
    const bool ok = gl_sep_curve(cfg, curve);
    emit_curve(os, cfg, curve, "s");
    return ok;
}

// ---- profile --------------------------------------------------------------

bool cmd_profile(const RunConfig& cfg, std::ostream& os) {
    json records = json::array();
    if (cfg.format == "csv") os << "n,c,r,s_exact,s_float,profile,scaled_error\n";
    for (int n : cfg.n_list) {
        if (n < 2 || n > kClosedFormMaxN) throw invalid_input_error("profile: n must lie in 2.." + std::to_string(kClosedFormMaxN));
        for (double c : cfg.c_list) {
            const double logn = std::log(static_cast<double>(n));
            const double t = n * logn + c * n;
            if (t < 0) throw invalid_input_error("profile: n ln n + c n is negative");
            const int r = static_cast<int>(std::ceil(t));
            const ExactScalar s = separation_closed_form(n, r);
            const double limit = separation_profile(c);
            const double scaled = std::abs(to_double(s) - limit) * n / logn;
            if (cfg.format == "csv") {
                os << n << ',' << format_double(c) << ',' << r << ',' << fraction(s) << ',' << format_double(to_double(s))
                   << ',' << format_double(limit) << ',' << format_double(scaled) << '\n';
            } else {
                json row{{"n", n}, {"c", c}, {"r", r}};
                row.update(exact_fields("s", s));
                row["profile"] = limit;
                row["scaled_error"] = scaled;
                records.push_back(row);
            }
        }
    }
    if (cfg.format == "json") os << json{{"records", records}}.dump(2) << '\n';
    return true;
}

// ---- occupancy ------------------------------------------------------------

bool cmd_occupancy(const RunConfig& cfg, std::ostream& os) {
    const int n = cfg.n;
    const int r = cfg.r_max.value_or(n);
    if (n < 1 || r < 0) throw invalid_input_error("occupancy: need n >= 1 and r >= 0");
    if (cfg.samples < 1) throw invalid_input_error("occupancy: samples must be positive");
    const auto hist = cfg.q ? qspan_mc_histogram(r, n, *cfg.q, cfg.samples, cfg.seed, cfg.streams)
                            : occupancy_mc_histogram(r, n, cfg.samples, cfg.seed, cfg.streams);
    bool ok = true;
    json records = json::array();
    if (cfg.format == "csv") {
        os << "a,r,p_exact,p_float,mc_hits,mc_estimate,standard_error,within_4se";
        if (cfg.q) os << ",q";
        os << '\n';
    }
    for (int a = 0; a <= n; ++a) {
        const ExactScalar exact = cfg.q ? qspan_exact(a, r, n, *cfg.q) : occupancy_exact(a, r, n);
        const McEstimate est{hist[static_cast<std::size_t>(a)], cfg.samples};
        const double p = to_double(exact);
        // standard error under the exact p, so degenerate p demands an exact hit count
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(cfg.samples));
        const bool within = std::abs(est.estimate() - p) <= 4 * se;
        ok = ok && within;
        if (cfg.format == "csv") {
            os << a << ',' << r << ',' << fraction(exact) << ',' << format_double(p) << ',' << est.hits << ','
               << format_double(est.estimate()) << ',' << format_double(se) << ',' << (within ? "true" : "false");
            if (cfg.q) os << ',' << *cfg.q;
            os << '\n';
        } else {
            json row{{"a", a}, {"r", r}};
            row.update(exact_fields("p", exact));
            row["mc_hits"] = est.hits;
            row["mc_estimate"] = est.estimate();
            row["standard_error"] = se;
            row["within_4se"] = within;
            if (cfg.q) row["q"] = *cfg.q;
            records.push_back(row);
        }
    }
    if (cfg.format == "json") {
        json j{{"n", n}, {"samples", cfg.samples}, {"seed", cfg.seed}, {"streams", cfg.streams}, {"records", records}};
        os << j.dump(2) << '\n';
    }
    return ok;
}

// ---- crosscheck -----------------------------------------------------------

struct Check {
    std::string name;
    std::function<bool()> run;
};

std::vector<Check> sn_checks(int n) {
    auto walk = std::make_shared<SnWalk>(n);
    std::vector<Check> checks;
    checks.push_back({"kernel-routes", [n] {
                          const auto boxes = build_kernel_boxes(n);
                          return boxes.rows_sum_to_one() && boxes.detailed_balance();
                      }});
    checks.push_back({"separation-routes", [n] {
                          RunConfig cfg;
                          cfg.n = n;
                          SeparationCurve curve;
                          return sn_sep_curve(cfg, curve);
                      }});
    checks.push_back({"extremality", [walk, n] {
                          for (int r = 0; r <= 4 * n; ++r) {
                              const auto mins = walk->minimizers(r);
                              if (std::find(mins.begin(), mins.end(), walk->sign_index()) == mins.end()) return false;
                          }
                          return true;
                      }});
    checks.push_back({"fixed-point-sums", [walk, n] {
                          for (const auto& lambda : walk->table().irreps()) {
                              for (int i = 0; i <= n; ++i) fixed_point_character_sum(walk->table(), lambda, i);
                          }
                          return true;
                      }});
    checks.push_back({"signed-fixed-point-sum", [n] {
                          std::vector<BigInt> sums(static_cast<std::size_t>(n + 1));
                          for (const auto& c : conjugacy_classes(n)) sums[static_cast<std::size_t>(c.fixed_points)] += c.class_size * c.sign;
                          for (int i = 0; i <= n; ++i) {
                              if (signed_fixed_point_sum(n, i) != sums[static_cast<std::size_t>(i)]) return false;
                          }
                          return true;
                      }});
    checks.push_back({"ratio-routes", [walk, n] {
                          for (int r = 0; r <= 4 * n; ++r) {
                              for (const auto& lambda : walk->kernel().states) walk->ratio_at(r, lambda);
                          }
                          return true;
                      }});
    checks.push_back({"nonnegative-terms", [walk, n] {
                          for (int r = 0; r <= 4 * n; ++r) {
                              for (std::size_t s = 0; s < walk->kernel().size(); ++s) {
                                  for (const auto& t : walk->nonnegative_terms(r, s)) {
                                      if (t < 0) return false;
                                  }
                              }
                          }
                          return true;
                      }});
    checks.push_back({"tensor-power", [walk] {
                          for (int r = 0; r <= 12; ++r) {
                              for (const auto& lambda : walk->kernel().states) walk->tensor_power_multiplicity(r, lambda);
                          }
                          return true;
                      }});
    checks.push_back({"eigenfunctions", [walk, n] {
                          const auto& t = walk->table();
                          const auto& k = walk->kernel();
                          for (std::size_t c = 0; c < t.classes().size(); ++c) {
                              ExactMatrix g(k.size(), 1);
                              for (std::size_t s = 0; s < k.size(); ++s) g(s, 0) = make_rational(t(s, c), t.dimension(s));
                              const ExactMatrix kg = k.matrix * g;
                              const ExactScalar beta = make_rational(t.classes()[c].fixed_points, n);
                              for (std::size_t s = 0; s < k.size(); ++s) {
                                  if (kg(s, 0) != beta * g(s, 0)) return false;
                              }
                          }
                          return true;
                      }});
    checks.push_back({"distance", [walk, n] {
                          const auto& k = walk->kernel();
                          return verify_distance(k, walk->trivial_index(), walk->sign_index(),
                                                 EigenvalueList::from(spectrum_sn(n))) == n - 1;
                      }});
    checks.push_back({"tv-below-separation", [walk, n] {
                          for (int r = 0; r <= 4 * n; ++r) {
                              if (walk->total_variation(r) > walk->separation(r)) return false;
                          }
                          return true;
                      }});
    return checks;
}

std::vector<Check> gl_checks(int n, long q) {
    std::vector<Check> checks;
    checks.push_back({"separation-routes", [n, q] {
                          RunConfig cfg;
                          cfg.n = n;
                          cfg.q = q;
                          SeparationCurve curve;
                          if (!gl_sep_curve(cfg, curve)) return false;
                          for (const auto& rec : curve.records) {
                              if (rec.r < n && rec.value != 1) return false;
                          }
                          return true;
                      }});
    checks.push_back({"bounds", [n, q] {
                          for (int c = 0; c <= 6; ++c) {
                              if (!gl_bounds_hold(n, q, c)) return false;
                          }
                          return true;
                      }});
    checks.push_back({"alternating-terms", [n, q] {
                          for (int r = n; r <= 3 * n; ++r) {
                              ExactScalar prev(-1);
                              for (int b = 1; b <= n; ++b) {
                                  const ExactScalar term =
                                      pow_exact(ExactScalar(q), static_cast<long>(b) * (b - 1) / 2 - static_cast<long>(r) * b) *
                                      ExactScalar(q_binomial(n, b, q));
                                  if (b > 1 && term >= prev) return false;
                                  prev = term;
                              }
                          }
                          return true;
                      }});
    checks.push_back({"unit-avoiding-families", [n, q] { return count_gl_families(n, q, true) > 0; }});
    return checks;
}

bool cmd_crosscheck(const RunConfig& cfg, std::ostream& os) {
    std::vector<Check> checks;
    if (cfg.q) {
        reject_gl12(cfg.n, *cfg.q);
        checks = gl_checks(cfg.n, *cfg.q);
    } else {
        if (cfg.n < 2) throw invalid_input_error("crosscheck: n must be at least 2");
        check_size_limit(cfg.n, "crosscheck");
        checks = sn_checks(cfg.n);
    }
    bool all = true;
    json records = json::array();
    if (cfg.format == "csv") os << "check,status,detail\n";
    for (const auto& check : checks) {
        bool pass = false;
        std::string detail;
        try {
            pass = check.run();
        } catch (const consistency_error& e) {
            detail = e.what();
        }
        all = all && pass;
        if (cfg.format == "csv") {
            os << check.name << ',' << (pass ? "pass" : "FAIL") << ",\"" << detail << "\"\n";
        } else {
            records.push_back({{"check", check.name}, {"status", pass ? "pass" : "FAIL"}, {"detail", detail}});
        }
    }
    if (cfg.format == "json") {
        json j{{"n", cfg.n}};
        if (cfg.q) j["q"] = *cfg.q;
        j["checks"] = records;
        j["all_pass"] = all;
        os << j.dump(2) << '\n';
    }
    return all;
}

// ---- spectrum / chartable -------------------------------------------------

bool cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
    const Spectrum s = cfg.q ? gl_spectrum(cfg.n, *cfg.q) : spectrum_sn(cfg.n);
    if (cfg.format == "csv") {
        os << "eigenvalue_exact,eigenvalue_float,multiplicity\n";
        for (const auto& e : s.entries) {
            os << fraction(e.eigenvalue) << ',' << format_double(to_double(e.eigenvalue)) << ','
               << (e.multiplicity ? e.multiplicity->get_str() : std::string()) << '\n';
        }
        return true;
    }
    json entries = json::array();
    for (const auto& e : s.entries) {
        json row = exact_fields("eigenvalue", e.eigenvalue);
        row["multiplicity"] = e.multiplicity ? json(e.multiplicity->get_str()) : json(nullptr);
        entries.push_back(row);
    }
    json j{{"n", cfg.n}};
    if (cfg.q) j["q"] = *cfg.q;
    j["eigenvalues"] = entries;
    os << j.dump(2) << '\n';
    return true;
}

bool cmd_chartable(const RunConfig& cfg, std::ostream& os) {
    const auto t = character_table(cfg.n);
    if (cfg.format == "csv") {
        t.write_csv(os);
        return true;
    }
    json j{{"n", cfg.n}, {"classes", json::array()}, {"rows", json::array()}};
    for (const auto& c : t.classes()) j["classes"].push_back(c.cycle_type.to_string());
    for (std::size_t r = 0; r < t.irreps().size(); ++r) {
        json values = json::array();
        for (std::size_t c = 0; c < t.classes().size(); ++c) values.push_back(t(r, c));
        j["rows"].push_back({{"lambda", t.irreps()[r].to_string()}, {"values", values}});
    }
    os << j.dump(2) << '\n';
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact separation and total-variation distances for tensor-product walks on Irr(S_n) and Irr(GL(n,q))"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&cfg](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    };
    auto add_q = [&cfg](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--q", cfg.q, "Field size q >= 2");
        if (required) opt->required();
    };

    auto* sn_sep = app.add_subcommand("sn-sep", "S_n separation curve s(0..rmax), all routes for small n");
    sn_sep->add_option("--n", cfg.n, "Group degree")->required();
    sn_sep->add_option("--rmax", cfg.r_max, "Largest step count (default 4n)");
    add_format(sn_sep);

    auto* sn_tv = app.add_subcommand("sn-tv", "S_n total-variation curve from exact kernel powers");
    sn_tv->add_option("--n", cfg.n, "Group degree")->required();
    sn_tv->add_option("--rmax", cfg.r_max, "Largest step count (default 4n)");
    add_format(sn_tv);

    auto* gl_sep = app.add_subcommand("gl-sep", "GL(n,q) separation curve s(0..rmax)");
    gl_sep->add_option("--n", cfg.n, "Matrix size")->required();
    add_q(gl_sep, true);
    gl_sep->add_option("--rmax", cfg.r_max, "Largest step count (default 3n)");
    add_format(gl_sep);

    auto* profile = app.add_subcommand("profile", "Finite-n separation at r = ceil(n ln n + cn) against the limit profile");
    profile->add_option("--n", cfg.n_list, "Group degrees")->capture_default_str();
    profile->add_option("--c", cfg.c_list, "Window offsets c")->capture_default_str();
    add_format(profile);

    auto* occupancy = app.add_subcommand("occupancy", "Exact occupancy law against Monte Carlo (span dimension with --q)");
    occupancy->add_option("--n", cfg.n, "Number of boxes, or vector-space dimension with --q")->required();
    occupancy->add_option("--rmax", cfg.r_max, "Number of balls / vectors r (default n)");
    add_q(occupancy, false);
    occupancy->add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str();
    occupancy->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
    occupancy->add_option("--streams", cfg.streams, "Independent streams")->check(CLI::Range(1U, 256U))->capture_default_str();
    add_format(occupancy);

    auto* crosscheck = app.add_subcommand("crosscheck", "Run every route-equality check and print a pass/fail table");
    crosscheck->add_option("--n", cfg.n, "Group degree or matrix size")->required();
    add_q(crosscheck, false);
    add_format(crosscheck);

    auto* spectrum = app.add_subcommand("spectrum", "Distinct eigenvalues (with multiplicities for S_n)");
    spectrum->add_option("--n", cfg.n, "Group degree or matrix size")->required();
    add_q(spectrum, false);
    add_format(spectrum);

    auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
    chartable->add_option("--n", cfg.n, "Group degree")->required();
    add_format(chartable);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    const std::map<std::string, std::function<bool(const RunConfig&, std::ostream&)>> commands{
        {"sn-sep", cmd_sn_sep},       {"sn-tv", cmd_sn_tv},         {"gl-sep", cmd_gl_sep},
        {"profile", cmd_profile},     {"occupancy", cmd_occupancy}, {"crosscheck", cmd_crosscheck},
        {"spectrum", cmd_spectrum},   {"chartable", cmd_chartable},
    };

    std::ostringstream buffer;
    bool ok = false;
    try {
        ok = commands.at(cfg.command)(cfg, buffer);
    } catch (const consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (cfg.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            std::cerr << cfg.command << ": cannot open " << cfg.out << '\n';
            return 2;
        }
        file << buffer.str();
    }
    return ok ? 0 : 1;
}
