// nilbohr: a command-line laboratory for windowed Bohr-type return sets,
// difference/sumset/gap-sum generators, the greedy gap-sum avoider and
// brute-force dual-class checks.
//
// Exit codes: 0 success or verdict "holds"; 2 mathematically negative
// outcome (refuted / Stuck / NotFound / nonempty intersection); 1 usage
// or tool error. Every run is fully determined by (command, params, seed).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilbohr/checkers.hpp"
#include "nilbohr/constructions.hpp"
#include "nilbohr/csv.hpp"
#include "nilbohr/dynamics.hpp"
#include "nilbohr/errors.hpp"
#include "nilbohr/setcore.hpp"
#include "nilbohr/setio.hpp"

namespace {

using namespace nilbohr;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

Interval parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw PreconditionViolated("window must be 'lo:hi', got '" + text + "'");
    try {
        std::int64_t lo = std::stoll(text.substr(0, colon));
        std::int64_t hi = std::stoll(text.substr(colon + 1));
        if (hi < lo) throw PreconditionViolated("window hi < lo");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw PreconditionViolated("bad window '" + text + "'");
    } catch (const std::out_of_range&) {
        throw PreconditionViolated("bad window '" + text + "'");
    }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw PreconditionViolated("empty entry in list '" + text + "'");
        out.push_back(std::stoll(tok));
    }
    if (out.empty()) throw PreconditionViolated("empty integer list");
    return out;
}

std::vector<Interval> parse_interval_list(const std::string& text) {
    std::vector<Interval> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_window(tok));
    if (out.empty()) throw PreconditionViolated("empty interval list");
    return out;
}

// Canonical run identity: command plus ordered key=value params. The
// params hash in reports is the FNV-1a of this string.
struct RunId {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;

    void add(const std::string& key, const std::string& value) { params.push_back({key, value}); }
    std::string canonical() const {
        std::string s = command;
        for (const auto& [k, v] : params) s += "|" + k + "=" + v;
        return s;
    }
    std::string hash() const { return fnv1a_hex(canonical()); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

// procedure,params-hash,steps-completed,verdict,witness
std::string report_csv(const RunId& id, std::int64_t steps, const std::string& verdict,
                       const std::string& witness) {
    return "procedure,params_hash,steps_completed,verdict,witness\n" +
           csv_row({id.command, id.hash(), std::to_string(steps), verdict, witness});
}

int cmd_gen_bohr(const std::vector<std::string>& alphas, const std::vector<std::string>& radii,
                 const std::vector<std::string>& centers, const std::string& window_text,
                 const std::string& out) {
    Interval window = parse_window(window_text);
    if (radii.size() != 1 && radii.size() != alphas.size())
        throw PreconditionViolated("need one --radius or one per --alpha");
    if (!centers.empty() && centers.size() != alphas.size())
        throw PreconditionViolated("need no --center or one per --alpha");
    std::vector<TorusAngle> angles;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        angles.push_back(parse_angle(alphas[i]));
        Rational radius = parse_rational(radii.size() == 1 ? radii[0] : radii[i]);
        TorusAngle center = centers.empty() ? TorusAngle() : parse_angle(centers[i]);
        arcs.emplace_back(center, radius);
    }
    WindowedSet result = bohr_set(BohrTarget(std::move(angles), std::move(arcs)), window);
    save_set_file(result, out);
    std::cout << "gen-bohr: " << result.count() << " members in [" << window.lo << ","
              << window.hi << ") -> " << out << "\n";
    return kExitOk;
}

int cmd_gen_poly(const std::string& alpha, const std::string& radius, std::int64_t c2,
                 std::int64_t c1, std::int64_t c0, const std::string& window_text,
                 const std::string& out) {
    Interval window = parse_window(window_text);
    PolyTarget target(parse_angle(alpha), c2, c1, c0, parse_rational(radius));
    WindowedSet result = poly_return_set(target, window);
    save_set_file(result, out);
    std::cout << "gen-poly: " << result.count() << " members in [" << window.lo << ","
              << window.hi << ") -> " << out << "\n";
    return kExitOk;
}

int cmd_gen_shd(const std::string& p_text, int d, std::int64_t cap, const std::string& out) {
    GapSumSpec spec(parse_int_list(p_text), d);
    WindowedSet result = sh_d(spec, cap);
    save_set_file(result, out);
    std::cout << "gen-shd: " << result.count() << " members in [1," << cap + 1 << ") -> " << out
              << "\n";
    return kExitOk;
}

int cmd_avoid(const std::string& b_file, int d, int steps, const std::string& policy_name,
              std::int64_t threshold, std::uint64_t seed, const std::string& out,
              const std::string& p_out) {
    WindowedSet b = load_set_file(b_file);
    ChoicePolicy policy;
    if (policy_name == "smallest") {
        policy = ChoicePolicy::smallest();
    } else if (policy_name == "above") {
        policy = ChoicePolicy::smallest_above(threshold);
    } else if (policy_name == "random") {
        policy = ChoicePolicy::random_seeded(seed);
    } else {
        throw PreconditionViolated("policy must be smallest|above|random");
    }

    RunId id{"avoid", {}};
    id.add("b", b_file);
    id.add("d", std::to_string(d));
    id.add("steps", std::to_string(steps));
    id.add("policy", policy_name);
    id.add("threshold", std::to_string(threshold));
    id.add("seed", std::to_string(seed));

    auto outcome = avoider_run(b, d, steps, policy);
    if (std::holds_alternative<Stuck>(outcome)) {
        const Stuck& stuck = std::get<Stuck>(outcome);
        write_file(out, report_csv(id, static_cast<std::int64_t>(stuck.partial_p.size()),
                                   "STUCK@" + std::to_string(stuck.at_step),
                                   join_ints(stuck.partial_p)));
        std::cout << "avoid: stuck at step " << stuck.at_step << " after P="
                  << join_ints(stuck.partial_p) << " -> " << out << "\n";
        return kExitNegative;
    }
    const AvoiderReport& report = std::get<AvoiderReport>(outcome);
    write_file(out, report_csv(id, report.steps_completed, report.verified ? "PASS" : "FAIL",
                               join_ints(report.p)));
    if (!p_out.empty()) write_file(p_out, join_ints(report.p) + "\n");
    std::cout << "avoid: P=" << join_ints(report.p) << " verdict=PASS (" << report.sums_checked
              << " gap-sums inside B) -> " << out << "\n";
    return kExitOk;
}

int cmd_counterexample(const std::string& alpha_text, const std::string& epsilon_text, int count,
                       std::int64_t bound, const std::string& target_text,
                       const std::string& radius_text, const std::string& out,
                       const std::string& s_out) {
    TorusAngle alpha = parse_angle(alpha_text);
    Rational epsilon = parse_rational(epsilon_text);
    CounterexampleSpec spec(alpha, epsilon, count, bound, parse_rational(target_text));

    RunId id{"counterexample", {}};
    id.add("alpha", alpha_text);
    id.add("epsilon", epsilon_text);
    id.add("count", std::to_string(count));
    id.add("bound", std::to_string(bound));
    id.add("target", target_text);
    id.add("radius", radius_text);

    auto found = counterexample_search(spec);
    if (std::holds_alternative<SearchNotFound>(found)) {
        const auto& partial = std::get<SearchNotFound>(found).partial;
        write_file(out, report_csv(id, static_cast<std::int64_t>(partial.size()), "NOTFOUND",
                                   join_ints(partial)));
        std::cout << "counterexample: only " << partial.size() << "/" << count
                  << " elements below " << bound << " -> " << out << "\n";
        return kExitNegative;
    }
    const WindowedSet& s = std::get<WindowedSet>(found);
    if (!s_out.empty()) save_set_file(s, s_out);

    std::string verdict = "FOUND";
    std::string note;
    int exit_code = kExitOk;
    if (!radius_text.empty()) {
        PolyTarget target(alpha, 1, 0, 0, parse_rational(radius_text));
        auto verify = counterexample_verify(s, target, epsilon);
        verdict = verify.empty ? "FOUND-DISJOINT" : "FOUND-INTERSECTS";
        note = verify.empty ? " Δ(S) misses Ω" : " Δ(S) hits Ω at " + std::to_string(*verify.witness);
        if (!verify.empty) exit_code = kExitNegative;
    }
    write_file(out, report_csv(id, count, verdict, join_ints(s.values())));
    std::cout << "counterexample: S=" << join_ints(s.values()) << note << " -> " << out << "\n";
    return exit_code;
}

int cmd_check_star(const std::string& kind, const std::string& a_file, int r, std::int64_t m,
                   int d, int len, int trials, std::uint64_t seed, int threads,
                   const std::string& out) {
    WindowedSet a = load_set_file(a_file);
    StarReport report;
    if (kind == "sumset") {
        report = check_sumset_star(a, r, m, threads);
    } else if (kind == "delta") {
        report = check_delta_star(a, r, m, threads);
    } else if (kind == "shd") {
        report = check_shd_star_sampled(a, d, len, trials, seed);
    } else {
        throw PreconditionViolated("--check must be sumset|delta|shd");
    }
    write_file(out, StarReport::csv_header() + report.csv());
    std::cout << "check-star " << kind << ": " << report.verdict();
    if (report.refuted) std::cout << " witness=" << join_ints(report.witness);
    std::cout << " (" << report.enumerated << " candidates) -> " << out << "\n";
    return report.refuted ? kExitNegative : kExitOk;
}

int cmd_witness_pw(const std::string& a_file, const std::string& lambda_file,
                   const std::string& jks_text, std::int64_t min_len, const std::string& out) {
    WindowedSet a = load_set_file(a_file);
    WindowedSet lambda = load_set_file(lambda_file);
    IntervalFamily jks(parse_interval_list(jks_text));

    RunId id{"witness-pw", {}};
    id.add("a", a_file);
    id.add("lambda", lambda_file);
    id.add("jks", jks_text);
    id.add("min_len", std::to_string(min_len));

    auto witness = pw_witness(a, lambda, jks, min_len, lambda_file);
    if (!witness) {
        write_file(out, report_csv(id, 0, "NOTFOUND", ""));
        std::cout << "witness-pw: no interval of length >= " << min_len << " -> " << out << "\n";
        return kExitNegative;
    }
    std::string picks;
    for (const auto& pick : witness->picked) {
        if (!picks.empty()) picks += ";";
        picks += std::to_string(pick.interval.lo) + ":" + std::to_string(pick.interval.hi) + "@" +
                 std::to_string(pick.k);
    }
    write_file(out, report_csv(id, static_cast<std::int64_t>(witness->picked.size()), "FOUND",
                               picks));
    std::cout << "witness-pw: " << witness->picked.size() << " intervals, longest "
              << witness->picked.back().interval.length() << " -> " << out << "\n";
    return kExitOk;
}

int cmd_density(const std::string& file, const std::string& intervals_text,
                const std::string& out) {
    WindowedSet s = load_set_file(file);
    IntervalFamily fam(parse_interval_list(intervals_text));
    Rational density = upper_density(s, fam);

    RunId id{"density", {}};
    id.add("file", file);
    id.add("intervals", intervals_text);
    if (!out.empty()) write_file(out, report_csv(id, 0, rational_str(density), ""));
    std::cout << "density: " << rational_str(density) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"windowed laboratory for Bohr-type return sets and gap-sum structure"};
    app.require_subcommand(1);

    // gen-bohr
    std::vector<std::string> alphas, radii, centers;
    std::string window_text, out_path;
    auto* gen_bohr = app.add_subcommand("gen-bohr", "rotation return-time set");
    gen_bohr->add_option("--alpha", alphas, "angle literal (repeatable)")->required();
    gen_bohr->add_option("--radius", radii, "arc radius (one, or one per alpha)")->required();
    gen_bohr->add_option("--center", centers, "arc center (default 0)");
    gen_bohr->add_option("--window", window_text, "lo:hi")->required();
    gen_bohr->add_option("--out", out_path, "output set file")->required();

    // gen-poly
    std::string poly_alpha, poly_radius, poly_window, poly_out;
    std::int64_t c2 = 1, c1 = 0, c0 = 0;
    auto* gen_poly = app.add_subcommand("gen-poly", "quadratic return-time set");
    gen_poly->add_option("--alpha", poly_alpha)->required();
    gen_poly->add_option("--radius", poly_radius)->required();
    gen_poly->add_option("--c2", c2, "n^2 coefficient");
    gen_poly->add_option("--c1", c1, "n coefficient");
    gen_poly->add_option("--c0", c0, "constant coefficient");
    gen_poly->add_option("--window", poly_window, "lo:hi")->required();
    gen_poly->add_option("--out", poly_out)->required();

    // gen-shd
    std::string shd_p, shd_out;
    int shd_d = 1;
    std::int64_t shd_cap = 0;
    auto* gen_shd = app.add_subcommand("gen-shd", "gap-sum set of a finite sequence");
    gen_shd->add_option("--p", shd_p, "comma-separated entries")->required();
    gen_shd->add_option("--d", shd_d, "gap parameter")->required();
    gen_shd->add_option("--cap", shd_cap, "largest sum kept")->required();
    gen_shd->add_option("--out", shd_out)->required();

    // avoid
    std::string avoid_b, avoid_policy = "smallest", avoid_out, avoid_pout;
    int avoid_d = 1, avoid_steps = 1;
    std::int64_t avoid_threshold = 0;
    std::uint64_t avoid_seed = 0;
    auto* avoid = app.add_subcommand("avoid", "greedy gap-sum avoider over a target set");
    avoid->add_option("--b-file", avoid_b, "target set B")->required();
    avoid->add_option("--d", avoid_d)->required();
    avoid->add_option("--steps", avoid_steps)->required();
    avoid->add_option("--policy", avoid_policy, "smallest|above|random");
    avoid->add_option("--threshold", avoid_threshold, "for --policy above");
    avoid->add_option("--seed", avoid_seed, "for --policy random");
    avoid->add_option("--out", avoid_out, "CSV report")->required();
    avoid->add_option("--p-out", avoid_pout, "write P as comma-separated integers");

    // counterexample
    std::string ce_alpha, ce_eps, ce_target = "1/3", ce_radius, ce_out, ce_sout;
    int ce_count = 1;
    std::int64_t ce_bound = 1;
    auto* ce = app.add_subcommand("counterexample",
                                  "greedy search for squares near a target with cross products near 0");
    ce->add_option("--alpha", ce_alpha)->required();
    ce->add_option("--epsilon", ce_eps)->required();
    ce->add_option("--count", ce_count)->required();
    ce->add_option("--bound", ce_bound)->required();
    ce->add_option("--target", ce_target, "target point (default 1/3)");
    ce->add_option("--radius", ce_radius, "verify Δ(S) against the quadratic return set");
    ce->add_option("--out", ce_out, "CSV report")->required();
    ce->add_option("--s-out", ce_sout, "write S as a set file");

    // check-star
    std::string cs_kind, cs_a, cs_out;
    int cs_r = 2, cs_d = 1, cs_len = 8, cs_trials = 100, cs_threads = 1;
    std::int64_t cs_m = 10;
    std::uint64_t cs_seed = 0;
    auto* cs = app.add_subcommand("check-star", "dual-class checks over a finite universe");
    cs->add_option("--check", cs_kind, "sumset|delta|shd")->required();
    cs->add_option("--a-file", cs_a)->required();
    cs->add_option("--r", cs_r, "subset size (sumset/delta)");
    cs->add_option("--m", cs_m, "universe top (sumset/delta)");
    cs->add_option("--d", cs_d, "gap parameter (shd)");
    cs->add_option("--len", cs_len, "sequence length (shd)");
    cs->add_option("--trials", cs_trials, "sampled sequences (shd)");
    cs->add_option("--seed", cs_seed);
    cs->add_option("--threads", cs_threads);
    cs->add_option("--out", cs_out, "CSV report")->required();

    // witness-pw
    std::string pw_a, pw_lambda, pw_jks, pw_out;
    std::int64_t pw_minlen = 1;
    auto* pw = app.add_subcommand("witness-pw", "strongly-piecewise witness extraction");
    pw->add_option("--a-file", pw_a)->required();
    pw->add_option("--lambda-file", pw_lambda)->required();
    pw->add_option("--jks", pw_jks, "comma-separated lo:hi intervals")->required();
    pw->add_option("--min-len", pw_minlen)->required();
    pw->add_option("--out", pw_out, "CSV report")->required();

    // density
    std::string dn_file, dn_intervals, dn_out;
    auto* dn = app.add_subcommand("density", "max relative density over an interval family");
    dn->add_option("--file", dn_file)->required();
    dn->add_option("--intervals", dn_intervals, "comma-separated lo:hi intervals")->required();
    dn->add_option("--out", dn_out, "optional CSV report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (gen_bohr->parsed())
            return cmd_gen_bohr(alphas, radii, centers, window_text, out_path);
        if (gen_poly->parsed())
            return cmd_gen_poly(poly_alpha, poly_radius, c2, c1, c0, poly_window, poly_out);
        if (gen_shd->parsed()) return cmd_gen_shd(shd_p, shd_d, shd_cap, shd_out);
        if (avoid->parsed())
            return cmd_avoid(avoid_b, avoid_d, avoid_steps, avoid_policy, avoid_threshold,
                             avoid_seed, avoid_out, avoid_pout);
        if (ce->parsed())
            return cmd_counterexample(ce_alpha, ce_eps, ce_count, ce_bound, ce_target, ce_radius,
                                      ce_out, ce_sout);
        if (cs->parsed())
            return cmd_check_star(cs_kind, cs_a, cs_r, cs_m, cs_d, cs_len, cs_trials, cs_seed,
                                  cs_threads, cs_out);
        if (pw->parsed()) return cmd_witness_pw(pw_a, pw_lambda, pw_jks, pw_minlen, pw_out);
        if (dn->parsed()) return cmd_density(dn_file, dn_intervals, dn_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
