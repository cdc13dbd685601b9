// chowforms: formula tables, verification oracles, decomposition demos,
// and decomposition-locus point counts, with JSON/CSV/text output.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chowforms/serialize.hpp"

using namespace chowforms;
using exactalg::Field;
using exactalg::Rng;
using nlohmann::json;
using polyring::Form;
using polyring::LinearForm;
using polyring::Ring;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct RunConfig {
    bool rationals = false;
    std::string prime = "2147483647";
    std::uint64_t seed = 0;
    int retries = chowlab::kDefaultRetries;
    long guard = chowlab::kDefaultEnumGuard;

    Field field() const {
        if (rationals) return Field::rationals();
        return Field::prime(mpz_class(prime));
    }

    json to_json() const {
        return json{{"field", serialize::field_to_json(field())},
                    {"seed", seed},
                    {"retries", retries},
                    {"enumeration_guard", guard}};
    }
};

// "a..b" or a single "a".
std::pair<long, long> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
}

void emit(const std::string& command, const RunConfig& cfg,
          const json& results) {
    json top{{"schema_version", kSchemaVersion},
             {"command", command},
             {"config", cfg.to_json()},
             {"results", results}};
    std::cout << top.dump(2) << "\n";
}

int cmd_formulas(const RunConfig& cfg, const std::string& n_range,
                 const std::string& d_range, bool zero_dim, bool defective,
                 const std::string& output) {
    auto [n_lo, n_hi] = parse_range(n_range);
    auto [d_lo, d_hi] = parse_range(d_range);
    if (n_lo > n_hi || d_lo > d_hi || n_lo < 1 || d_lo < 1) {
        std::cerr << "empty or invalid range\n";
        return kExitUsage;
    }
    auto rows = formulas::table(n_lo, n_hi, d_lo, d_hi);
    std::vector<formulas::WaringProfile> kept;
    for (const auto& r : rows) {
        if (zero_dim && r.vsh_dim != 0) continue;
        if (defective && !r.defective) continue;
        kept.push_back(r);
    }
    if (output == "json") {
        json results = json::array();
        for (const auto& r : kept)
            results.push_back(serialize::profile_to_json(r));
        emit("formulas", cfg, results);
    } else if (output == "csv") {
        std::cout << "d,n,s,degree\n";
        for (const auto& r : kept)
            std::cout << serialize::profile_csv_row(r) << "\n";
    } else {
        std::printf("%4s %4s %6s %6s %6s %10s %9s %8s %s\n", "d", "n", "smin",
                    "sexp", "sstar", "defective", "vsh_dim", "chow_dim",
                    "vsh_degree");
        for (const auto& r : kept)
            std::printf("%4ld %4ld %6ld %6ld %6ld %10s %9ld %8ld %s\n", r.d,
                        r.n, r.smin, r.sexp, r.sstar,
                        r.defective ? "yes" : "no", r.vsh_dim, r.chow_dim,
                        r.vsh_degree.get_str().c_str());
    }
    return 0;
}

struct VerifyCell {
    std::string suite;
    std::map<std::string, long> params;
};

chowlab::VerificationReport run_cell(const VerifyCell& c,
                                     const RunConfig& cfg) {
    const Field F = cfg.field();
    const auto& p = c.params;
    if (c.suite == "chow-tangent")
        return chowlab::verify_chow_tangent(F, static_cast<int>(p.at("n")),
                                            static_cast<int>(p.at("s")),
                                            cfg.seed, cfg.retries);
    if (c.suite == "ideal-claim") {
        int s = static_cast<int>(p.at("s"));
        int t_lo = static_cast<int>(p.count("t_lo") ? p.at("t_lo") : s - 1);
        int t_hi = static_cast<int>(p.count("t_hi") ? p.at("t_hi") : s + 2);
        return chowlab::ideal_claim_hilbert_check(
            F, static_cast<int>(p.at("n")), s, t_lo, t_hi, cfg.seed,
            cfg.retries);
    }
    if (c.suite == "terracini")
        return chowlab::verify_terracini(F, static_cast<int>(p.at("n")),
                                         static_cast<int>(p.at("d")), cfg.seed,
                                         cfg.retries);
    if (c.suite == "chow-degree")
        return chowlab::verify_chow_degree(F, static_cast<int>(p.at("n")),
                                           static_cast<int>(p.at("s")),
                                           cfg.seed, cfg.guard, cfg.retries);
    if (c.suite == "smoothness")
        return decomp::verify_smoothness_case(F, static_cast<int>(p.at("n")),
                                              static_cast<int>(p.at("d")),
                                              cfg.seed, cfg.retries);
    if (c.suite == "roundtrip")
        return decomp::verify_roundtrip(F, static_cast<int>(p.at("n")),
                                        static_cast<int>(p.at("d")), cfg.seed,
                                        cfg.retries);
    throw DomainError("unknown suite: " + c.suite);
}

std::vector<VerifyCell> small_grid() {
    std::vector<VerifyCell> cells;
    for (long n : {2, 3})
        for (long s : {2, 3})
            cells.push_back({"chow-tangent", {{"n", n}, {"s", s}}});
    cells.push_back({"ideal-claim", {{"n", 2}, {"s", 3}}});
    for (long n : {1, 2})
        for (long d : {3, 4, 5})
            cells.push_back({"terracini", {{"n", n}, {"d", d}}});
    cells.push_back({"chow-degree", {{"n", 2}, {"s", 2}}});
    cells.push_back({"chow-degree", {{"n", 2}, {"s", 3}}});
    cells.push_back({"smoothness", {{"n", 2}, {"d", 5}}});
    cells.push_back({"roundtrip", {{"n", 2}, {"d", 4}}});
    cells.push_back({"roundtrip", {{"n", 3}, {"d", 3}}});
    return cells;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, long n, long d,
               long s, long t_lo, long t_hi, const std::string& grid) {
    const std::vector<std::string> known{"chow-tangent", "ideal-claim",
                                         "terracini",    "chow-degree",
                                         "smoothness",   "roundtrip",
                                         "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
    }

    std::vector<VerifyCell> cells;
    if (suite == "all") {
        if (!grid.empty() && grid != "small") {
            std::cerr << "unknown grid: " << grid << "\n";
            return kExitUsage;
        }
        cells = small_grid();
    } else {
        VerifyCell c{suite, {}};
        if (n >= 0) c.params["n"] = n;
        if (d >= 0) c.params["d"] = d;
        if (s >= 0) c.params["s"] = s;
        if (t_lo >= 0) c.params["t_lo"] = t_lo;
        if (t_hi >= 0) c.params["t_hi"] = t_hi;
        cells.push_back(std::move(c));
    }

    json results = json::array();
    bool all_pass = true;
    try {
        for (const auto& c : cells) {
            auto rep = run_cell(c, cfg);
            all_pass = all_pass && rep.pass;
            results.push_back(serialize::report_to_json(rep));
        }
    } catch (const EnumerationTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const std::out_of_range&) {
        std::cerr << "missing required parameter for suite " << suite << "\n";
        return kExitUsage;
    }
    emit("verify", cfg, results);
    return all_pass ? 0 : kExitVerifyFailure;
}

int cmd_decompose(const RunConfig& cfg, const std::string& synth, bool binary,
                  long synth_d, const std::string& file, bool prime_given) {
    RunConfig local = cfg;
    // the root scan enumerates all p+1 projective points, so the binary
    // path defaults to a small prime unless one was requested explicitly
    if (binary && !prime_given && !cfg.rationals) local.prime = "101";
    const Field F = local.field();

    if (binary) {
        if (synth_d < 1) {
            std::cerr << "--binary requires --synth-d\n";
            return kExitUsage;
        }
        if (!F.is_prime_field()) {
            std::cerr << "--binary requires a prime field\n";
            return kExitUsage;
        }
        // plant a sum of sstar(d) distinct powers, then recover it
        Rng rng(local.seed);
        const int d = static_cast<int>(synth_d);
        const int terms_expected = static_cast<int>(formulas::sstar(synth_d));
        auto pts = polyring::random_distinct_linears(F, 1, Ring::S,
                                                     terms_expected, rng);
        Form f(F, 1, d, Ring::S);
        for (const LinearForm& l : pts)
            f = polyring::add(
                f, polyring::scale(rng.nonzero_scalar(F),
                                   polyring::power(l, d)));
        auto dec = decomp::sylvester_binary(f);
        json results = json::array();
        json r{{"form", serialize::form_to_json(f)},
               {"expected_terms", formulas::sstar(synth_d)}};
        if (!dec) {
            r["status"] = "splitting-failure";
            results.push_back(r);
            emit("decompose", local, results);
            return kExitVerifyFailure;
        }
        json terms = json::array();
        Form total(F, 1, static_cast<int>(synth_d), Ring::S);
        for (const auto& t : *dec) {
            terms.push_back(
                json{{"coefficient", t.coefficient.get_str()},
                     {"point", serialize::linear_to_json(t.point)}});
            total = polyring::add(
                total, polyring::scale(t.coefficient,
                                       polyring::power(
                                           t.point,
                                           static_cast<int>(synth_d))));
        }
        r["status"] = "ok";
        r["terms"] = terms;
        r["residual_zero"] = (total == f);
        results.push_back(r);
        emit("decompose", local, results);
        return total == f ? 0 : kExitVerifyFailure;
    }

    std::optional<decomp::CodimOneInstance> maybe;
    if (!synth.empty()) {
        long n, d, s;
        if (std::sscanf(synth.c_str(), "%ld,%ld,%ld", &n, &d, &s) != 3 ||
            n < 1 || d < 1 || s < 1) {
            std::cerr << "--synth expects n,d,s\n";
            return kExitUsage;
        }
        maybe = decomp::synth_instance(F, static_cast<int>(n),
                                       static_cast<int>(d),
                                       static_cast<int>(s), local.seed);
    } else if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open " << file << "\n";
            return kExitUsage;
        }
        json j = json::parse(in);
        maybe = serialize::instance_from_json(j);
    } else {
        std::cerr << "decompose needs --synth, --binary, or --file\n";
        return kExitUsage;
    }
    decomp::CodimOneInstance& inst = *maybe;

    json results = json::array();
    bool fwd = decomp::forward_check(inst.f, inst.hyperplanes);
    json r{{"forward_check", fwd}};
    if (!fwd) {
        r["status"] = "inconsistent";
        results.push_back(r);
        emit("decompose", local, results);
        return kExitVerifyFailure;
    }
    auto plan = decomp::SamplingPlan::standard(inst.n, inst.d, local.seed);
    plan.retries = local.retries;
    auto rec = decomp::reconstruct(inst.f, inst.hyperplanes, plan);
    if (!rec) {
        r["status"] = "inconsistent";
        results.push_back(r);
        emit("decompose", local, results);
        return kExitVerifyFailure;
    }
    Form total(F, inst.n, inst.d, Ring::S);
    bool annihilated = true;
    json summands = json::array();
    for (std::size_t i = 0; i < rec->summands.size(); ++i) {
        total = polyring::add(total, rec->summands[i]);
        annihilated =
            annihilated && polyring::apply(rec->hyperplanes[i].as_form(),
                                           rec->summands[i])
                               .is_zero();
        summands.push_back(serialize::form_to_json(rec->summands[i]));
    }
    bool residual = (total == inst.f);
    r["status"] = "ok";
    r["summands"] = summands;
    r["sum_equals_f"] = residual;
    r["each_annihilated"] = annihilated;
    results.push_back(r);
    emit("decompose", local, results);
    return (residual && annihilated) ? 0 : kExitVerifyFailure;
}

int cmd_count(const RunConfig& cfg, long n, long d, long s,
              const std::string& p, const std::string& file) {
    Field F = Field::prime(mpz_class(p));
    Form f(F, 1, 1, Ring::S);
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open " << file << "\n";
            return kExitUsage;
        }
        auto inst = serialize::instance_from_json(json::parse(in));
        f = inst.f;
        n = f.n();
        d = f.degree();
        if (s < 0) s = inst.s;
    } else {
        if (n < 1 || d < 1 || s < 1) {
            std::cerr << "count needs --n, --d, --s (or --file)\n";
            return kExitUsage;
        }
        Rng rng(cfg.seed);
        f = polyring::random_form(F, static_cast<int>(n),
                                  static_cast<int>(d), Ring::S, rng);
    }
    long count;
    try {
        count = decomp::vsh_point_count(f, static_cast<int>(s), cfg.guard);
    } catch (const EnumerationTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    }
    json results = json::array();
    results.push_back(
        json{{"n", n},
             {"d", d},
             {"s", s},
             {"p", p},
             {"count", count},
             {"degree_bound", formulas::vsh_degree(n, d).get_str()}});
    emit("count", cfg, results);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codimension-one decompositions of homogeneous forms"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("CHOWFORMS_FIELD_PRIME"))
        cfg.prime = env;
    app.add_option("--prime", cfg.prime, "prime field modulus");
    app.add_flag("--rationals", cfg.rationals, "work over the rationals");
    app.add_option("--seed", cfg.seed, "random seed (default 0)");
    app.add_option("--retries", cfg.retries, "genericity retry budget");
    app.add_option("--guard", cfg.guard, "enumeration guard");

    auto* cf = app.add_subcommand("formulas", "closed-form invariant tables");
    cf->fallthrough();
    std::string n_range = "1..10", d_range = "1..10";
    bool zero_dim = false, defective = false, as_json = false, as_csv = false;
    cf->add_option("--n", n_range, "n range, a..b or a");
    cf->add_option("--d", d_range, "d range, a..b or a");
    cf->add_flag("--zero-dim", zero_dim, "only rows with vsh_dim = 0");
    cf->add_flag("--defective", defective, "only defective pairs");
    cf->add_flag("--json", as_json, "JSON output");
    cf->add_flag("--csv", as_csv, "CSV output (d,n,s,degree)");

    auto* cv = app.add_subcommand("verify", "run verification oracles");
    cv->fallthrough();
    std::string suite;
    long vn = -1, vd = -1, vs = -1, t_lo = -1, t_hi = -1;
    std::string grid;
    cv->add_option("suite", suite,
                   "chow-tangent | ideal-claim | terracini | chow-degree | "
                   "smoothness | roundtrip | all")
        ->required();
    cv->add_option("--n", vn, "number of variables minus one");
    cv->add_option("--d", vd, "degree");
    cv->add_option("--s", vs, "number of summands / factors");
    cv->add_option("--t-lo", t_lo, "lowest ideal degree to check");
    cv->add_option("--t-hi", t_hi, "highest ideal degree to check");
    cv->add_option("--grid", grid, "grid name for 'all' (small)");

    auto* cd = app.add_subcommand("decompose", "decomposition pipeline");
    cd->fallthrough();
    std::string synth, file;
    bool binary = false;
    long synth_d = -1;
    cd->add_option("--synth", synth, "synthetic instance n,d,s");
    cd->add_flag("--binary", binary, "Sylvester decomposition of a binary form");
    cd->add_option("--synth-d", synth_d, "degree for --binary");
    cd->add_option("--file", file, "instance JSON file");

    auto* cc = app.add_subcommand("count", "decomposition-locus point count");
    cc->fallthrough();
    long cn = -1, ccd = -1, cs = -1;
    std::string cp = "11", cfile;
    cc->add_option("--n", cn, "number of variables minus one");
    cc->add_option("--d", ccd, "degree");
    cc->add_option("--s", cs, "number of hyperplanes");
    cc->add_option("--p", cp, "prime for the point count");
    cc->add_option("--file", cfile, "instance JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cf->parsed()) {
            std::string output = as_json ? "json" : as_csv ? "csv" : "text";
            return cmd_formulas(cfg, n_range, d_range, zero_dim, defective,
                                output);
        }
        if (cv->parsed())
            return cmd_verify(cfg, suite, vn, vd, vs, t_lo, t_hi, grid);
        if (cd->parsed())
            return cmd_decompose(cfg, synth, binary, synth_d, file,
                                 app.count("--prime") > 0);
        if (cc->parsed()) return cmd_count(cfg, cn, ccd, cs, cp, cfile);
    } catch (const EnumerationTooLarge& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
