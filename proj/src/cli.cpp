#include "apolab/cli.hpp"

#include "apolab/bounds.hpp"
#include "apolab/constructions.hpp"
#include "apolab/errors.hpp"
#include "apolab/form_io.hpp"
#include "apolab/inverse_system.hpp"
#include "apolab/sweep.hpp"
#include "apolab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>

namespace apolab {

namespace {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Structured };

struct RunConfig {
    u64 prime = kDefaultPrime;
    u64 seed = 1;
    OutputFormat format = OutputFormat::Text;
    std::string out_path;
    int verbosity = 0;
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

// Keeps the --out file alive for the duration of a command.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
            stream_ = file_.get();
        }
    }
    std::ostream& get() { return *stream_; }
    bool redirected() const { return file_ != nullptr; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

Json vec_json(const std::vector<std::uint64_t>& v) { return Json(v); }

LevelPresentation load(const RunConfig& cfg, const std::string& path) {
    PresentationDocument doc = read_presentation_file(path);
    if (doc.prime != cfg.prime) {
        throw Error(ErrorCode::InvalidArgument, path + " is over F_" + std::to_string(doc.prime) +
                                                    " but the session prime is " + std::to_string(cfg.prime) +
                                                    " (pass --prime " + std::to_string(doc.prime) + ")");
    }
    return doc.presentation;
}

int cmd_hvector(const RunConfig& cfg, Streams io, const std::string& path) {
    const PrimeField field(cfg.prime);
    const LevelPresentation p = load(cfg, path);
    const std::size_t t = validate_level(field, p);
    const auto spaces = derivative_spaces(field, p);
    HVector h;
    for (const auto& s : spaces) h.entries.push_back(s.basis.rank);
    Sink sink(cfg.out_path, io.out);
    if (cfg.format == OutputFormat::Structured) {
        Json doc;
        doc["hvector"] = vec_json(h.entries);
        doc["type"] = t;
        doc["socle_degree"] = p.socle_degree;
        doc["num_vars"] = p.num_vars;
        Json ranks = Json::array();
        for (const auto& s : spaces) {
            ranks.push_back({{"degree", s.degree},
                             {"rank", s.basis.rank},
                             {"monomials", monomial_count(p.num_vars, s.degree)}});
        }
        doc["ranks"] = std::move(ranks);
        sink.get() << doc.dump(2) << '\n';
    } else {
        sink.get() << "h-vector: " << h.join() << '\n'
                   << "type: " << t << '\n'
                   << "socle degree: " << p.socle_degree << '\n';
        if (cfg.verbosity > 0) {
            for (const auto& s : spaces) {
                sink.get() << "  degree " << s.degree << ": rank " << s.basis.rank << " of "
                           << monomial_count(p.num_vars, s.degree) << " monomials\n";
            }
        }
    }
    return kExitOk;
}

void print_report(std::ostream& os, const RunConfig& cfg, const BoundsReport& r) {
    std::vector<std::string> exact;
    for (const auto& x : r.lower_exact) exact.push_back(x.to_string());
    if (cfg.format == OutputFormat::Structured) {
        Json doc;
        doc["h"] = vec_json(r.h.entries);
        doc["d"] = r.d;
        doc["c"] = r.c;
        doc["lower"] = vec_json(r.lower_int);
        doc["lower_exact"] = exact;
        doc["upper"] = vec_json(r.upper);
        doc["degenerate_case"] = r.degenerate_case;
        os << doc.dump(2) << '\n';
        return;
    }
    std::string exact_joined;
    for (std::size_t i = 0; i < exact.size(); ++i) exact_joined += (i ? "," : "") + exact[i];
    os << "h: " << r.h.join() << '\n'
       << "d: " << r.d << '\n'
       << "c: " << r.c << '\n'
       << "lower: " << HVector{r.lower_int}.join() << '\n'
       << "lower exact: " << exact_joined << '\n'
       << "upper: " << HVector{r.upper}.join() << '\n';
    if (r.degenerate_case) {
        os << "note: h_d = 1, so the truncation is Gorenstein and H equals (h_0, ..., h_d); "
              "the rational formula is not evaluated\n";
    }
}

int cmd_bounds(const RunConfig& cfg, Streams io, const std::string& h_text, unsigned d, std::uint64_t c) {
    const HVector h = HVector::parse(h_text);
    const BoundsReport report = bounds_report(h, d, c);
    Sink sink(cfg.out_path, io.out);
    print_report(sink.get(), cfg, report);
    return kExitOk;
}

int cmd_quotient(const RunConfig& cfg, Streams io, const std::string& path, unsigned d, std::uint64_t c) {
    const PrimeField field(cfg.prime);
    const LevelPresentation p = load(cfg, path);
    const HVector h = hvector(field, p);
    SeededRng rng(cfg.seed);
    const LevelPresentation q = generic_quotient(field, p, d, c, rng);
    const HVector H = hvector(field, q);
    const BoundsReport report = bounds_report(h, d, c);
    const WithinVerdict verdict = check_within(H, h, d, c);
    Sink sink(cfg.out_path, io.out);
    if (cfg.format == OutputFormat::Structured) {
        Json doc;
        doc["ambient_h"] = vec_json(h.entries);
        doc["d"] = d;
        doc["c"] = c;
        doc["seed"] = cfg.seed;
        doc["quotient_h"] = vec_json(H.entries);
        doc["lower"] = vec_json(report.lower_int);
        doc["upper"] = vec_json(report.upper);
        doc["within"] = verdict.pass;
        sink.get() << doc.dump(2) << '\n';
    } else {
        sink.get() << "ambient h: " << h.join() << '\n'
                   << "quotient H: " << H.join() << '\n'
                   << "lower: " << HVector{report.lower_int}.join() << '\n'
                   << "upper: " << HVector{report.upper}.join() << '\n'
                   << "within bounds: " << (verdict.pass ? "yes" : "no") << '\n';
    }
    if (!verdict.pass) {
        io.err << "quotient h-vector violates the bounds at index " << *verdict.first_failure << '\n';
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_truncate(const RunConfig& cfg, Streams io, const std::string& path, unsigned d) {
    const PrimeField field(cfg.prime);
    const LevelPresentation t = truncation(field, load(cfg, path), d);
    Sink sink(cfg.out_path, io.out);
    sink.get() << presentation_to_json(t, cfg.prime).dump(2) << '\n';
    return kExitOk;
}

struct ConstructArgs {
    unsigned t = 2;
    unsigned p = 2;
    unsigned e = 4;
    std::size_t vars = 3;
    unsigned degree = 7;
    std::size_t type = 2;
    std::string summands = "1";
};

int cmd_construct(const RunConfig& cfg, Streams io, const std::string& which, const ConstructArgs& a) {
    const PrimeField field(cfg.prime);
    SeededRng rng(cfg.seed);
    Json doc;
    if (which == "remark5") {
        doc = presentation_to_json(block_family(field, {a.t, a.p, a.e}), cfg.prime);
    } else if (which == "powersum") {
        std::vector<std::size_t> counts;
        for (auto n : HVector::parse(a.summands).entries) counts.push_back(n);
        doc = presentation_to_json(
            power_sum_presentation(field, PowerSumSpec::generic(a.vars, a.degree, counts), rng), cfg.prime);
    } else if (which == "septics") {
        const AmbientAndQuotient pair = septics_upper_sharp(field, rng);
        doc["ambient"] = presentation_to_json(pair.ambient, cfg.prime);
        doc["quotient"] = presentation_to_json(pair.quotient, cfg.prime);
    } else if (which == "remark6") {
        const EqualHPair pair = equal_h_pair(field, {a.t, a.p, a.e}, rng);
        doc["A1"] = presentation_to_json(pair.block, cfg.prime);
        doc["A2"] = presentation_to_json(pair.power_sums, cfg.prime);
        doc["A2_designated_quotient"] = presentation_to_json(pair.designated_quotient(), cfg.prime);
    } else {
        const HVector h = compressed_hvector(a.vars, a.degree, a.type);
        Sink sink(cfg.out_path, io.out);
        if (cfg.format == OutputFormat::Structured) {
            sink.get() << Json{{"hvector", h.entries}}.dump(2) << '\n';
        } else {
            sink.get() << "h-vector: " << h.join() << '\n';
        }
        return kExitOk;
    }
    Sink sink(cfg.out_path, io.out);
    sink.get() << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, Streams io, const std::string& suite) {
    VerifyContext ctx{PrimeField(cfg.prime), cfg.seed};
    const std::vector<VerifyReport> reports = run_verify_suite(suite, ctx);
    Sink sink(cfg.out_path, io.out);
    bool pass = true;
    if (cfg.format == OutputFormat::Structured) {
        Json doc = Json::array();
        for (const auto& r : reports) {
            Json rows = Json::array();
            for (const auto& row : r.rows) {
                rows.push_back({{"label", row.label},
                                {"expected", row.expected},
                                {"computed", row.computed},
                                {"ok", row.ok},
                                {"detail", row.detail}});
            }
            doc.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"rows", std::move(rows)}});
            pass = pass && r.pass();
        }
        sink.get() << doc.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            std::size_t ok = 0;
            for (const auto& row : r.rows) {
                ok += row.ok ? 1 : 0;
                sink.get() << (row.ok ? "[PASS] " : "[FAIL] ") << r.suite << ": " << row.label
                           << "  expected " << row.expected << "  computed " << row.computed;
                if (!row.ok) sink.get() << "  (" << row.detail << ")";
                sink.get() << '\n';
            }
            sink.get() << "suite " << r.suite << ": " << ok << "/" << r.rows.size() << " checks passed\n";
            pass = pass && r.pass();
        }
    }
    for (const auto& r : reports) {
        if (const VerifyRow* f = r.first_failure()) {
            io.err << "verification failed in " << r.suite << ": " << f->label << ": " << f->detail << '\n';
        }
    }
    return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const RunConfig& cfg, Streams io, SweepConfig sweep) {
    const PrimeField field(cfg.prime);
    sweep.seed = cfg.seed;
    const SweepResult result = run_sweep(field, sweep);
    for (const auto& reason : result.skipped) io.err << "skipped " << reason << '\n';
    Sink sink(cfg.out_path, io.out);
    write_sweep_csv(sink.get(), result.records);
    (sink.redirected() ? io.out : io.err) << sweep_summary(result) << '\n';
    const bool healthy = std::all_of(result.records.begin(), result.records.end(),
                                     [](const SweepRecord& r) { return r.within; });
    return healthy ? kExitOk : kExitVerificationFailed;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::GenericityFailure: return kExitVerificationFailed;
    default: return kExitUsage;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"apolab: inverse systems, h-vectors and bounds for relatively compressed level algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("APOLAB_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "APOLAB_SEED is not an unsigned integer: " << env << '\n';
            return kExitUsage;
        }
    }
    std::string format = "text";
    app.add_option("--prime", cfg.prime, "prime modulus standing in for characteristic zero")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "RNG seed (default: $APOLAB_SEED or 1)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--out", cfg.out_path, "write the main output to this file");
    app.add_flag("-v,--verbose", cfg.verbosity, "more output");

    std::string path;
    unsigned d = 0;
    std::uint64_t c = 0;
    std::string h_text;
    std::string suite = "all";
    ConstructArgs construct;
    SweepConfig sweep;
    std::string r_range = "1..4";
    std::string e_range = "1..6";
    std::string t_range = "1..3";

    auto* hv = app.add_subcommand("hvector", "h-vector of the algebra defined by a form file");
    hv->add_option("file", path, "form or presentation document")->required();

    auto* bd = app.add_subcommand("bounds", "lower and upper bounds for relatively compressed quotients");
    bd->set_help_flag("--help", "print this help message and exit"); // frees -h/--h for the h-vector
    bd->add_option("--h", h_text, "ambient h-vector, comma separated")->required();
    bd->add_option("--d", d, "socle degree of the quotient")->required();
    bd->add_option("--c", c, "type of the quotient")->required();

    auto* qt = app.add_subcommand("quotient", "generic level quotient of a truncation");
    qt->add_option("file", path)->required();
    qt->add_option("--d", d)->required();
    qt->add_option("--c", c)->required();

    auto* tr = app.add_subcommand("truncate", "inverse-system generators of the truncation A/A_{d+1}");
    tr->add_option("file", path)->required();
    tr->add_option("--d", d)->required();

    auto* cs = app.add_subcommand("construct", "build one of the explicit families");
    cs->require_subcommand(1);
    auto* cs_r5 = cs->add_subcommand("remark5", "block family sum_m y_{jp+m} y_m^{e-1}");
    for (auto* sub : {cs_r5, cs->add_subcommand("remark6", "pair with equal h-vector, different quotients")}) {
        sub->add_option("--t", construct.t)->capture_default_str();
        sub->add_option("--p", construct.p)->capture_default_str();
        sub->add_option("--e", construct.e)->capture_default_str();
    }
    auto* cs_ps = cs->add_subcommand("powersum", "generators that are sums of generic powers");
    cs_ps->add_option("--vars", construct.vars)->capture_default_str();
    cs_ps->add_option("--degree", construct.degree)->capture_default_str();
    cs_ps->add_option("--summands", construct.summands, "generic summands per generator, e.g. 5,1")
        ->capture_default_str();
    cs->add_subcommand("septics", "two random ternary septics and the {F_y1, G_y2} quotient");
    auto* cs_ch = cs->add_subcommand("compressed-h", "closed-form compressed h-vector");
    cs_ch->add_option("--vars", construct.vars)->capture_default_str();
    cs_ch->add_option("--degree", construct.degree)->capture_default_str();
    cs_ch->add_option("--type", construct.type)->capture_default_str();

    auto* vf = app.add_subcommand("verify", "reproduce the worked examples");
    vf->add_option("--suite", suite)->check(CLI::IsMember({"example4", "remark5", "remark6", "all"}))
        ->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "randomized audit of the bounds, one CSV record per (instance, d, c)");
    sw->add_option("--r", r_range, "variable counts, N or LO..HI")->capture_default_str();
    sw->add_option("--e", e_range, "socle degrees")->capture_default_str();
    sw->add_option("--t", t_range, "types")->capture_default_str();
    sw->add_option("--trials", sweep.trials)->capture_default_str();
    sw->add_option("--max-cols", sweep.max_cols, "skip instances with more top-degree monomials")
        ->capture_default_str();
    sw->add_option("--threads", sweep.threads, "worker threads (0 = all cores)")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back(); // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cfg.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Text;

    Streams io{out, err};
    try {
        if (!is_prime(cfg.prime)) throw Error(ErrorCode::InvalidArgument, std::to_string(cfg.prime) + " is not prime");
        if (*hv) return cmd_hvector(cfg, io, path);
        if (*bd) return cmd_bounds(cfg, io, h_text, d, c);
        if (*qt) return cmd_quotient(cfg, io, path, d, c);
        if (*tr) return cmd_truncate(cfg, io, path, d);
        if (*cs) return cmd_construct(cfg, io, cs->get_subcommands().front()->get_name(), construct);
        if (*vf) return cmd_verify(cfg, io, suite);
        if (*sw) {
            sweep.num_vars = IntRange::parse(r_range);
            sweep.socle_degree = IntRange::parse(e_range);
            sweep.type = IntRange::parse(t_range);
            return cmd_sweep(cfg, io, sweep);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return kExitUsage;
}

} // namespace apolab
