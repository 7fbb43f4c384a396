#include "apolab/sweep.hpp"

#include "apolab/bounds.hpp"
#include "apolab/constructions.hpp"
#include "apolab/errors.hpp"
#include "apolab/inverse_system.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

namespace apolab {

namespace {

struct Instance {
    std::size_t r;
    unsigned e;
    std::size_t t;
    unsigned trial;
    u64 seed;
};

struct InstanceOutcome {
    std::vector<SweepRecord> records;
    std::string skipped;
};

LevelPresentation sparse_presentation(const PrimeField& field, const Instance& in, SeededRng& rng) {
    const std::size_t cols = monomial_count(in.r, in.e);
    for (int attempt = 0; attempt < 3; ++attempt) {
        LevelPresentation p;
        p.num_vars = in.r;
        p.socle_degree = in.e;
        for (std::size_t j = 0; j < in.t; ++j) {
            Form f(in.r, in.e);
            const u64 terms = rng.uniform(1, 3);
            for (u64 k = 0; k < terms; ++k) {
                f.add_term(field, monomial_unrank(in.r, in.e, rng.uniform(0, cols - 1)), field.random_nonzero(rng));
            }
            p.generators.push_back(std::move(f));
        }
        try {
            validate_level(field, p);
            return p;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DependentGenerators) throw;
        }
    }
    throw Error(ErrorCode::DependentGenerators, "sparse generators stayed dependent after 3 draws");
}

LevelPresentation random_ambient(const PrimeField& field, const Instance& in, SeededRng& rng) {
    switch (in.trial % 3) {
    case 0: {
        for (int attempt = 0; attempt < 3; ++attempt) {
            LevelPresentation p;
            p.num_vars = in.r;
            p.socle_degree = in.e;
            for (std::size_t j = 0; j < in.t; ++j) p.generators.push_back(random_form(field, in.r, in.e, rng));
            try {
                validate_level(field, p);
                return p;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::DependentGenerators) throw;
            }
        }
        throw Error(ErrorCode::DependentGenerators, "dense generators stayed dependent after 3 draws");
    }
    case 1: {
        std::vector<std::size_t> counts(in.t);
        for (auto& n : counts) n = rng.uniform(1, in.r + 1);
        return power_sum_presentation(field, PowerSumSpec::generic(in.r, in.e, counts), rng);
    }
    default: return sparse_presentation(field, in, rng);
    }
}

std::string describe(const Instance& in) {
    return "r=" + std::to_string(in.r) + " e=" + std::to_string(in.e) + " t=" + std::to_string(in.t) +
           " trial=" + std::to_string(in.trial);
}

InstanceOutcome run_instance(const PrimeField& field, const SweepConfig& config, const Instance& in) {
    InstanceOutcome out;
    if (in.e == 0) {
        out.skipped = describe(in) + ": socle degree 0 is not supported";
        return out;
    }
    const std::size_t cols = monomial_count(in.r, in.e);
    if (cols > config.max_cols) {
        out.skipped = describe(in) + ": " + std::to_string(cols) + " columns exceeds the ceiling " +
                      std::to_string(config.max_cols);
        return out;
    }
    if (in.t > cols) {
        out.skipped = describe(in) + ": type exceeds the " + std::to_string(cols) + " forms of degree e";
        return out;
    }
    if (field.prime() <= in.e) {
        out.skipped = describe(in) + ": prime does not exceed e";
        return out;
    }

    SeededRng rng(in.seed);
    LevelPresentation ambient;
    try {
        ambient = random_ambient(field, in, rng);
    } catch (const Error& e) {
        out.skipped = describe(in) + ": " + e.what();
        return out;
    }
    const HVector h = hvector(field, ambient);

    u64 local = 0;
    for (unsigned d = 1; d <= in.e; ++d) {
        for (std::uint64_t c = 1; c <= h[d]; ++c, ++local) {
            SweepRecord rec;
            rec.r = in.r;
            rec.e = in.e;
            rec.t = in.t;
            rec.d = d;
            rec.c = c;
            rec.seed = derive_seed(in.seed, local);
            rec.ambient_h = h;
            SeededRng qrng(rec.seed);
            rec.quotient_h = hvector(field, generic_quotient(field, ambient, d, c, qrng));
            const BoundsReport report = bounds_report(h, d, c);
            rec.lower_int = report.lower_int;
            rec.upper = report.upper;
            rec.within = check_within(rec.quotient_h, h, d, c).pass;
            for (unsigned i = 1; i <= d; ++i) {
                const auto H = static_cast<std::int64_t>(rec.quotient_h[i]);
                rec.lower_gap.push_back(H - static_cast<std::int64_t>(rec.lower_int[i]));
                rec.upper_gap.push_back(static_cast<std::int64_t>(rec.upper[i]) - H);
            }
            out.records.push_back(std::move(rec));
        }
    }
    return out;
}

template <typename T>
std::string dash_join(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += '-';
        if constexpr (std::is_signed_v<T>) {
            if (v[i] < 0) {
                s += '~';
                s += std::to_string(-static_cast<long long>(v[i]));
                continue;
            }
        }
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

IntRange IntRange::parse(std::string_view text) {
    auto number = [&](std::string_view piece) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw Error(ErrorCode::ParseError, "bad range '" + std::string(text) + "'");
        }
        return v;
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        const unsigned v = number(text);
        return {v, v};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

SweepResult run_sweep(const PrimeField& field, const SweepConfig& config) {
    std::vector<Instance> instances;
    if (!config.num_vars.empty() && !config.socle_degree.empty() && !config.type.empty()) {
        for (unsigned r = config.num_vars.lo; r <= config.num_vars.hi; ++r) {
            if (r == 0) continue;
            for (unsigned e = config.socle_degree.lo; e <= config.socle_degree.hi; ++e) {
                for (unsigned t = config.type.lo; t <= config.type.hi; ++t) {
                    if (t == 0) continue;
                    for (unsigned trial = 0; trial < config.trials; ++trial) {
                        instances.push_back({r, e, t, trial, derive_seed(config.seed, instances.size())});
                    }
                }
            }
        }
    }

    std::vector<InstanceOutcome> outcomes(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < instances.size(); k = next++) {
            outcomes[k] = run_instance(field, config, instances[k]);
        }
    };
    unsigned threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, instances.size())));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();

    SweepResult result;
    result.instances = instances.size();
    for (auto& o : outcomes) {
        if (!o.skipped.empty()) result.skipped.push_back(std::move(o.skipped));
        for (auto& r : o.records) result.records.push_back(std::move(r));
    }
    return result;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << kSweepHeader << '\n';
    for (const SweepRecord& r : records) {
        out << r.r << ',' << r.e << ',' << r.t << ',' << r.d << ',' << r.c << ',' << r.seed << ','
            << r.ambient_h.join("-") << ',' << r.quotient_h.join("-") << ',' << dash_join(r.lower_int) << ','
            << dash_join(r.upper) << ',' << (r.within ? "true" : "false") << ',' << dash_join(r.lower_gap) << ','
            << dash_join(r.upper_gap) << '\n';
    }
}

std::string sweep_summary(const SweepResult& result) {
    std::size_t within = 0;
    std::int64_t lower_min = std::numeric_limits<std::int64_t>::max();
    std::int64_t upper_min = std::numeric_limits<std::int64_t>::max();
    double lower_sum = 0;
    double upper_sum = 0;
    std::size_t entries = 0;
    for (const SweepRecord& r : result.records) {
        within += r.within ? 1 : 0;
        for (std::size_t i = 0; i < r.lower_gap.size(); ++i) {
            lower_min = std::min(lower_min, r.lower_gap[i]);
            upper_min = std::min(upper_min, r.upper_gap[i]);
            lower_sum += static_cast<double>(r.lower_gap[i]);
            upper_sum += static_cast<double>(r.upper_gap[i]);
            ++entries;
        }
    }
    std::ostringstream os;
    os << "instances " << result.instances << " skipped " << result.skipped.size() << " records "
       << result.records.size() << " within " << within << " violations " << result.records.size() - within;
    if (entries > 0) {
        os << std::fixed << std::setprecision(3) << " lower_gap min " << lower_min << " mean "
           << lower_sum / static_cast<double>(entries) << " upper_gap min " << upper_min << " mean "
           << upper_sum / static_cast<double>(entries);
    }
    return os.str();
}

} // namespace apolab
