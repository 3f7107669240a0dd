#include "cssent/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "cssent/errors.hpp"
#include "cssent/rng.hpp"
#include "cssent/sampling.hpp"

namespace cssent {

std::vector<std::size_t> bipartition_entropies_serial(const EntropyEvaluator& eval,
                                                      std::span<const Bipartition> parts) {
    std::vector<std::size_t> out(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) out[i] = eval(parts[i]);
    return out;
}

std::vector<std::size_t> bipartition_entropies(const EntropyEvaluator& eval,
                                               std::span<const Bipartition> parts, int workers) {
    if (workers <= 1) return bipartition_entropies_serial(eval, parts);
    std::vector<std::size_t> out(parts.size());
    const std::int64_t count = static_cast<std::int64_t>(parts.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
    for (std::int64_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = eval(parts[static_cast<std::size_t>(i)]);
    }
    return out;
}

PowerFit fit_power_law(std::span<const double> n_a, std::span<const double> mean_s) {
    if (n_a.size() != mean_s.size()) throw DimensionError("fit: length mismatch");
    if (n_a.size() < 2) throw ParameterError("fit: need at least two points");
    const std::size_t count = n_a.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const double x = std::log(n_a[i]);
        const double y = std::log(mean_s[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = count * sxx - sx * sx;
    PowerFit fit;
    fit.gamma = (count * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.gamma * sx) / count;
    fit.prefactor = std::exp(intercept);
    double ss_res = 0, ss_tot = 0;
    const double y_mean = sy / count;
    for (std::size_t i = 0; i < count; ++i) {
        const double x = std::log(n_a[i]);
        const double y = std::log(mean_s[i]);
        const double fitted = intercept + fit.gamma * x;
        ss_res += (y - fitted) * (y - fitted);
        ss_tot += (y - y_mean) * (y - y_mean);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

namespace {

// Integer sums keep the statistics exact, so the mean/std doubles are
// identical no matter how the samples were scheduled.
ScanRecord make_record(std::size_t n_a, std::span<const std::size_t> entropies) {
    ScanRecord rec;
    rec.n_a = n_a;
    rec.samples = entropies.size();
    std::uint64_t sum = 0, sum_sq = 0;
    for (std::size_t s : entropies) {
        sum += s;
        sum_sq += static_cast<std::uint64_t>(s) * s;
    }
    const double count = static_cast<double>(entropies.size());
    rec.mean_s = static_cast<double>(sum) / count;
    const double var = static_cast<double>(sum_sq) / count - rec.mean_s * rec.mean_s;
    rec.std_s = var > 0 ? std::sqrt(var) : 0.0;
    rec.i_a = static_cast<double>(n_a) - rec.mean_s;
    return rec;
}

void fill_di_dn(std::vector<ScanRecord>& records) {
    const std::size_t count = records.size();
    if (count < 2) return;
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t lo = j == 0 ? 0 : j - 1;
        const std::size_t hi = j + 1 == count ? j : j + 1;
        const double dn = static_cast<double>(records[hi].n_a) - static_cast<double>(records[lo].n_a);
        if (dn != 0) records[j].di_dn = (records[hi].i_a - records[lo].i_a) / dn;
    }
}

} // namespace

ScalingResult scaling_scan(const CssCode& code, std::size_t repeats, std::uint64_t seed,
                           int workers) {
    if (repeats == 0) throw ParameterError("scaling_scan: repeats must be >= 1");
    const EntropyEvaluator eval(code.hz);

    // Each repeat produces its own checkpoint list; repeats are independent.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> runs(repeats);
    const std::int64_t count = static_cast<std::int64_t>(repeats);
#pragma omp parallel for schedule(dynamic) num_threads(workers > 1 ? workers : 1) if (workers > 1)
    for (std::int64_t r = 0; r < count; ++r) {
        const auto seq = grown_subsystem_sequence(code, derive_seed(seed, static_cast<std::uint64_t>(r)));
        auto& run = runs[static_cast<std::size_t>(r)];
        run.reserve(seq.size());
        for (const Bipartition& part : seq) run.emplace_back(part.n_a(), eval(part));
    }

    ScalingResult result;
    if (runs[0].empty()) return result;

    for (const auto& [grid_na, grid_s] : runs[0]) {
        std::vector<std::size_t> values;
        values.reserve(repeats);
        for (const auto& run : runs) {
            // Nearest checkpoint by n_A, ties to the smaller one.
            std::size_t best = 0;
            std::size_t best_dist = static_cast<std::size_t>(-1);
            for (std::size_t i = 0; i < run.size(); ++i) {
                const std::size_t na = run[i].first;
                const std::size_t dist = na > grid_na ? na - grid_na : grid_na - na;
                if (dist < best_dist) {
                    best_dist = dist;
                    best = i;
                }
            }
            values.push_back(run[best].second);
        }
        result.records.push_back(make_record(grid_na, values));
    }

    std::vector<double> xs, ys;
    for (const ScanRecord& rec : result.records) {
        if (2 * rec.n_a < code.n && rec.mean_s > 0) {
            xs.push_back(static_cast<double>(rec.n_a));
            ys.push_back(rec.mean_s);
        }
    }
    if (xs.size() >= 2) result.fit = fit_power_law(xs, ys);
    return result;
}

std::vector<ScanRecord> discrepancy_scan(const CssCode& code, const std::vector<std::size_t>& grid,
                                         std::size_t samples_per_point, std::uint64_t seed,
                                         int workers) {
    if (samples_per_point == 0) throw ParameterError("discrepancy_scan: samples must be >= 1");
    for (std::size_t n_a : grid) {
        if (n_a > code.n) throw ParameterError("discrepancy_scan: grid value exceeds n");
    }
    const EntropyEvaluator eval(code.hz);

    std::vector<ScanRecord> records;
    records.reserve(grid.size());
    for (std::size_t point = 0; point < grid.size(); ++point) {
        std::vector<Bipartition> parts;
        parts.reserve(samples_per_point);
        for (std::size_t s = 0; s < samples_per_point; ++s) {
            const std::uint64_t stream = point * samples_per_point + s;
            parts.push_back(random_subsystem(code.n, grid[point], derive_seed(seed, stream)));
        }
        const std::vector<std::size_t> entropies = bipartition_entropies(eval, parts, workers);
        records.push_back(make_record(grid[point], entropies));
    }
    fill_di_dn(records);
    return records;
}

void write_csv(const std::string& code_name, std::size_t n, std::span<const ScanRecord> records,
               const PowerFit* fit, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "code,n,n_a,samples,mean_s,std_s,i_a,di_dn\n";
    char buf[64];
    auto fixed6 = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    for (const ScanRecord& rec : records) {
        out << code_name << ',' << n << ',' << rec.n_a << ',' << rec.samples << ','
            << fixed6(rec.mean_s) << ',' << fixed6(rec.std_s) << ',' << fixed6(rec.i_a) << ',';
        if (rec.di_dn) out << fixed6(*rec.di_dn);
        out << '\n';
    }
    if (fit) {
        out << "# fit gamma=" << fixed6(fit->gamma) << " prefactor=" << fixed6(fit->prefactor)
            << " r_squared=" << fixed6(fit->r_squared) << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace cssent
