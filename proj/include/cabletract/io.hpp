#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cabletract {

/// Thrown on invalid inputs to any model routine.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root of the bundled data files. CABLETRACT_DATA overrides the build-time path.
std::string data_dir();
std::string data_path(const std::string& name);

/// Minimal CSV table: header names plus string cells. Lines starting with '#' are skipped.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int col(const std::string& name) const;  // -1 if absent
    const std::string& at(std::size_t row, const std::string& name) const;
    double num(std::size_t row, const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

/// Fixed-precision number formatting used by every CSV writer.
std::string fmt(double v, int prec = 6);

/// Writes rows to a CSV file with a leading '#' metadata comment.
class CsvWriter {
public:
    CsvWriter(std::string path, const std::string& comment, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    void close();
    ~CsvWriter();

private:
    std::string path_;
    std::string buf_;
    bool closed_ = false;
};

// ---- deterministic randomness ----

/// splitmix64 finaliser; used to derive independent per-sample streams.
std::uint64_t mix64(std::uint64_t x);
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

using Rng = std::mt19937_64;

constexpr std::uint64_t kDefaultSeed = 42;

/// U[0,1) from the top 53 bits; independent of the standard library's distribution code.
inline double uniform01(Rng& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
inline double uniform(Rng& g, double lo, double hi) { return lo + (hi - lo) * uniform01(g); }

/// Linear-interpolation percentile (type 7) on an unsorted copy; q in [0,1].
double percentile(std::vector<double> v, double q);
double median(std::vector<double> v);

}  // namespace cabletract
