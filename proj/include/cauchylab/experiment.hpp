#ifndef CAUCHYLAB_EXPERIMENT_HPP
#define CAUCHYLAB_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cauchylab/brownian.hpp"
#include "cauchylab/ergodic.hpp"
#include "cauchylab/pitman_williams.hpp"

// Named experiments binding the samplers, maps, orbits, and statistics into
// reproducible runs. Each experiment evaluates a fixed set of statistical
// gates; a report records every gate's observed value next to the threshold
// it was tested against. Reports are deterministic in (seed, workers):
// rerunning a configuration reproduces every non-timing byte.

namespace cauchylab {

enum class ExperimentKind { ExitSim, Orbit, InvarianceCheck, PwCheck, CfCheck };
enum class OutputFormat { Json, Csv };

// Which map an experiment drives. For Orbit/Invariance/PwCheck runs.
struct MapSelector {
    OrbitMap kind = OrbitMap::Boole;
    PWParams pw{};                 // kind == PitmanWilliams
    bool sech_map_selected = false;  // invariance-check of the sech-invariant map
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::ExitSim;
    std::uint64_t seed = 1;
    std::size_t n = 100000;
    DomainKind domain = DomainKind::UpperHalfPlane;
    double dt = 0.0;               // exit-sim: > 0 selects the Euler sampler
    std::optional<MapSelector> map;
    double x0 = 2.0;               // orbit start
    std::string observable;        // orbit: restrict to one builtin observable
    int workers = 0;               // 0 = available parallelism
    OutputFormat format = OutputFormat::Json;
    std::string out_path;          // empty = stdout
    bool dump_samples = false;
};

// One statistical gate: pass iff observed <= threshold.
struct Gate {
    std::string name;
    double observed = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct Report {
    // config echo
    std::string experiment;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    int workers = 0;
    std::map<std::string, std::string> selectors;  // domain/map/x0/dt/... as strings

    std::vector<Gate> gates;
    std::map<std::string, double> summary;         // extra statistics (quantiles, CF values, ...)
    std::map<std::string, std::uint64_t> counts;   // guard fires, dropped samples, failed paths
    std::map<std::string, double> timings_ms;
    bool all_pass = false;

    // The analyzed scalar samples, sorted; kept for --dump-samples output.
    std::vector<double> samples;
};

int default_workers();

Report run_experiment(const ExperimentConfig& cfg);

// Serialization. JSON carries the full report; CSV emits one row per gate
// (gate_name, observed, threshold, pass) plus, when dump_samples is set,
// sample/ecdf columns with one row per sample. Numeric fields round-trip at
// full precision in both formats. include_timings = false produces the
// canonical bytes used by determinism comparisons.
std::string report_to_json(const Report& r, bool include_timings = true);
Report report_from_json(const std::string& text);
std::string report_to_csv(const Report& r, bool dump_samples, bool include_timings = true);

// Writes in the configured format; throws std::runtime_error on IO failure.
void emit(const Report& r, const ExperimentConfig& cfg);

// Map selector syntax used by the CLI and the config echo:
// "boole", "simpson-newton", "sech-map", or "pw:a,b[,a1:b1[,a2:b2...]]".
MapSelector parse_map_selector(const std::string& text);
std::string map_selector_name(const MapSelector& m);

}  // namespace cauchylab

#endif
