#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sallylab/ideal.hpp"
#include "sallylab/integer.hpp"
#include "sallylab/sally.hpp"

namespace sallylab {

/// SplitMix64 (Steele, Lea, Flood). The stream for instance i of a sweep
/// starts from state mix64(seed + mix64(i)), where mix64 is the SplitMix64
/// output finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  std::uint64_t next() noexcept;
  /// Uniform integer in [lo, hi] by rejection; unbiased.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) noexcept;

  static std::uint64_t mix64(std::uint64_t z) noexcept;

 private:
  std::uint64_t state_;
};

inline constexpr const char* kGeneratorName = "splitmix64";

enum class SearchMode { Hypotheses, NoMCondition, All };
enum class Sampler {
  /// Extra generators uniform over the box strictly below Q's exponents.
  Box,
  /// Same box, restricted to points of the Newton polyhedron of Q, so every
  /// instance has Q as a reduction.
  Newton,
};

std::string to_string(SearchMode mode);
std::string to_string(Sampler sampler);
SearchMode parse_search_mode(const std::string& text);
Sampler parse_sampler(const std::string& text);

struct SearchConfig {
  std::size_t dim = 2;
  /// Q = (x_1^{a_1}, ..., x_d^{a_d}) with each a_i uniform in [2, box].
  Exponent box = 12;
  std::size_t extra_min = 1;
  std::size_t extra_max = 4;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  SearchMode mode = SearchMode::Hypotheses;
  Sampler sampler = Sampler::Box;
  /// Defaults to default_window(dim).
  std::optional<std::size_t> window;

  std::size_t effective_window() const;
  /// Throws std::invalid_argument.
  void validate() const;
};

struct Instance {
  MonomialIdeal q;
  MonomialIdeal ideal;
};

/// Deterministic in (config.seed, index) and the sampling fields of config.
Instance random_instance(const SearchConfig& config, std::uint64_t index);

struct Violation {
  std::uint64_t index;
  std::string check;
  /// False for the open question (main inequality without m I^2 in QI).
  bool guaranteed;
  std::string detail;
  MonomialIdeal q;
  MonomialIdeal ideal;
};

/// (rank, m, s_1, s_2)
using HistogramKey = std::tuple<Integer, Integer, Integer, Integer>;

struct CheckTally {
  std::size_t evaluated = 0;
  std::size_t failed = 0;
};

struct SearchReport {
  SearchConfig config;
  std::size_t generated = 0;
  std::size_t kept = 0;
  std::map<std::string, std::size_t> skipped;
  std::map<std::string, std::size_t> tags;
  std::map<HistogramKey, std::size_t> histogram;
  std::map<std::string, CheckTally> checks;
  std::vector<Violation> violations;

  bool has_guaranteed_violation() const;
};

/// Worker count: SALLYLAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
unsigned worker_count();

/// Runs the sweep. The report does not depend on the number of workers.
SearchReport sweep(const SearchConfig& config, unsigned workers = 0);

}  // namespace sallylab
