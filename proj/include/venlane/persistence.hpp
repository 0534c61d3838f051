#pragma once

#include "venlane/circuit.hpp"
#include "venlane/stimgen.hpp"
#include "venlane/trainer.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace venlane::persistence {

using json = nlohmann::json;

class CheckpointError : public std::runtime_error {
 public:
  explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// ---------------------------------------------------------------------------
// Config <-> JSON. Field names match the struct members exactly. Parsing
// starts from the defaults, so partial objects are accepted; unknown keys are
// rejected.

json to_json(const snn::CircuitConfig& c);
json to_json(const trainer::TrainConfig& c);
json to_json(const stimgen::TaskSpec& t);
json to_json(const trainer::TrainHistory& h);

void from_json(const json& j, snn::CircuitConfig& c);
void from_json(const json& j, trainer::TrainConfig& c);
void from_json(const json& j, stimgen::TaskSpec& t);
trainer::TrainHistory history_from_json(const json& j);

/// FNV-1a 64-bit over the canonical (sorted-key) JSON dump.
std::uint64_t hash_json(const json& j);
std::string hex64(std::uint64_t v);

// ---------------------------------------------------------------------------
// Tensor container: 8-byte magic, uint32 little-endian header length, UTF-8
// JSON header carrying a tensor directory, then the concatenated payload.
// Directory offsets are relative to the start of the payload.

struct TensorBlob {
  std::string name;
  std::vector<std::int64_t> shape;
  std::string dtype;  // "float32_le", "uint8", "int32_le"
  std::vector<std::uint8_t> bytes;
};

struct Container {
  json header;  // without the "tensors" directory
  std::vector<TensorBlob> tensors;

  const TensorBlob* find(const std::string& name) const;
};

void write_container(const std::filesystem::path& path, const char (&magic)[9], const Container& c);
Container read_container(const std::filesystem::path& path, const char (&magic)[9]);

inline constexpr char kCheckpointMagic[9] = "VENCKPT1";
inline constexpr char kDatasetMagic[9] = "VENDATA1";

struct Checkpoint {
  snn::CircuitParams params;
  json metadata = json::object();
};

void save_checkpoint(const snn::CircuitParams& params, const std::filesystem::path& path,
                     const json& metadata = json::object());
Checkpoint load_checkpoint(const std::filesystem::path& path);

void save_dataset(const stimgen::DatasetSplits& data, const stimgen::TaskSpec& task, std::uint64_t seed,
                  const std::filesystem::path& path);
stimgen::DatasetSplits load_dataset(const std::filesystem::path& path);
/// Cache key of (task, seed).
std::string dataset_key(const stimgen::TaskSpec& task, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Results documents.

inline constexpr int kSchemaVersion = 1;

struct SeedRecord {
  std::string condition;
  std::uint64_t seed = 0;
  std::map<std::string, std::optional<double>> metrics;
  json extra = json::object();  // unrecognized fields, preserved on round-trip
};

struct AggregateRecord {
  std::string condition;
  std::string metric;
  std::optional<double> mean;
  std::optional<double> sd;
  int n = 0;
};

struct TestRecord {
  std::string a;
  std::string b;
  std::string metric;
  std::optional<double> t;
  std::optional<double> p;
  int df = 0;
  int n = 0;
};

struct ResultsDocument {
  int schema_version = kSchemaVersion;
  std::string experiment;
  std::string tool_version = VENLANE_VERSION;
  json config = json::object();
  std::vector<std::uint64_t> seeds;
  std::vector<SeedRecord> per_seed;
  std::vector<AggregateRecord> aggregates;
  std::vector<TestRecord> tests;
  json data = json::object();    // experiment-specific payload
  json extra = json::object();   // unrecognized top-level fields

  /// Rows of `per_seed` for one condition, in stored order.
  std::vector<const SeedRecord*> rows(const std::string& condition) const;
  /// Values of one metric for one condition, skipping absent entries.
  std::vector<double> column(const std::string& condition, const std::string& metric) const;
};

json to_json(const ResultsDocument& doc);
/// Validates the schema; every problem is listed in the thrown SchemaError.
ResultsDocument results_from_json(const json& j);

void write_results(const ResultsDocument& doc, const std::filesystem::path& path);
ResultsDocument read_results(const std::filesystem::path& path);

/// Writes `bytes` to `path` via a temporary file and rename.
void write_atomically(const std::filesystem::path& path, const std::string& bytes);

}  // namespace venlane::persistence
