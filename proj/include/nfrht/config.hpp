#pragma once

// INI-style configuration: parsing, schema checking, and resolution into a
// runnable scenario plus sweep. Unknown sections or keys are rejected with
// their source position; out-of-range values are rejected with the violated
// invariant spelled out.
#include <string>
#include <vector>

#include "nfrht/spectrum.hpp"
#include "nfrht/sweep.hpp"

namespace nfrht {

// Parsed but not yet interpreted configuration text.
struct RawConfig {
  struct Entry {
    std::string section;
    std::string key;
    std::string value;
    int line = 0;  // zero for entries that did not come from a file
    int column = 0;
  };
  std::vector<Entry> entries;
};

RawConfig parse_config_text(const std::string& text);
RawConfig parse_config_file(const std::string& path);

// True when section/key is part of the schema.
bool known_config_key(const std::string& section, const std::string& key);

struct RunConfig {
  ScenarioConfig scenario;
  SweepSpec sweep;
  std::vector<std::string> warnings;
};

// Applies file entries, then overrides in order (later wins), on top of the
// built-in defaults. The sweep grid re-defaults whenever the kind changes,
// then explicitly set grid fields are applied on top.
RunConfig finalize_config(const RawConfig& raw,
                          const std::vector<RawConfig::Entry>& overrides = {});

RunConfig load_config(const std::string& path);

// Stable text names used by snapshots and the C boundary.
const char* dressing_name(Dressing d);
const char* sweep_kind_name(SweepKind k);
const char* spacing_name(GridSpacing s);
bool parse_sweep_kind(const std::string& text, SweepKind& out);

// Fully resolved configuration, one "[section] key = value" line per entry,
// suitable for embedding in output headers. Deterministic.
std::vector<std::string> config_snapshot(const ScenarioConfig& sc,
                                         const SweepSpec& sweep);

}  // namespace nfrht
