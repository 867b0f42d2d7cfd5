#pragma once

// Stage bookkeeping for resumable, reproducible runs. Each completed stage
// records its config and the hashes of its outputs; downstream stages refuse
// to run against missing or stale upstream artifacts.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace socio::pipeline {

struct StageRecord {
    std::string stage;
    nlohmann::json config;                        // knobs relevant to the stage
    std::map<std::string, std::string> inputs;    // external file -> hash
    std::map<std::string, std::string> outputs;   // workdir-relative artifact -> hash
    std::string error;                            // non-empty = stage failed
};

class Manifest {
public:
    static Manifest load(const std::string& workdir);  // empty when absent
    void save(const std::string& workdir) const;

    void record(StageRecord record);
    const StageRecord* find(const std::string& stage) const;

    // Throws ManifestError when a required stage has not run or any of its
    // recorded outputs is missing or has changed on disk.
    void require(const std::string& workdir, const std::string& dependent_stage,
                 const std::vector<std::string>& required_stages) const;

    // Stamps a failure entry for the stage and saves immediately.
    static void record_failure(const std::string& workdir, const std::string& stage,
                               const std::string& message);

private:
    std::vector<StageRecord> records_;
};

}  // namespace socio::pipeline
