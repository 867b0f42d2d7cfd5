#include "socio/manifest.hpp"

#include <filesystem>
#include <fstream>

#include "socio/errors.hpp"
#include "socio/hash.hpp"

namespace socio::pipeline {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {
const char* kManifestName = "manifest.json";
}

Manifest Manifest::load(const std::string& workdir) {
    Manifest m;
    const fs::path path = fs::path(workdir) / kManifestName;
    std::ifstream in(path);
    if (!in) return m;
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ManifestError("corrupt manifest: " + path.string());
    const json stages = j.value("stages", json::array());
    for (const auto& rec : stages) {
        StageRecord r;
        r.stage = rec.value("stage", "");
        r.config = rec.value("config", json::object());
        const json inputs = rec.value("inputs", json::object());
        for (const auto& [k, v] : inputs.items()) {
            r.inputs[k] = v.get<std::string>();
        }
        const json outputs = rec.value("outputs", json::object());
        for (const auto& [k, v] : outputs.items()) {
            r.outputs[k] = v.get<std::string>();
        }
        r.error = rec.value("error", "");
        m.records_.push_back(std::move(r));
    }
    return m;
}

void Manifest::save(const std::string& workdir) const {
    json stages = json::array();
    for (const auto& r : records_) {
        json rec;
        rec["stage"] = r.stage;
        rec["config"] = r.config;
        rec["inputs"] = r.inputs;
        rec["outputs"] = r.outputs;
        if (!r.error.empty()) rec["error"] = r.error;
        stages.push_back(rec);
    }
    json j;
    j["version"] = 1;
    j["stages"] = stages;

    const fs::path path = fs::path(workdir) / kManifestName;
    std::ofstream out(path);
    if (!out) throw IoError("cannot write manifest: " + path.string());
    out << j.dump(2) << '\n';
}

void Manifest::record(StageRecord record) {
    for (auto& r : records_) {
        if (r.stage == record.stage) {
            r = std::move(record);
            return;
        }
    }
    records_.push_back(std::move(record));
}

const StageRecord* Manifest::find(const std::string& stage) const {
    for (const auto& r : records_) {
        if (r.stage == stage) return &r;
    }
    return nullptr;
}

void Manifest::require(const std::string& workdir, const std::string& dependent_stage,
                       const std::vector<std::string>& required_stages) const {
    for (const auto& stage : required_stages) {
        const StageRecord* rec = find(stage);
        if (!rec) {
            throw ManifestError("stage '" + dependent_stage + "' needs '" + stage +
                                "' to run first; run the `" + stage + "` subcommand");
        }
        if (!rec->error.empty()) {
            throw ManifestError("stage '" + stage + "' failed last time (" + rec->error +
                                "); rerun the `" + stage + "` subcommand");
        }
        for (const auto& [artifact, recorded_hash] : rec->outputs) {
            const fs::path path = fs::path(workdir) / artifact;
            if (!fs::exists(path)) {
                throw ManifestError("artifact " + artifact + " from stage '" + stage +
                                    "' is missing; rerun the `" + stage + "` subcommand");
            }
            if (hash_file(path.string()) != recorded_hash) {
                throw ManifestError("artifact " + artifact + " is stale (hash mismatch); rerun "
                                    "the `" + stage + "` subcommand");
            }
        }
    }
}

void Manifest::record_failure(const std::string& workdir, const std::string& stage,
                              const std::string& message) {
    fs::create_directories(workdir);
    Manifest m = load(workdir);
    StageRecord rec;
    rec.stage = stage;
    rec.error = message;
    m.record(std::move(rec));
    m.save(workdir);
}

}  // namespace socio::pipeline
