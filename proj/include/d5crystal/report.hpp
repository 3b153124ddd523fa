#pragma once

// Per-relation pass counts with the first failing witness, serialized as JSON.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace d5 {

using Json = nlohmann::ordered_json;

struct CheckResult {
    std::int64_t samples = 0;
    std::int64_t passed = 0;
    Json witness;  // null until the first failure

    bool ok() const { return samples > 0 && passed == samples; }
};

class Report {
public:
    Report(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

    /// Records one sample of `name`. `witness` is only invoked on the first failure.
    template <class WitnessFn>
    bool record(std::string const& name, bool ok, WitnessFn&& witness) {
        auto& c = checks_[name];
        ++c.samples;
        if (ok)
            ++c.passed;
        else if (c.witness.is_null())
            c.witness = witness();
        return ok;
    }

    bool record(std::string const& name, bool ok) {
        return record(name, ok, [] { return Json::object(); });
    }

    /// Diagnostic data that does not affect the verdict.
    void note(std::string const& key, Json value) { notes_[key] = std::move(value); }

    void set_param(std::string const& key, Json value) { params_[key] = std::move(value); }

    void merge(Report const& other) {
        for (auto const& [name, c] : other.checks_) {
            auto& mine = checks_[name];
            mine.samples += c.samples;
            mine.passed += c.passed;
            if (mine.witness.is_null()) mine.witness = c.witness;
        }
        for (auto const& [k, v] : other.notes_) notes_[k] = v;
    }

    bool ok() const {
        if (checks_.empty()) return false;
        for (auto const& [_, c] : checks_)
            if (!c.ok()) return false;
        return true;
    }

    std::map<std::string, CheckResult> const& checks() const { return checks_; }
    std::string const& suite() const { return suite_; }

    Json to_json() const {
        Json j;
        j["suite"] = suite_;
        j["seed"] = seed_;
        j["params"] = Json::object();
        for (auto const& [k, v] : params_) j["params"][k] = v;
        j["ok"] = ok();
        j["relations"] = Json::array();
        for (auto const& [name, c] : checks_) {
            Json r;
            r["name"] = name;
            r["samples"] = c.samples;
            r["passed"] = c.passed;
            r["ok"] = c.ok();
            if (!c.witness.is_null()) r["witness"] = c.witness;
            j["relations"].push_back(std::move(r));
        }
        if (!notes_.empty()) {
            j["notes"] = Json::object();
            for (auto const& [k, v] : notes_) j["notes"][k] = v;
        }
        return j;
    }

private:
    std::string suite_;
    std::uint64_t seed_;
    std::map<std::string, CheckResult> checks_;
    std::map<std::string, Json> notes_;
    std::map<std::string, Json> params_;
};

}  // namespace d5
