// SPDX-License-Identifier: Apache-2.0
//
// irsperf: coverage and ergodic capacity analysis of IRS-assisted links
// Copyright (C) 2026 The irsperf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irsperf/channel/config.hpp"

#include "irsperf/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace irsperf::channel {

namespace {

int line_of(const YAML::Node& node)
{
    return node.Mark().line >= 0 ? node.Mark().line + 1 : -1;
}

[[noreturn]] void fail(const YAML::Node& node, const std::string& key, const std::string& what)
{
    const int line = line_of(node);
    std::ostringstream msg;
    msg << "config";
    if (line > 0) msg << " line " << line;
    msg << ", key '" << key << "': " << what;
    throw ConfigError(msg.str(), line, key);
}

void reject_unknown(const YAML::Node& map, const std::set<std::string>& allowed, const std::string& prefix)
{
    for (const auto& entry : map) {
        const auto key = entry.first.as<std::string>();
        if (!allowed.count(key)) {
            fail(entry.first, prefix + key, "unknown key");
        }
    }
}

template <typename T>
void read(const YAML::Node& map, const std::string& key, const std::string& full_key, T& out)
{
    const YAML::Node node = map[key];
    if (!node) return;
    try {
        out = node.as<T>();
    } catch (const YAML::Exception&) {
        fail(node, full_key, "value has the wrong type");
    }
}

void read_point(const YAML::Node& map, const std::string& key, const std::string& full_key, Point2& out)
{
    const YAML::Node node = map[key];
    if (!node) return;
    if (!node.IsSequence() || node.size() != 2) {
        fail(node, full_key, "expected a two-element list");
    }
    try {
        out = {node[0].as<double>(), node[1].as<double>()};
    } catch (const YAML::Exception&) {
        fail(node, full_key, "entries must be numbers");
    }
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void ExperimentConfig::validate() const
{
    try {
        scenario.validate();
        path_loss.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (drops.count < 1) throw ConfigError("drops.count must be >= 1", -1, "drops.count");
    if (!(drops.dest_x_min <= drops.dest_x_max)) {
        throw ConfigError("drops.dest_x must satisfy min <= max", -1, "drops.dest_x");
    }
}

ExperimentConfig parse_config(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(std::string("config: ") + e.what(), e.mark.line + 1);
    }

    ExperimentConfig cfg;
    if (!root || root.IsNull()) return cfg;
    if (!root.IsMap()) throw ConfigError("config: top level must be a mapping", line_of(root));

    reject_unknown(root,
                   {"source", "irs", "destination", "n_elements", "tx_power_dbm", "noise_dbm",
                    "shadowing_std_db", "seed", "pathloss", "drops"},
                   "");
    read_point(root, "source", "source", cfg.scenario.source_pos);
    read_point(root, "irs", "irs", cfg.scenario.irs_pos);
    read_point(root, "destination", "destination", cfg.scenario.dest_pos);
    read(root, "n_elements", "n_elements", cfg.scenario.n_elements);
    read(root, "tx_power_dbm", "tx_power_dbm", cfg.scenario.tx_power_dbm);
    read(root, "noise_dbm", "noise_dbm", cfg.scenario.noise_dbm);
    read(root, "shadowing_std_db", "shadowing_std_db", cfg.scenario.shadowing_std_db);
    read(root, "seed", "seed", cfg.seed);

    if (const YAML::Node pl = root["pathloss"]) {
        if (!pl.IsMap()) fail(pl, "pathloss", "expected a mapping");
        reject_unknown(pl, {"gt_dbi", "gr_dbi", "exponent", "exponent_sd", "exponent_sr", "exponent_rd", "offset_db"},
                       "pathloss.");
        double common = 0.0;
        if (pl["exponent"]) {
            read(pl, "exponent", "pathloss.exponent", common);
            cfg.path_loss.exponent_sd = cfg.path_loss.exponent_sr = cfg.path_loss.exponent_rd = common;
        }
        read(pl, "gt_dbi", "pathloss.gt_dbi", cfg.path_loss.gt_dbi);
        read(pl, "gr_dbi", "pathloss.gr_dbi", cfg.path_loss.gr_dbi);
        read(pl, "exponent_sd", "pathloss.exponent_sd", cfg.path_loss.exponent_sd);
        read(pl, "exponent_sr", "pathloss.exponent_sr", cfg.path_loss.exponent_sr);
        read(pl, "exponent_rd", "pathloss.exponent_rd", cfg.path_loss.exponent_rd);
        read(pl, "offset_db", "pathloss.offset_db", cfg.path_loss.offset_db);
    }

    if (const YAML::Node dr = root["drops"]) {
        if (!dr.IsMap()) fail(dr, "drops", "expected a mapping");
        reject_unknown(dr, {"count", "dest_x", "dest_y"}, "drops.");
        read(dr, "count", "drops.count", cfg.drops.count);
        if (dr["dest_x"]) {
            Point2 range{cfg.drops.dest_x_min, cfg.drops.dest_x_max};
            read_point(dr, "dest_x", "drops.dest_x", range);
            cfg.drops.dest_x_min = range.x;
            cfg.drops.dest_x_max = range.y;
        }
        read(dr, "dest_y", "drops.dest_y", cfg.drops.dest_y);
    }

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::vector<std::string> describe(const ExperimentConfig& c)
{
    const auto& s = c.scenario;
    const auto& p = c.path_loss;
    return {
        "source = [" + fmt(s.source_pos.x) + ", " + fmt(s.source_pos.y) + "]",
        "irs = [" + fmt(s.irs_pos.x) + ", " + fmt(s.irs_pos.y) + "]",
        "destination = [" + fmt(s.dest_pos.x) + ", " + fmt(s.dest_pos.y) + "]",
        "n_elements = " + std::to_string(s.n_elements),
        "tx_power_dbm = " + fmt(s.tx_power_dbm),
        "noise_dbm = " + fmt(s.noise_dbm),
        "shadowing_std_db = " + fmt(s.shadowing_std_db),
        "seed = " + std::to_string(c.seed),
        "pathloss.gt_dbi = " + fmt(p.gt_dbi),
        "pathloss.gr_dbi = " + fmt(p.gr_dbi),
        "pathloss.exponent_sd = " + fmt(p.exponent_sd),
        "pathloss.exponent_sr = " + fmt(p.exponent_sr),
        "pathloss.exponent_rd = " + fmt(p.exponent_rd),
        "pathloss.offset_db = " + fmt(p.offset_db),
        "drops.count = " + std::to_string(c.drops.count),
        "drops.dest_x = [" + fmt(c.drops.dest_x_min) + ", " + fmt(c.drops.dest_x_max) + "]",
        "drops.dest_y = " + fmt(c.drops.dest_y),
    };
}

}  // namespace irsperf::channel
