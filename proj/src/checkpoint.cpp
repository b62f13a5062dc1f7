#include "psi/checkpoint.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace psi {

using nlohmann::json;

namespace {

BigNat decimal_field(const json& j, const char* key) {
  const std::string s = j.at(key).get<std::string>();
  return parse_decimal(s);
}

void require_keys(const json& j, const std::set<std::string>& keys, const std::string& what) {
  if (!j.is_object()) throw CheckpointError(what + " must be an object");
  std::set<std::string> present;
  for (const auto& item : j.items()) present.insert(item.key());
  if (present != keys) throw CheckpointError(what + " has unexpected or missing keys");
}

}  // namespace

std::string checkpoint_to_string(const SweepCheckpoint& cp) {
  json doc = json::object();
  doc["version"] = cp.version;
  doc["max_done"] = cp.max_done;
  doc["collisions"] = json::array();
  for (const auto& c : cp.collisions) {
    doc["collisions"].push_back({{"order", c.order},
                                 {"first", c.first},
                                 {"second", c.second},
                                 {"psi", to_decimal(c.psi)}});
  }
  doc["divisible_hits"] = json::array();
  for (const auto& h : cp.divisible_hits) {
    doc["divisible_hits"].push_back({{"order", h.order},
                                     {"group", h.group},
                                     {"psi", to_decimal(h.psi)},
                                     {"quotient", to_decimal(h.quotient)}});
  }
  return doc.dump(2) + "\n";
}

SweepCheckpoint checkpoint_from_string(const std::string& text) {
  SweepCheckpoint cp;
  try {
    const json doc = json::parse(text);
    require_keys(doc, {"version", "max_done", "collisions", "divisible_hits"}, "checkpoint");
    cp.version = doc.at("version").get<int>();
    if (cp.version != kCheckpointVersion) {
      throw CheckpointError("checkpoint version " + std::to_string(cp.version) +
                            " is not supported (expected " + std::to_string(kCheckpointVersion) +
                            ")");
    }
    cp.max_done = doc.at("max_done").get<std::uint64_t>();
    for (const auto& c : doc.at("collisions")) {
      require_keys(c, {"order", "first", "second", "psi"}, "collision record");
      cp.collisions.push_back({c.at("order").get<std::uint64_t>(), c.at("first").get<std::string>(),
                               c.at("second").get<std::string>(), decimal_field(c, "psi")});
    }
    for (const auto& h : doc.at("divisible_hits")) {
      require_keys(h, {"order", "group", "psi", "quotient"}, "divisible hit");
      cp.divisible_hits.push_back({h.at("order").get<std::uint64_t>(),
                                   h.at("group").get<std::string>(), decimal_field(h, "psi"),
                                   decimal_field(h, "quotient")});
    }
  } catch (const CheckpointError&) {
    throw;
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("corrupt checkpoint: ") + e.what());
  }
  if (!std::is_sorted(cp.collisions.begin(), cp.collisions.end(),
                      [](const auto& a, const auto& b) { return a.order < b.order; }) ||
      !std::is_sorted(cp.divisible_hits.begin(), cp.divisible_hits.end(),
                      [](const auto& a, const auto& b) { return a.order < b.order; })) {
    throw CheckpointError("corrupt checkpoint: records are not sorted by order");
  }
  for (const auto& c : cp.collisions) {
    if (c.order > cp.max_done) throw CheckpointError("corrupt checkpoint: record beyond max_done");
  }
  for (const auto& h : cp.divisible_hits) {
    if (h.order > cp.max_done) throw CheckpointError("corrupt checkpoint: record beyond max_done");
  }
  return cp;
}

void save_checkpoint(const std::filesystem::path& path, const SweepCheckpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot write " + tmp.string());
    out << checkpoint_to_string(cp);
    out.flush();
    if (!out) throw CheckpointError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SweepCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot read checkpoint " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_string(buf.str());
}

}  // namespace psi
