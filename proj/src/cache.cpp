#include "cache.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace rrps {

using ordered_json = nlohmann::ordered_json;

ComponentStore::ComponentStore(std::optional<std::filesystem::path> cache_dir,
                               std::string version)
    : dir_(std::move(cache_dir)), version_(std::move(version)) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::filesystem::path ComponentStore::entry_path(Label l, Bidegree bd) const {
  std::string name = std::string(label_name(l)) + "_c" + std::to_string(bd.charge2) +
                     "_w" + std::to_string(bd.weight4) + "_v" + version_ + ".json";
  return *dir_ / name;
}

std::shared_ptr<const GradedComponentBasis> ComponentStore::get(Label l, Bidegree bd) {
  std::pair<int, Bidegree> key{int(l), bd};
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  std::shared_ptr<const GradedComponentBasis> b;
  if (dir_) b = try_load(l, bd);
  if (!b) {
    b = std::make_shared<GradedComponentBasis>(component_basis(l, bd));
    if (dir_) save(*b);
  }
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = memo_.emplace(key, b);
  return it->second;  // first writer wins; identical content either way
}

std::shared_ptr<const GradedComponentBasis> ComponentStore::try_load(Label l, Bidegree bd) {
  auto path = entry_path(l, bd);
  std::ifstream in(path);
  if (!in) return nullptr;
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    auto b = std::make_shared<GradedComponentBasis>(
        component_from_json(buf.str(), version_));
    if (b->label != l || b->bd != bd)
      throw std::invalid_argument("entry does not match its key");
    return b;
  } catch (const std::exception &e) {
    std::cerr << "warning: corrupt cache entry " << path.string() << " (" << e.what()
              << "), recomputing\n";
    return nullptr;
  }
}

void ComponentStore::save(const GradedComponentBasis &b) {
  auto path = entry_path(b.label, b.bd);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(
             std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000);
  try {
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string());
      out << component_to_json(b, version_);
      if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (const std::exception &e) {
    std::cerr << "warning: cache write failed: " << e.what() << "\n";
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
  }
}

std::string component_to_json(const GradedComponentBasis &b, const std::string &version) {
  ordered_json j;
  j["version"] = version;
  j["label"] = label_name(b.label);
  j["charge2"] = b.bd.charge2;
  j["weight4"] = b.bd.weight4;
  j["monomials"] = b.monomials;
  j["dim"] = b.dim;
  ordered_json pivots = ordered_json::array();
  for (const auto &p : b.pivots) {
    ordered_json t;
    t["parts"] = p.parts;
    t["k"] = p.k;
    pivots.push_back(std::move(t));
  }
  j["pivots"] = std::move(pivots);
  ordered_json rows = ordered_json::array();
  for (const auto &row : b.reduced) rows.push_back(ordered_json::parse(fock_to_json(row)));
  j["reduced"] = std::move(rows);
  return j.dump();
}

GradedComponentBasis component_from_json(const std::string &text,
                                         const std::string &version) {
  ordered_json j = ordered_json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("component json: not an object");
  for (const char *key : {"version", "label", "charge2", "weight4", "monomials", "dim",
                          "pivots", "reduced"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("component json: missing ") + key);
  if (j["version"].get<std::string>() != version)
    throw std::invalid_argument("component json: version mismatch");
  GradedComponentBasis b;
  auto l = label_from_name(j["label"].get<std::string>());
  if (!l) throw std::invalid_argument("component json: bad label");
  b.label = *l;
  b.bd = {j["charge2"].get<int>(), j["weight4"].get<int>()};
  for (const auto &m : j["monomials"]) b.monomials.push_back(m.get<std::vector<int>>());
  b.dim = j["dim"].get<int>();
  for (const auto &p : j["pivots"]) {
    BasisState s;
    s.parts = p.at("parts").get<std::vector<int>>();
    s.k = p.at("k").get<int>();
    b.pivots.push_back(std::move(s));
  }
  for (const auto &row : j["reduced"]) b.reduced.push_back(fock_from_json(row.dump()));
  if (int(b.reduced.size()) != b.dim || int(b.pivots.size()) != b.dim ||
      b.dim > int(b.monomials.size()))
    throw std::invalid_argument("component json: inconsistent dimensions");
  return b;
}

}  // namespace rrps
