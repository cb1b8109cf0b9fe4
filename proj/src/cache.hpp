#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "principal.hpp"
#include "version.hpp"

namespace rrps {

// Memoizing store for component bases with an optional on-disk JSON cache.
// Entries are immutable once computed.  Disk entries are keyed by (label,
// bidegree, version): a version bump is a cache miss, and a corrupt or
// mismatched file is recomputed and rewritten with a warning on stderr.
// Writes go through a temp file and an atomic rename, so concurrent writers
// of the same key are harmless (the content is deterministic anyway).
class ComponentStore {
 public:
  explicit ComponentStore(std::optional<std::filesystem::path> cache_dir = std::nullopt,
                          std::string version = kVersion);

  std::shared_ptr<const GradedComponentBasis> get(Label l, Bidegree bd);

  const std::optional<std::filesystem::path> &cache_dir() const { return dir_; }
  std::filesystem::path entry_path(Label l, Bidegree bd) const;

 private:
  std::shared_ptr<const GradedComponentBasis> try_load(Label l, Bidegree bd);
  void save(const GradedComponentBasis &b);

  std::optional<std::filesystem::path> dir_;
  std::string version_;
  std::mutex mu_;
  std::map<std::pair<int, Bidegree>, std::shared_ptr<const GradedComponentBasis>> memo_;
};

// On-disk form of a component basis.  The spanning family is cheap to
// recompute and is not persisted; loaded entries carry monomials, the reduced
// basis, pivots, and the dimension.
std::string component_to_json(const GradedComponentBasis &b, const std::string &version);
GradedComponentBasis component_from_json(const std::string &text,
                                         const std::string &version);

}  // namespace rrps
