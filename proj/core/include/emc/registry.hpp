#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "emc/model.hpp"

namespace emc {

// Parameters a bundled model may read. Unused ones are ignored.
struct ModelParams {
  unsigned n = 6;
  std::string variant = "correct";
  bool symm_must = false;
};

using ModelFactory = std::function<std::unique_ptr<Model>(const ModelParams&)>;

// Name -> factory table of the models compiled into the engine.
class ModelRegistry {
 public:
  // Registry preloaded with every bundled model.
  static ModelRegistry& builtin();

  void add(std::string name, std::string summary, ModelFactory factory);

  // Throws ConfigError for an unknown name or invalid parameters.
  std::unique_ptr<Model> create(const std::string& name,
                                const ModelParams& params) const;

  bool contains(const std::string& name) const;
  std::vector<std::pair<std::string, std::string>> list() const;

 private:
  struct Entry {
    std::string summary;
    ModelFactory factory;
  };
  std::map<std::string, Entry> entries_;
};

}  // namespace emc
