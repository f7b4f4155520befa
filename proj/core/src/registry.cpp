#include "emc/registry.hpp"

#include "emc/errors.hpp"
#include "emc/models/token_ring.hpp"

namespace emc {

ModelRegistry& ModelRegistry::builtin() {
  static ModelRegistry registry = [] {
    ModelRegistry r;
    r.add("tokenring",
          "demand-driven token ring of n customers and n servers "
          "(variants: correct, faulty-guard, modified-progress, broken-mutex)",
          [](const ModelParams& p) -> std::unique_ptr<Model> {
            return std::make_unique<models::TokenRing>(
                p.n, models::parse_token_ring_variant(p.variant), p.symm_must);
          });
    return r;
  }();
  return registry;
}

void ModelRegistry::add(std::string name, std::string summary,
                        ModelFactory factory) {
  entries_[std::move(name)] = Entry{std::move(summary), std::move(factory)};
}

std::unique_ptr<Model> ModelRegistry::create(const std::string& name,
                                             const ModelParams& params) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw ConfigError("unknown model '" + name + "'");
  return it->second.factory(params);
}

bool ModelRegistry::contains(const std::string& name) const {
  return entries_.count(name) != 0;
}

std::vector<std::pair<std::string, std::string>> ModelRegistry::list() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, entry] : entries_) out.emplace_back(name, entry.summary);
  return out;
}

}  // namespace emc
