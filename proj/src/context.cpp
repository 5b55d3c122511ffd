#include "qhall/context.hpp"

namespace qhall {

namespace {

CatalogOptions catalog_options(int max_dim, const std::string& cache_dir) {
  CatalogOptions o;
  o.max_dim = max_dim;
  o.cache_dir = cache_dir;
  return o;
}

}  // namespace

Context::Context(QuiverConfig cfg, std::string cache_dir) : cfg_(std::move(cfg)), cache_dir_(std::move(cache_dir)) {
  FramedSeed seed = make_seed(cfg_);
  auto Q = std::make_shared<const ValuedQuiver>(cfg_.quiver);
  base_ = std::make_shared<const ModuleCategory>(Q, cfg_.q, catalog_options(cfg_.max_dim, cache_dir_));
  hall_ = std::make_unique<MorphismHall>(base_, seed);
}

const ModuleCategory& Context::framed() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!framed_) {
    auto Q = std::make_shared<const ValuedQuiver>(seed().framed());
    framed_ = std::make_shared<const ModuleCategory>(Q, cfg_.q, catalog_options(cfg_.max_dim, cache_dir_));
  }
  return *framed_;
}

const DerivedHall& Context::derived_base() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!dbase_) dbase_ = std::make_unique<DerivedHall>(base_);
  return *dbase_;
}

const DerivedHall& Context::derived_framed() const {
  framed();
  std::lock_guard<std::mutex> lock(mu_);
  if (!dframed_) dframed_ = std::make_unique<DerivedHall>(framed_, seed());
  return *dframed_;
}

}  // namespace qhall
