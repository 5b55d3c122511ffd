#pragma once

#include <memory>
#include <mutex>
#include <string>

#include "qhall/config.hpp"
#include "qhall/derived_hall.hpp"
#include "qhall/hall_morph.hpp"

namespace qhall {

/// Everything a config determines: the seed, the module category over Q, the
/// morphism Hall algebra, and (built on first use) the framed category with
/// its derived Hall engine.
class Context {
 public:
  explicit Context(QuiverConfig cfg, std::string cache_dir = "");

  const QuiverConfig& config() const { return cfg_; }
  int q() const { return cfg_.q; }
  int n() const { return cfg_.quiver.size(); }
  const FramedSeed& seed() const { return hall_->seed(); }
  const ModuleCategory& base() const { return *base_; }
  const std::shared_ptr<const ModuleCategory>& base_ptr() const { return base_; }
  const MorphismHall& hall() const { return *hall_; }

  /// Derived Hall engine over Q (no seed), for comparison with the morphism
  /// Hall algebra.
  const DerivedHall& derived_base() const;
  /// Derived Hall engine over the framed quiver with the config's seed.
  const DerivedHall& derived_framed() const;
  const ModuleCategory& framed() const;

 private:
  QuiverConfig cfg_;
  std::string cache_dir_;
  std::shared_ptr<const ModuleCategory> base_;
  std::unique_ptr<MorphismHall> hall_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const ModuleCategory> framed_;
  mutable std::unique_ptr<DerivedHall> dbase_;
  mutable std::unique_ptr<DerivedHall> dframed_;
};

}  // namespace qhall
