#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhall/fp.hpp"
#include "qhall/intmatrix.hpp"
#include "qhall/quiver.hpp"

namespace qhall {

/// A representation of a simply-laced quiver over F_q: one vector space F_q^{m_i}
/// per vertex and one m_head x m_tail matrix per arrow copy (in the order of
/// ValuedQuiver::arrow_list()).
class Representation {
 public:
  Representation(std::shared_ptr<const ValuedQuiver> quiver, int q, IntVec dims,
                 std::vector<FpMatrix> maps);

  static Representation zero(std::shared_ptr<const ValuedQuiver> quiver, int q);
  static Representation simple(std::shared_ptr<const ValuedQuiver> quiver, int q, int i);
  /// P_i: basis of paths starting at i.
  static Representation projective(std::shared_ptr<const ValuedQuiver> quiver, int q, int i);
  /// I_i: dual basis of paths ending at i.
  static Representation injective(std::shared_ptr<const ValuedQuiver> quiver, int q, int i);

  const ValuedQuiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const ValuedQuiver>& quiver_ptr() const { return quiver_; }
  int q() const { return q_; }
  const IntVec& dims() const { return dims_; }
  int dim(int i) const { return dims_[i]; }
  int total_dim() const { return total(dims_); }
  int arrow_count() const { return static_cast<int>(maps_.size()); }
  const FpMatrix& map(int a) const { return maps_[a]; }
  const std::vector<FpMatrix>& maps() const { return maps_; }

  Representation direct_sum(const Representation& o) const;
  Representation power(int k) const;
  /// Base change by invertible g_i: A_a -> g_head A_a g_tail^{-1}.
  Representation conjugate(const std::vector<FpMatrix>& g) const;

  /// Same quiver object (or an equal one) and same q.
  void check_compatible(const Representation& o) const;

  /// Identical matrices (not isomorphism).
  friend bool operator==(const Representation& a, const Representation& b) {
    return a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }
  friend bool operator<(const Representation& a, const Representation& b) {
    if (a.dims_ != b.dims_) return a.dims_ < b.dims_;
    return a.maps_ < b.maps_;
  }

  std::string to_string() const;

 private:
  std::shared_ptr<const ValuedQuiver> quiver_;
  int q_;
  IntVec dims_;
  std::vector<FpMatrix> maps_;
};

/// A morphism of representations: one n_i x m_i matrix per vertex.
using Morphism = std::vector<FpMatrix>;

std::vector<Morphism> hom_basis(const Representation& M, const Representation& N);
int hom_dim(const Representation& M, const Representation& N);
/// hom_dim - Euler form; a negative value aborts.
int ext_dim(const Representation& M, const Representation& N);

bool is_morphism(const Morphism& f, const Representation& M, const Representation& N);
bool is_iso(const Morphism& f);
bool is_nilpotent_endo(const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism combine(const std::vector<Morphism>& basis, const std::vector<int>& coeffs, int q,
                 const Representation& M, const Representation& N);

/// Visits every submodule of M with dimension vector e as per-vertex column
/// bases (m_i x e_i).  Return false from fn to stop.
void for_each_submodule(const Representation& M, const IntVec& e,
                        const std::function<bool(const std::vector<FpMatrix>&)>& fn);
long long gr_count(const Representation& M, const IntVec& e);
/// Total number of submodules, enumerated independently of gr_count by
/// walking all subspace tuples without dimension constraints.
long long submodule_count(const Representation& M);

/// Sub- and quotient representations for an arrow-stable subspace tuple.
std::pair<Representation, Representation> sub_and_quotient(const Representation& M,
                                                           const std::vector<FpMatrix>& U);
Representation kernel_rep(const Morphism& f, const Representation& M, const Representation& N);
Representation cokernel_rep(const Morphism& f, const Representation& M, const Representation& N);

/// Dimension vector of the top M / rad M, rad at i being the sum of images of
/// incoming arrows.
IntVec top_vector(const Representation& M);

struct ProjResolution {
  IntVec top;             // P_M = sum top_i P_i
  Representation cover;   // P_M
  Representation kernel;  // Omega_M
  Morphism cover_map;     // P_M -> M, surjective
};

ProjResolution min_proj_resolution(const Representation& M);

/// End(M) is local: every endomorphism is nilpotent or invertible.  Exhaustive
/// over End when q^{dim End} <= exhaustive_cap, otherwise a seeded random
/// search for a splitting endomorphism.
bool is_indecomposable(const Representation& M, long long exhaustive_cap = 65536);
/// Searches Hom(M, N) for an isomorphism.
bool isomorphic_search(const Representation& M, const Representation& N,
                       long long exhaustive_cap = 1 << 20);
/// Direct count of invertible endomorphisms; throws kBoundExceeded when
/// q^{dim End} > cap.
mpz_class aut_order_enumerate(const Representation& M, long long cap = 1 << 22);
/// Splits M into indecomposable summands using Fitting decompositions.
std::vector<Representation> split_indecomposables(const Representation& M);

struct CatalogEntry {
  std::string label;
  Representation rep;
  bool projective = false;
  int proj_vertex = -1;
  bool injective = false;
  bool simple = false;
  bool rigid = false;
  int end_dim = 1;
  /// Degree of End / rad End over F_q.
  int residue_degree = 1;
};

/// Multiplicity vector over the catalog of indecomposables.
struct IsoClass {
  std::vector<int> mult;
  bool is_zero() const {
    for (int m : mult)
      if (m) return false;
    return true;
  }
  friend auto operator<=>(const IsoClass&, const IsoClass&) = default;
  friend bool operator==(const IsoClass&, const IsoClass&) = default;
};

struct CatalogOptions {
  int max_dim = 4;
  long long exhaustive_cap = 65536;
  /// Directory for the persisted catalog cache; empty disables it.
  std::string cache_dir;
};

/// Indecomposables of rep(Q, F_q) up to a total-dimension bound, found by
/// enumerating every representation of every dimension vector with connected
/// support.  The indecomposable projectives are always included.
class IndecCatalog {
 public:
  static IndecCatalog build(std::shared_ptr<const ValuedQuiver> quiver, int q,
                            const CatalogOptions& opts);

  int size() const { return static_cast<int>(entries_.size()); }
  const CatalogEntry& entry(int i) const { return entries_.at(i); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  int q() const { return q_; }
  int max_dim() const { return max_dim_; }
  const ValuedQuiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const ValuedQuiver>& quiver_ptr() const { return quiver_; }
  /// Every indecomposable of the quiver is present (Dynkin quivers whose
  /// positive roots all fit under the bound).
  bool complete() const { return complete_; }
  bool dynkin() const { return dynkin_; }
  /// H(i, j) = dim Hom(X_i, X_j).
  const IntMatrix& hom_matrix() const { return H_; }
  int projective_index(int vertex) const { return proj_index_.at(vertex); }
  int simple_index(int vertex) const;
  /// Index by label; -1 when absent.
  int find_label(const std::string& label) const;
  /// Whether cache load succeeded (for diagnostics).
  bool loaded_from_cache() const { return from_cache_; }

  /// Decomposition of an arbitrary representation.
  IsoClass classify(const Representation& R) const;
  /// Fingerprint route only (requires an invertible Hom matrix); nullopt if
  /// the solution is not a valid multiplicity vector.
  std::optional<IsoClass> classify_fingerprint(const Representation& R) const;
  /// Splitting route only.
  IsoClass classify_split(const Representation& R) const;

  /// Positive roots of the Tits form (Dynkin case), else empty.
  static std::vector<IntVec> positive_roots(const ValuedQuiver& q, int limit = 400);

  std::string cache_key() const;
  std::string to_json() const;

 private:
  void finish(bool complete_hint);

  std::shared_ptr<const ValuedQuiver> quiver_;
  int q_ = 2;
  int max_dim_ = 0;
  long long cap_ = 65536;
  bool complete_ = false;
  bool dynkin_ = false;
  bool fingerprint_ok_ = false;
  bool from_cache_ = false;
  std::vector<CatalogEntry> entries_;
  IntMatrix H_;
  std::vector<std::vector<mpq_class>> Hinv_;
  std::vector<int> proj_index_;
  mutable std::mutex memo_mu_;
  mutable std::map<Representation, IsoClass> memo_;

 public:
  IndecCatalog() = default;
  IndecCatalog(IndecCatalog&& o) noexcept;
  IndecCatalog& operator=(IndecCatalog&& o) noexcept;
};

/// The module category with memoized Hall-type counts over a catalog.
class ModuleCategory {
 public:
  ModuleCategory(std::shared_ptr<const ValuedQuiver> quiver, int q, const CatalogOptions& opts);

  const ValuedQuiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const ValuedQuiver>& quiver_ptr() const { return quiver_; }
  int q() const { return q_; }
  int n() const { return quiver_->size(); }
  const IndecCatalog& catalog() const { return catalog_; }

  IsoClass zero() const;
  IsoClass indec(int idx, int mult = 1) const;
  IsoClass sum(const IsoClass& a, const IsoClass& b) const;
  IsoClass scaled(const IsoClass& a, int k) const;
  /// Difference a - b; fails if b is not a summand of a.
  IsoClass difference(const IsoClass& a, const IsoClass& b) const;
  IntVec dim(const IsoClass& c) const;
  int total_dim(const IsoClass& c) const { return total(dim(c)); }
  std::string label(const IsoClass& c) const;
  /// Parses "S1^2+P1" or "0".
  IsoClass parse_label(const std::string& text) const;
  const Representation& rep(const IsoClass& c) const;
  IsoClass classify(const Representation& R) const { return catalog_.classify(R); }

  /// sum_i mult_i P_i.
  IsoClass proj_class(const IntVec& mult) const;
  bool is_projective(const IsoClass& c) const;
  IntVec proj_mult(const IsoClass& c) const;
  /// Columns are Dim P_i.
  const IntMatrix& proj_dims() const { return proj_dims_; }
  IntVec proj_dim(const IntVec& mult) const { return proj_dims_ * mult; }
  std::string proj_label(const IntVec& mult) const;
  IntVec parse_proj_label(const std::string& text) const;

  int hom_dim(const IsoClass& a, const IsoClass& b) const;
  int ext_dim(const IsoClass& a, const IsoClass& b) const;
  int euler(const IntVec& a, const IntVec& b) const { return euler_form(*quiver_, a, b); }
  bool rigid(const IsoClass& a) const { return ext_dim(a, a) == 0; }

  /// |Aut| from the Krull-Schmidt data.
  mpz_class aut_order(const IsoClass& c) const;

  /// All classes with dimension vector d (multisets of catalog entries).
  const std::vector<IsoClass>& classes_of_dim(const IntVec& d) const;

  /// (quotient class, sub class) -> number of submodules of rep(L) with
  /// dimension vector e realizing that pair.
  const std::map<std::pair<IsoClass, IsoClass>, long long>& sub_quotient_table(
      const IsoClass& L, const IntVec& e) const;
  /// F^L_{MN}: submodules N' of L with N' = N and L/N' = M.
  long long hall_number(const IsoClass& L, const IsoClass& M, const IsoClass& N) const;

  /// Direct enumeration of Ext^1(M, N) by middle term: L -> |Ext^1(M,N)_L|.
  const std::map<IsoClass, long long>& extension_counts(const IsoClass& M, const IsoClass& N) const;
  /// F^L_{MN} |Hom(M,N)| a_M a_N / a_L, required to be integral.
  mpz_class ext_count_rp(const IsoClass& M, const IsoClass& N, const IsoClass& L) const;

  /// Direct enumeration of f: P -> M by (kernel class, cokernel class).
  const std::map<std::pair<IsoClass, IsoClass>, long long>& hom_fiber_direct(
      const IsoClass& P, const IsoClass& M) const;
  /// sum_L a_L F^P_{LQ} F^M_{BL}.
  mpz_class hom_fiber_formula(const IsoClass& P, const IsoClass& M, const IsoClass& Q,
                              const IsoClass& B) const;

  long long gr_count(const IsoClass& M, const IntVec& e) const;

  /// Top vector a and Omega multiplicities b of the minimal projective
  /// resolution, computed from an explicit cover map.
  std::pair<IntVec, IntVec> resolution(const IsoClass& M) const;

 private:
  std::shared_ptr<const ValuedQuiver> quiver_;
  int q_;
  IndecCatalog catalog_;
  IntMatrix proj_dims_;

  mutable std::mutex mu_;
  mutable std::map<IsoClass, std::unique_ptr<Representation>> reps_;
  mutable std::map<IntVec, std::unique_ptr<std::vector<IsoClass>>> classes_;
  mutable std::map<std::pair<IsoClass, IntVec>,
                   std::unique_ptr<std::map<std::pair<IsoClass, IsoClass>, long long>>>
      subq_;
  mutable std::map<std::pair<IsoClass, IsoClass>, std::unique_ptr<std::map<IsoClass, long long>>> ext_;
  mutable std::map<std::pair<IsoClass, IsoClass>,
                   std::unique_ptr<std::map<std::pair<IsoClass, IsoClass>, long long>>>
      fiber_;
  mutable std::map<IsoClass, std::pair<IntVec, IntVec>> res_;
  mutable std::map<IsoClass, mpz_class> aut_;
};

mpz_class gl_order(int q, int k);

}  // namespace qhall
