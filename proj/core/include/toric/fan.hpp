#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

using RayIndex = std::uint32_t;
using LatticeVector = std::vector<Integer>;

/// A simplicial cone, identified by the sorted indices of its rays.
class Cone {
 public:
  Cone() = default;
  /// Sorts the indices and drops repeats.
  explicit Cone(std::vector<RayIndex> rays);

  std::span<const RayIndex> rays() const noexcept { return rays_; }
  std::size_t dim() const noexcept { return rays_.size(); }
  bool contains(RayIndex i) const;

  auto operator<=>(const Cone&) const = default;
  bool operator==(const Cone&) const = default;

 private:
  std::vector<RayIndex> rays_;
};

struct FanOptions {
  /// When false only structural checks run (index range, cone sizes);
  /// primitivity, simpliciality, coverage and the wall condition are
  /// taken on trust.
  bool validate = true;
};

class MultiplicityCache;

/// A complete simplicial fan with its face table.
///
/// Immutable after construction. Cone multiplicities are computed on
/// first request and cached; concurrent first requests are safe.
class Fan {
 public:
  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t ray_count() const noexcept { return rays_.size(); }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const LatticeVector& ray(RayIndex i) const { return rays_.at(i); }

  /// Maximal cones in input order.
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }

  /// All cones of dimension d (1 <= d <= n), sorted lexicographically.
  const std::vector<Cone>& cones(std::size_t d) const { return faces_.at(d); }
  const std::vector<std::vector<Cone>>& face_table() const noexcept { return faces_; }

  /// Index of the cone spanned by `rays` (sorted) within cones(rays.size()).
  std::optional<std::size_t> find_cone(std::span<const RayIndex> rays) const;
  bool is_cone(std::span<const RayIndex> rays) const { return find_cone(rays).has_value(); }

  /// Maximal cones containing ray i, as indices into max_cones().
  std::span<const std::size_t> max_cones_containing(RayIndex i) const { return incidence_.at(i); }

  /// n x d matrix whose columns are the generators of the given rays.
  IntegerMatrix generator_matrix(std::span<const RayIndex> rays) const;

  /// Lattice index of the sublattice spanned by the cone's generators,
  /// computed through the Hermite normal form. Cached per cone.
  Integer multiplicity(const Cone& cone) const;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool operator==(const Fan& other) const {
    return dim_ == other.dim_ && rays_ == other.rays_ && max_cones_ == other.max_cones_;
  }

 private:
  friend Fan build_fan(std::size_t, std::vector<LatticeVector>,
                       const std::vector<std::vector<RayIndex>>&, FanOptions);

  Fan() = default;

  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> max_cones_;
  std::vector<std::vector<Cone>> faces_;  // faces_[d], d = 0..n; faces_[0] is empty
  std::vector<std::vector<std::size_t>> incidence_;
  std::shared_ptr<MultiplicityCache> cache_;
  std::string name_;
};

/// Validates the input and builds the face table.
///
/// Errors (InputError): "ray not primitive", "duplicate ray", "not simplicial",
/// "maximal cone wrong dimension", "fan fails completeness check", plus
/// structural errors for out-of-range indices or uncovered rays.
Fan build_fan(std::size_t ambient_dim, std::vector<LatticeVector> rays,
              const std::vector<std::vector<RayIndex>>& max_cones, FanOptions options = {});

/// Cone table indexed by dimension; entry 0 is empty.
const std::vector<std::vector<Cone>>& enumerate_cones(const Fan& fan);

/// |det| of the stripped Hermite block of a full-column-rank generator matrix.
Integer cone_multiplicity(const IntegerMatrix& generators);

Integer multiplicity(const Fan& fan, const Cone& cone);

/// True iff every maximal cone has multiplicity 1.
bool is_smooth(const Fan& fan);

/// Every (n-1)-face of a maximal cone lies in exactly two maximal cones.
bool wall_check(const Fan& fan);
bool wall_check(std::size_t ambient_dim, std::span<const Cone> max_cones);

}  // namespace toric
