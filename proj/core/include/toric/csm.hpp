#pragma once

#include <map>

#include "toric/chow.hpp"
#include "toric/fan.hpp"

namespace toric {

struct CsmOptions {
  /// Compute every multiplicity through the Hermite normal form even when
  /// the fan is smooth.
  bool force_hnf = false;
  /// Worker threads for multiplicity computations; 0 means all cores.
  unsigned threads = 0;
};

struct CsmResult {
  GradedClass csm_class;  // normal form, constant term 1
  Integer euler;
  /// d -> normal form of the sum of [V(sigma)] over cones of dimension d
  /// (d = 0 is the trivial cone, i.e. the fundamental class 1).
  std::map<std::size_t, GradedClass> per_dim_contributions;

  bool operator==(const CsmResult&) const = default;
};

/// c_SM(X) = sum over all cones sigma of mult(sigma) * prod_{i in sigma} x_i,
/// reduced to normal form, together with its degree.
///
/// Throws InternalError("inconsistent fan data") if the degree is not an
/// integer.
CsmResult compute_csm(const Fan& fan, const ChowPresentation& presentation, const CsmOptions& options = {});

GradedClass csm_class(const Fan& fan, const ChowPresentation& presentation, const CsmOptions& options = {});

/// With euler_only only the maximal cones are visited; otherwise the degree
/// of the full class is taken.
Integer euler_characteristic(const Fan& fan, const ChowPresentation& presentation, bool euler_only,
                             const CsmOptions& options = {});
Integer euler_characteristic(const Fan& fan, bool euler_only, const CsmOptions& options = {});

/// Number of maximal cones.
Integer euler_by_cone_count(const Fan& fan);

/// True when every multiplicity may be taken to be 1 without Hermite forms.
bool smooth_fast_path(const Fan& fan);

}  // namespace toric
