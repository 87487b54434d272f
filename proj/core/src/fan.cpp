#include "toric/fan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

class MultiplicityCache {
 public:
  explicit MultiplicityCache(const std::vector<std::vector<Cone>>& faces) {
    slots_.reserve(faces.size());
    for (const auto& level : faces) slots_.emplace_back(level.size());
  }

  std::optional<Integer> get(std::size_t dim, std::size_t index) const {
    const Slot& slot = slots_[dim][index];
    if (!slot.ready.load(std::memory_order_acquire)) return std::nullopt;
    return slot.value;
  }

  // Every writer stores the same value, so the first one wins.
  void put(std::size_t dim, std::size_t index, const Integer& value) {
    Slot& slot = slots_[dim][index];
    std::lock_guard lock(mutex_);
    if (slot.ready.load(std::memory_order_relaxed)) return;
    slot.value = value;
    slot.ready.store(true, std::memory_order_release);
  }

 private:
  struct Slot {
    Integer value;
    std::atomic<bool> ready{false};
  };
  std::vector<std::vector<Slot>> slots_;
  std::mutex mutex_;
};

namespace {

std::string format_vector(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

bool is_primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g == 1;
}

// Depth-first walk over sorted ray tuples. A tuple is a face iff some
// maximal cone contains it; `containing` tracks those cones for the prefix.
void collect_faces(const std::vector<std::vector<std::size_t>>& incidence,
                   std::vector<RayIndex>& prefix, const std::vector<std::size_t>& containing,
                   std::vector<std::vector<Cone>>& faces) {
  const RayIndex first = prefix.empty() ? 0 : prefix.back() + 1;
  std::vector<std::size_t> next;
  for (RayIndex j = first; j < incidence.size(); ++j) {
    next.clear();
    std::set_intersection(containing.begin(), containing.end(), incidence[j].begin(),
                          incidence[j].end(), std::back_inserter(next));
    if (next.empty()) continue;
    prefix.push_back(j);
    faces[prefix.size()].emplace_back(prefix);
    collect_faces(incidence, prefix, next, faces);
    prefix.pop_back();
  }
}

}  // namespace

Cone::Cone(std::vector<RayIndex> rays) : rays_(std::move(rays)) {
  std::sort(rays_.begin(), rays_.end());
  rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
}

bool Cone::contains(RayIndex i) const { return std::binary_search(rays_.begin(), rays_.end(), i); }

std::optional<std::size_t> Fan::find_cone(std::span<const RayIndex> rays) const {
  if (rays.empty() || rays.size() >= faces_.size()) return std::nullopt;
  const auto& level = faces_[rays.size()];
  auto it = std::lower_bound(level.begin(), level.end(), rays, [](const Cone& c, auto key) {
    return std::lexicographical_compare(c.rays().begin(), c.rays().end(), key.begin(), key.end());
  });
  if (it == level.end() || !std::equal(rays.begin(), rays.end(), it->rays().begin(), it->rays().end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

IntegerMatrix Fan::generator_matrix(std::span<const RayIndex> rays) const {
  IntegerMatrix m(dim_, rays.size());
  for (std::size_t j = 0; j < rays.size(); ++j) {
    const auto& v = rays_.at(rays[j]);
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = v[i];
  }
  return m;
}

Integer Fan::multiplicity(const Cone& cone) const {
  const auto index = find_cone(cone.rays());
  if (!index) throw InputError("not a cone of the fan");
  if (auto cached = cache_->get(cone.dim(), *index)) return *std::move(cached);
  Integer value = cone_multiplicity(generator_matrix(cone.rays()));
  cache_->put(cone.dim(), *index, value);
  return value;
}

Integer cone_multiplicity(const IntegerMatrix& generators) {
  const IntegerMatrix block = strip_zero_rows(hermite_normal_form(generators).hnf);
  // The block is upper triangular, so |det| is the product of its pivots.
  Integer product = 1;
  for (std::size_t i = 0; i < block.rows(); ++i) product *= block(i, i);
  return abs(product);
}

Fan build_fan(std::size_t ambient_dim, std::vector<LatticeVector> rays,
              const std::vector<std::vector<RayIndex>>& max_cones, FanOptions options) {
  if (ambient_dim == 0) throw InputError("ambient dimension must be at least 1");
  if (max_cones.empty()) throw InputError("fan has no maximal cones");

  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != ambient_dim)
      throw InputError("ray " + std::to_string(i) + " has " + std::to_string(rays[i].size()) +
                       " coordinates, expected " + std::to_string(ambient_dim));
  }
  if (options.validate) {
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (!is_primitive(rays[i]))
        throw InputError("ray not primitive: ray " + std::to_string(i) + " = " + format_vector(rays[i]));
    }
    std::map<LatticeVector, std::size_t> seen;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      auto [it, inserted] = seen.emplace(rays[i], i);
      if (!inserted)
        throw InputError("duplicate ray: rays " + std::to_string(it->second) + " and " +
                         std::to_string(i) + " are both " + format_vector(rays[i]));
    }
  }

  Fan fan;
  fan.dim_ = ambient_dim;
  fan.rays_ = std::move(rays);
  fan.incidence_.resize(fan.rays_.size());

  for (std::size_t c = 0; c < max_cones.size(); ++c) {
    for (RayIndex i : max_cones[c]) {
      if (i >= fan.rays_.size())
        throw InputError("maximal cone " + std::to_string(c) + " references ray " + std::to_string(i) +
                         " but only " + std::to_string(fan.rays_.size()) + " rays exist");
    }
    Cone cone(max_cones[c]);
    if (cone.dim() != ambient_dim || max_cones[c].size() != ambient_dim)
      throw InputError("maximal cone wrong dimension: maximal cone " + std::to_string(c) + " has " +
                       std::to_string(max_cones[c].size()) + " distinct rays, expected " +
                       std::to_string(ambient_dim));
    for (RayIndex i : cone.rays()) fan.incidence_[i].push_back(c);
    fan.max_cones_.push_back(std::move(cone));
  }

  if (options.validate) {
    for (std::size_t c = 0; c < fan.max_cones_.size(); ++c) {
      if (determinant(fan.generator_matrix(fan.max_cones_[c].rays())) == 0)
        throw InputError("not simplicial: maximal cone " + std::to_string(c) +
                         " has linearly dependent generators");
    }
    std::vector<Cone> sorted = fan.max_cones_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("duplicate maximal cone");
    for (std::size_t i = 0; i < fan.rays_.size(); ++i) {
      if (fan.incidence_[i].empty())
        throw InputError("ray " + std::to_string(i) + " is not in any maximal cone");
    }
    if (!wall_check(ambient_dim, fan.max_cones_)) throw InputError("fan fails completeness check");
  }

  fan.faces_.resize(ambient_dim + 1);
  std::vector<std::size_t> all(fan.max_cones_.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<RayIndex> prefix;
  collect_faces(fan.incidence_, prefix, all, fan.faces_);

  fan.cache_ = std::make_shared<MultiplicityCache>(fan.faces_);
  return fan;
}

const std::vector<std::vector<Cone>>& enumerate_cones(const Fan& fan) { return fan.face_table(); }

Integer multiplicity(const Fan& fan, const Cone& cone) { return fan.multiplicity(cone); }

bool is_smooth(const Fan& fan) {
  return std::all_of(fan.max_cones().begin(), fan.max_cones().end(),
                     [&](const Cone& c) { return fan.multiplicity(c) == 1; });
}

bool wall_check(std::size_t ambient_dim, std::span<const Cone> max_cones) {
  std::map<std::vector<RayIndex>, int> walls;
  for (const Cone& cone : max_cones) {
    if (cone.dim() != ambient_dim) return false;
    for (std::size_t skip = 0; skip < cone.dim(); ++skip) {
      std::vector<RayIndex> facet;
      facet.reserve(cone.dim() - 1);
      for (std::size_t k = 0; k < cone.dim(); ++k)
        if (k != skip) facet.push_back(cone.rays()[k]);
      ++walls[facet];
    }
  }
  return std::all_of(walls.begin(), walls.end(), [](const auto& w) { return w.second == 2; });
}

bool wall_check(const Fan& fan) { return wall_check(fan.ambient_dim(), fan.max_cones()); }

}  // namespace toric
