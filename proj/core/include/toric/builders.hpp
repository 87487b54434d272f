#pragma once

#include <cstdint>
#include <span>

#include "toric/fan.hpp"

namespace toric {

/// P^n: rays e_1..e_n and -(e_1+...+e_n); every n-subset is a maximal cone.
Fan projective_space(std::size_t n);

/// Hirzebruch surface H_r with rays (1,0), (0,1), (-1,r), (0,-1).
Fan hirzebruch(std::uint64_t r);

/// Weighted projective space P(q_0,...,q_n) with rays e_1..e_n followed by
/// v_0 = -(q_1 e_1 + ... + q_n e_n) / q_0. Only weights giving an integral
/// primitive v_0 are accepted; anything else is "unsupported weights".
Fan weighted_projective(std::span<const std::int64_t> weights);

/// F1 x F2: rays of F1 padded with zeros, then rays of F2; maximal cones are
/// all unions of one maximal cone from each factor.
Fan product(const Fan& first, const Fan& second);

}  // namespace toric
