#pragma once

#include <span>
#include <vector>

#include "origami/tower.hpp"

namespace origami::detail {

using Coords = std::vector<Rational>;
using CSpan = std::span<const Rational>;

bool all_zero(CSpan a);
Coords zeros(size_t n);
void add_into(Coords& acc, CSpan b);
void sub_into(Coords& acc, CSpan b);
Coords scaled(CSpan a, const Rational& c);

Coords mul(const TowerField& F, CSpan a, CSpan b);
Coords inv(const TowerField& F, CSpan a);
// Columns of multiplication by a over the parent field: result[j][r] is the
// r-th parent block of a * g^j.
std::vector<std::vector<Coords>> multiplication_matrix(const TowerField& F, CSpan a);
// Norm of a from F down to F's parent.
Coords norm_down(const TowerField& F, CSpan a);

}  // namespace origami::detail
