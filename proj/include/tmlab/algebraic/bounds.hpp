#pragma once

#include "tmlab/growth/bounds.hpp"

namespace tmlab::algebraic {

const growth::BoundRegistry& algebraic_bounds();
// growth-class and algebraic evaluators under one key space
const growth::BoundRegistry& all_bounds();

} // namespace tmlab::algebraic
