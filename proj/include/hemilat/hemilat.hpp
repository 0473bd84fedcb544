#ifndef HEMILAT_HEMILAT_HPP
#define HEMILAT_HEMILAT_HPP

#include "algebra.hpp"
#include "classify.hpp"
#include "congruence.hpp"
#include "constructions.hpp"
#include "dot.hpp"
#include "fixtures.hpp"
#include "json_io.hpp"
#include "parallel.hpp"
#include "search.hpp"
#include "symmetry.hpp"

#endif  // HEMILAT_HEMILAT_HPP
