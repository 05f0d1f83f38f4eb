#pragma once

// Learning Sugeno-integral capacities from data through fuzzy relational equations.

#include "capfre/subset.hpp"
#include "capfre/scale.hpp"
#include "capfre/capacity.hpp"
#include "capfre/sugeno.hpp"
#include "capfre/relational_system.hpp"
#include "capfre/chebyshev.hpp"
#include "capfre/learning.hpp"
#include "capfre/oracle.hpp"
