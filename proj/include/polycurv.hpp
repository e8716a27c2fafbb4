#pragma once

#include "polycurv/rational.hpp"
#include "polycurv/linalg.hpp"
#include "polycurv/lp.hpp"
#include "polycurv/dd.hpp"
#include "polycurv/cone.hpp"
#include "polycurv/polytope.hpp"
#include "polycurv/angle.hpp"
#include "polycurv/polyhedron.hpp"
#include "polycurv/family.hpp"
#include "polycurv/valuation.hpp"
#include "polycurv/analysis.hpp"
#include "polycurv/complexes.hpp"
