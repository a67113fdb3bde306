#pragma once

#include "couples/calculus.hpp"
#include "couples/constructions.hpp"
#include "couples/extremal.hpp"
#include "couples/json_io.hpp"
#include "couples/kcalc.hpp"
#include "couples/measure.hpp"
#include "couples/operators.hpp"
#include "couples/piecewise_linear.hpp"
#include "couples/rational.hpp"
#include "couples/simplex.hpp"
#include "couples/step_function.hpp"
#include "couples/verify.hpp"
