#pragma once

#include "symplab/classical_flow.hpp"
#include "symplab/pair_finder.hpp"
#include "symplab/params.hpp"
#include "symplab/phase_core.hpp"
#include "symplab/polynomial.hpp"
#include "symplab/quantum/dense.hpp"
#include "symplab/quantum/engine.hpp"
#include "symplab/quantum/grid.hpp"
#include "symplab/quantum/operator_expr.hpp"
#include "symplab/quantum/scheme.hpp"
#include "symplab/scalar.hpp"
#include "symplab/version.hpp"
