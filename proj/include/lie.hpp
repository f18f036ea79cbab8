#pragma once

#include "lie/rational.hpp"
#include "lie/matrix.hpp"
#include "lie/echelon.hpp"
#include "lie/subspace.hpp"
#include "lie/polynomial.hpp"
#include "lie/algebra.hpp"
#include "lie/derivations.hpp"
#include "lie/constructions.hpp"
#include "lie/report.hpp"
#include "lie/weights.hpp"
