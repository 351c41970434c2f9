#pragma once

#include "ncres/errors.hpp"
#include "ncres/gaussian_rational.hpp"
#include "ncres/symbol_poly.hpp"
#include "ncres/rat_xi.hpp"
#include "ncres/clifford.hpp"
#include "ncres/gamma_oracle.hpp"
#include "ncres/symbol_library.hpp"
#include "ncres/quadrature.hpp"
#include "ncres/coefficients.hpp"
#include "ncres/pipeline.hpp"
#include "ncres/fixtures.hpp"
#include "ncres/report.hpp"
