#pragma once

#include "pdmosc/checks.hpp"
#include "pdmosc/classical.hpp"
#include "pdmosc/coherent.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/grid.hpp"
#include "pdmosc/operators.hpp"
#include "pdmosc/oracle.hpp"
#include "pdmosc/params.hpp"
#include "pdmosc/quadrature.hpp"
#include "pdmosc/special.hpp"
#include "pdmosc/spectrum.hpp"
#include "pdmosc/spectrum_result.hpp"
#include "pdmosc/susy.hpp"
#include "pdmosc/tridiag.hpp"
