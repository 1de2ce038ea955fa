#pragma once

#include "pitm/cases.hpp"
#include "pitm/engine.hpp"
#include "pitm/errors.hpp"
#include "pitm/laplace.hpp"
#include "pitm/numeric.hpp"
#include "pitm/oracle.hpp"
#include "pitm/report.hpp"
#include "pitm/rk4.hpp"
#include "pitm/ring_element.hpp"
#include "pitm/scalar.hpp"
#include "pitm/symbol_poly.hpp"
#include "pitm/text.hpp"
#include "pitm/time_series.hpp"
#include "pitm/verify.hpp"
