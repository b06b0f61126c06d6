#pragma once

#include "mqs/curves.hpp"
#include "mqs/errors.hpp"
#include "mqs/fairness.hpp"
#include "mqs/geometry.hpp"
#include "mqs/minquad.hpp"
#include "mqs/point_set.hpp"
#include "mqs/quadrature.hpp"
#include "mqs/report.hpp"
#include "mqs/spline.hpp"
#include "mqs/svg.hpp"
