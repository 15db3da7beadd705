#pragma once

#include "polyvor/affine.hpp"
#include "polyvor/ball.hpp"
#include "polyvor/counting.hpp"
#include "polyvor/curve.hpp"
#include "polyvor/error.hpp"
#include "polyvor/hull.hpp"
#include "polyvor/metric_json.hpp"
#include "polyvor/metrics.hpp"
#include "polyvor/norm.hpp"
#include "polyvor/rational.hpp"
#include "polyvor/render.hpp"
#include "polyvor/transport.hpp"
#include "polyvor/voronoi.hpp"
