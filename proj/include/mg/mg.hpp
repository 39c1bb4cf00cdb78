#pragma once

#include "mg/scalar.hpp"
#include "mg/geom.hpp"
#include "mg/metrics.hpp"
#include "mg/circles.hpp"
#include "mg/tangents.hpp"
#include "mg/monge.hpp"
#include "mg/render.hpp"
#include "mg/io.hpp"
#include "mg/fuzz.hpp"
