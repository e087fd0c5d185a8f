#pragma once

#include "bottleneck_dp.hpp"
#include "errors.hpp"
#include "ext_real.hpp"
#include "geometry.hpp"
#include "harness.hpp"
#include "instance.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "predicates.hpp"
#include "reference.hpp"
#include "single_cardinality.hpp"
#include "spanning.hpp"
