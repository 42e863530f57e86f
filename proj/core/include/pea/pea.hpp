#pragma once

#include "pea/cluster.hpp"
#include "pea/csv.hpp"
#include "pea/datagen.hpp"
#include "pea/errors.hpp"
#include "pea/fit.hpp"
#include "pea/format.hpp"
#include "pea/kmeans.hpp"
#include "pea/metrics.hpp"
#include "pea/model_io.hpp"
#include "pea/objectives.hpp"
#include "pea/parallel.hpp"
#include "pea/rng.hpp"
#include "pea/types.hpp"
