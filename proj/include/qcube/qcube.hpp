#pragma once

// Umbrella header.

#include "qcube/analysis.hpp"
#include "qcube/constructions.hpp"
#include "qcube/cube.hpp"
#include "qcube/errors.hpp"
#include "qcube/qset.hpp"
#include "qcube/rational.hpp"
#include "qcube/report.hpp"
#include "qcube/search.hpp"
#include "qcube/spectral.hpp"
#include "qcube/structures.hpp"
