#pragma once

// Umbrella header.

#include "ssqlab/action.hpp"
#include "ssqlab/arith.hpp"
#include "ssqlab/corpus.hpp"
#include "ssqlab/group.hpp"
#include "ssqlab/group_io.hpp"
#include "ssqlab/lattice.hpp"
#include "ssqlab/perm.hpp"
#include "ssqlab/quasinorm.hpp"
#include "ssqlab/report.hpp"
#include "ssqlab/series.hpp"
#include "ssqlab/structure.hpp"
#include "ssqlab/suites.hpp"
