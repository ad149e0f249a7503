#pragma once

#include "sperner/binomial.hpp"
#include "sperner/cascade_shadow.hpp"
#include "sperner/check_report.hpp"
#include "sperner/difference_calculus.hpp"
#include "sperner/extremal_verifier.hpp"
#include "sperner/family.hpp"
#include "sperner/family_io.hpp"
#include "sperner/parallel.hpp"
#include "sperner/rational.hpp"
#include "sperner/set_mask.hpp"
#include "sperner/shadow_sweeps.hpp"
#include "sperner/sperner_normalize.hpp"
#include "sperner/squashed_order.hpp"
#include "sperner/subset_lattice.hpp"
