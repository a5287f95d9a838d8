#pragma once

#include "stratify/errors.hpp"
#include "stratify/linalg.hpp"
#include "stratify/algebra.hpp"
#include "stratify/representation.hpp"
#include "stratify/module_cat.hpp"
#include "stratify/homology.hpp"
#include "stratify/universe.hpp"
#include "stratify/torsion.hpp"
#include "stratify/tau_tilting.hpp"
#include "stratify/filtration.hpp"
#include "stratify/strat_systems.hpp"
#include "stratify/tau_exceptional.hpp"
#include "stratify/serialize.hpp"
#include "stratify/report.hpp"
