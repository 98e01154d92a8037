#pragma once

#include "linram/bipartite.hpp"
#include "linram/catalog.hpp"
#include "linram/class_spec.hpp"
#include "linram/crosscheck.hpp"
#include "linram/enumerate.hpp"
#include "linram/error.hpp"
#include "linram/formulas.hpp"
#include "linram/graph.hpp"
#include "linram/graph6.hpp"
#include "linram/invariants.hpp"
#include "linram/lemmas.hpp"
#include "linram/random_bip.hpp"
#include "linram/structure/decompose.hpp"
#include "linram/structure/kneser.hpp"
#include "linram/structure/p2p3.hpp"
#include "linram/structure/s123.hpp"
#include "linram/structure/split.hpp"
#include "linram/subgraph.hpp"
#include "linram/version.hpp"
#include "linram/witness.hpp"
