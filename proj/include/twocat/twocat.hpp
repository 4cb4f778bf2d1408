#pragma once

#include "twocat/common.hpp"
#include "twocat/fibres.hpp"
#include "twocat/format.hpp"
#include "twocat/functors.hpp"
#include "twocat/grothendieck.hpp"
#include "twocat/hocolim.hpp"
#include "twocat/invariants.hpp"
#include "twocat/keyed.hpp"
#include "twocat/nerves.hpp"
#include "twocat/simplicial.hpp"
#include "twocat/two_category.hpp"
