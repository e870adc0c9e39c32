#pragma once

#include "perrin_cordial/claims.hpp"
#include "perrin_cordial/constructors.hpp"
#include "perrin_cordial/graph.hpp"
#include "perrin_cordial/io.hpp"
#include "perrin_cordial/labeling.hpp"
#include "perrin_cordial/oracle.hpp"
#include "perrin_cordial/perrin.hpp"
