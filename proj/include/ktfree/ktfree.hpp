#pragma once

#include "ktfree/bigint.hpp"
#include "ktfree/bitset.hpp"
#include "ktfree/bounds.hpp"
#include "ktfree/cliques.hpp"
#include "ktfree/constructions.hpp"
#include "ktfree/errors.hpp"
#include "ktfree/graph.hpp"
#include "ktfree/graph_io.hpp"
#include "ktfree/minors.hpp"
#include "ktfree/parallel.hpp"
#include "ktfree/report_json.hpp"
#include "ktfree/search.hpp"
