#ifndef HYPERSTAB_HYPERSTAB_HPP
#define HYPERSTAB_HYPERSTAB_HPP

// Umbrella header: pulls in the whole library.

#include "hyperstab/bipartite.hpp"
#include "hyperstab/constructions.hpp"
#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"
#include "hyperstab/harness.hpp"
#include "hyperstab/json_io.hpp"
#include "hyperstab/links.hpp"
#include "hyperstab/rng.hpp"
#include "hyperstab/shifting.hpp"
#include "hyperstab/solvers.hpp"

#endif  // HYPERSTAB_HYPERSTAB_HPP
