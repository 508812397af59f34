#pragma once

#include "tropica/canonical.hpp"
#include "tropica/chambers.hpp"
#include "tropica/cover_checks.hpp"
#include "tropica/elliptic_covers.hpp"
#include "tropica/enumerate.hpp"
#include "tropica/errors.hpp"
#include "tropica/feynman_series.hpp"
#include "tropica/graph_complex.hpp"
#include "tropica/line_covers.hpp"
#include "tropica/linalg.hpp"
#include "tropica/moduli_space.hpp"
#include "tropica/multigraph.hpp"
#include "tropica/parallel.hpp"
#include "tropica/partition.hpp"
#include "tropica/polynomial.hpp"
#include "tropica/rational.hpp"
#include "tropica/sym_oracle.hpp"
#include "tropica/version.hpp"
