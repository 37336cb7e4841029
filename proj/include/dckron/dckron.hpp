#pragma once

#include "dckron/connectivity.hpp"
#include "dckron/eigenvalues.hpp"
#include "dckron/errors.hpp"
#include "dckron/graph_algebra.hpp"
#include "dckron/labeled_matrix.hpp"
#include "dckron/network.hpp"
#include "dckron/pivoted_lu.hpp"
#include "dckron/powerflow.hpp"
#include "dckron/reduction.hpp"
#include "dckron/schur.hpp"
