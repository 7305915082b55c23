#pragma once

#include "fragpd/characterize.hpp"
#include "fragpd/compare.hpp"
#include "fragpd/edge_list.hpp"
#include "fragpd/expoly.hpp"
#include "fragpd/families.hpp"
#include "fragpd/forts.hpp"
#include "fragpd/gadgets.hpp"
#include "fragpd/graph.hpp"
#include "fragpd/monte_carlo.hpp"
#include "fragpd/observe.hpp"
#include "fragpd/placement.hpp"
#include "fragpd/polynomial.hpp"
