#pragma once

#include "gpval/building_set.hpp"
#include "gpval/canonical_form.hpp"
#include "gpval/characters.hpp"
#include "gpval/error.hpp"
#include "gpval/formal_sum.hpp"
#include "gpval/hopf.hpp"
#include "gpval/json_io.hpp"
#include "gpval/label.hpp"
#include "gpval/linalg.hpp"
#include "gpval/matroid.hpp"
#include "gpval/matroid_invariants.hpp"
#include "gpval/osp.hpp"
#include "gpval/polynomial.hpp"
#include "gpval/poset_invariants.hpp"
#include "gpval/preposet.hpp"
#include "gpval/rational.hpp"
#include "gpval/submodular_gp.hpp"
#include "gpval/valuation_lab.hpp"
