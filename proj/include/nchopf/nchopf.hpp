#pragma once

#include "rational.hpp"
#include "linear_combination.hpp"
#include "word.hpp"
#include "core_algebra.hpp"
#include "io.hpp"
#include "hopf_dif.hpp"
#include "hopf_inv.hpp"
#include "series.hpp"
#include "tree.hpp"
#include "tree_hopf.hpp"
#include "catalan.hpp"
#include "double_tensor.hpp"
#include "verify.hpp"
