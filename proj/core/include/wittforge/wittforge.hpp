#pragma once

#include "wittforge/abelian.hpp"
#include "wittforge/affine.hpp"
#include "wittforge/charge.hpp"
#include "wittforge/config.hpp"
#include "wittforge/error.hpp"
#include "wittforge/expr.hpp"
#include "wittforge/fusion_ring.hpp"
#include "wittforge/integer.hpp"
#include "wittforge/lie.hpp"
#include "wittforge/parse.hpp"
#include "wittforge/qform.hpp"
#include "wittforge/report.hpp"
#include "wittforge/smith.hpp"
#include "wittforge/witt.hpp"
