// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include "assignment.hpp"
#include "clause.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "formula.hpp"
#include "hyper.hpp"
#include "instances.hpp"
#include "literal.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "resolution.hpp"
#include "search.hpp"
#include "simplify.hpp"
#include "weight.hpp"
